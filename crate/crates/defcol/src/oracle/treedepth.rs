use std::collections::HashMap;

use super::{check_cap, Caps, OracleError};
use crate::graph::Graph;

fn masks(g: &Graph) -> Vec<u32> {
    g.vertices()
        .map(|v| g.neighbours(v).fold(0u32, |m, u| m | 1 << u))
        .collect()
}

fn components(adj: &[u32], set: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut left = set;
    while left != 0 {
        let mut comp = left & left.wrapping_neg();
        loop {
            let mut grown = comp;
            let mut f = comp;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                grown |= adj[v] & set;
            }
            if grown == comp {
                break;
            }
            comp = grown;
        }
        out.push(comp);
        left &= !comp;
    }
    out
}

fn td_of(adj: &[u32], set: u32, memo: &mut HashMap<u32, usize>) -> usize {
    if set == 0 {
        return 0;
    }
    if let Some(&d) = memo.get(&set) {
        return d;
    }
    let comps = components(adj, set);
    let d = if comps.len() > 1 {
        comps
            .iter()
            .map(|&c| td_of(adj, c, memo))
            .max()
            .unwrap_or(0)
    } else {
        let mut best = usize::MAX;
        let mut f = set;
        while f != 0 {
            let v = f.trailing_zeros();
            f &= f - 1;
            best = best.min(1 + td_of(adj, set & !(1 << v), memo));
        }
        best
    };
    memo.insert(set, d);
    d
}

/// Tree-depth: the largest connected tree-depth over components.
pub fn tree_depth(g: &Graph, caps: &Caps) -> Result<usize, OracleError> {
    check_cap("tree-depth", g.n(), caps.tree_depth.min(32))?;
    let adj = masks(g);
    let all = if g.n() == 32 {
        u32::MAX
    } else {
        (1u32 << g.n()) - 1
    };
    Ok(td_of(&adj, all, &mut HashMap::new()))
}

/// Minimum depth of a rooted tree whose closure contains `g`.
///
/// Equals the tree-depth, plus one when two components both attain it.
pub fn connected_tree_depth(g: &Graph, caps: &Caps) -> Result<usize, OracleError> {
    check_cap("connected tree-depth", g.n(), caps.tree_depth.min(32))?;
    let adj = masks(g);
    let all = if g.n() == 32 {
        u32::MAX
    } else {
        (1u32 << g.n()) - 1
    };
    let mut memo = HashMap::new();
    let depths: Vec<usize> = components(&adj, all)
        .into_iter()
        .map(|c| td_of(&adj, c, &mut memo))
        .collect();
    let top = depths.iter().copied().max().unwrap_or(0);
    let at_top = depths.iter().filter(|&&d| d == top).count();
    Ok(if at_top >= 2 { top + 1 } else { top })
}

/// Exact treewidth by dynamic programming over vertex subsets.
pub fn treewidth_exact(g: &Graph, caps: &Caps) -> Result<usize, OracleError> {
    check_cap("treewidth", g.n(), caps.tree_depth.min(20))?;
    let n = g.n();
    if n == 0 {
        return Ok(0);
    }
    let adj = masks(g);
    let full = (1u32 << n) - 1;
    // Vertices outside `set + v` reachable from v through `set`.
    let q = |set: u32, v: usize| -> u32 {
        let mut reach = 1u32 << v;
        loop {
            let mut grown = reach;
            let mut f = reach & (set | 1 << v);
            while f != 0 {
                let u = f.trailing_zeros() as usize;
                f &= f - 1;
                grown |= adj[u];
            }
            grown &= full;
            if grown == reach {
                break;
            }
            reach = grown;
        }
        reach & !(set | 1 << v)
    };
    let mut tw = vec![i32::MAX; 1 << n];
    tw[0] = -1;
    for set in 1..=full {
        let mut f = set;
        let mut best = i32::MAX;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            let rest = set & !(1 << v);
            let val = tw[rest as usize].max(q(rest, v).count_ones() as i32);
            best = best.min(val);
        }
        tw[set as usize] = best;
    }
    Ok(tw[full as usize].max(0) as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_depths() {
        let caps = Caps::default();
        assert_eq!(connected_tree_depth(&Graph::new(1), &caps), Ok(1));
        assert_eq!(connected_tree_depth(&Graph::new(2), &caps), Ok(2));
        assert_eq!(tree_depth(&Graph::new(2), &caps), Ok(1));
        assert_eq!(connected_tree_depth(&Graph::complete(5), &caps), Ok(5));
        assert_eq!(connected_tree_depth(&Graph::path(7), &caps), Ok(3));
        assert_eq!(
            connected_tree_depth(&Graph::complete_bipartite(2, 5), &caps),
            Ok(3)
        );
    }

    #[test]
    fn treewidth_values() {
        let caps = Caps::default();
        assert_eq!(treewidth_exact(&Graph::path(6), &caps), Ok(1));
        assert_eq!(treewidth_exact(&Graph::cycle(6), &caps), Ok(2));
        assert_eq!(treewidth_exact(&Graph::complete(5), &caps), Ok(4));
        assert_eq!(treewidth_exact(&Graph::grid(3, 3), &caps), Ok(3));
        assert_eq!(
            treewidth_exact(&Graph::complete_bipartite(3, 3), &caps),
            Ok(3)
        );
        assert_eq!(treewidth_exact(&Graph::new(3), &caps), Ok(0));
    }
}
