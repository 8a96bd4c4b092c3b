use std::collections::HashSet;

use super::{check_cap, Caps, OracleError};
use crate::colouring::{Colouring, ListAssignment};
use crate::graph::Graph;

/// The constraint on monochromatic structure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Limit {
    /// Every vertex has at most this many neighbours of its own colour.
    Defect(usize),
    /// Every monochromatic component has at most this many vertices.
    Clustering(usize),
}

struct Search {
    adj: Vec<u64>,
    order: Vec<usize>,
    limit: Limit,
    /// Candidate colours per vertex when lists are given.
    lists: Option<Vec<Vec<usize>>>,
    k: usize,
    col: Vec<usize>,
    same: Vec<usize>,
    class: Vec<u64>,
    /// `open[pos]`: vertices not yet assigned when the search reaches `order[pos]`.
    open: Vec<u64>,
    failed: HashSet<Vec<u32>>,
}

impl Search {
    fn new(g: &Graph, limit: Limit, k: usize, lists: Option<Vec<Vec<usize>>>) -> Self {
        let n = g.n();
        let adj: Vec<u64> = g
            .vertices()
            .map(|v| g.neighbours(v).fold(0u64, |m, u| m | 1 << u))
            .collect();
        let classes = match &lists {
            Some(l) => l.iter().flatten().max().map_or(0, |&c| c + 1),
            None => k,
        };
        let order = search_order(g);
        let mut open = vec![0u64; n + 1];
        for pos in (0..n).rev() {
            open[pos] = open[pos + 1] | 1 << order[pos];
        }
        Search {
            order,
            open,
            failed: HashSet::new(),
            adj,
            limit,
            lists,
            k,
            col: vec![usize::MAX; n],
            same: vec![0; n],
            class: vec![0; classes],
        }
    }

    fn component_size(&self, v: usize, c: usize) -> usize {
        self.component_mask(v, self.class[c] | 1 << v).count_ones() as usize
    }

    /// Vertices reachable from `v` inside `mask`, which must contain `v`.
    fn component_mask(&self, v: usize, mask: u64) -> u64 {
        let mut comp = 1u64 << v;
        let mut frontier = comp;
        while frontier != 0 {
            let mut next = 0;
            let mut f = frontier;
            while f != 0 {
                let u = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[u];
            }
            next &= mask & !comp;
            comp |= next;
            frontier = next;
        }
        comp
    }

    /// Whether `v` could take colour `c` now without breaking the limit.
    fn feasible(&self, v: usize, c: usize) -> bool {
        match self.limit {
            Limit::Defect(d) => {
                let nb = self.adj[v] & self.class[c];
                if nb.count_ones() as usize > d {
                    return false;
                }
                let mut f = nb;
                while f != 0 {
                    let u = f.trailing_zeros() as usize;
                    f &= f - 1;
                    if self.same[u] + 1 > d {
                        return false;
                    }
                }
                true
            }
            Limit::Clustering(cap) => self.component_size(v, c) <= cap,
        }
    }

    fn assign(&mut self, v: usize, c: usize) {
        if let Limit::Defect(_) = self.limit {
            let nb = self.adj[v] & self.class[c];
            let mut f = nb;
            while f != 0 {
                let u = f.trailing_zeros() as usize;
                f &= f - 1;
                self.same[u] += 1;
            }
            self.same[v] = nb.count_ones() as usize;
        }
        self.col[v] = c;
        self.class[c] |= 1 << v;
    }

    fn unassign(&mut self, v: usize) {
        let c = self.col[v];
        self.class[c] &= !(1 << v);
        if let Limit::Defect(_) = self.limit {
            let mut f = self.adj[v] & self.class[c];
            while f != 0 {
                let u = f.trailing_zeros() as usize;
                f &= f - 1;
                self.same[u] -= 1;
            }
            self.same[v] = 0;
        }
        self.col[v] = usize::MAX;
    }

    /// Everything the unassigned vertices can still observe: the position, and for each
    /// assigned vertex with an unassigned neighbour its colour together with its own-colour
    /// degree (defect) or the size and frontier representative of its monochromatic
    /// component (clustering).
    fn frontier_key(&self, pos: usize) -> Vec<u32> {
        let open = self.open[pos];
        let frontier = self.order[..pos].iter().fold(0u64, |m, &v| {
            if self.adj[v] & open != 0 {
                m | 1 << v
            } else {
                m
            }
        });
        let mut key = vec![pos as u32];
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            let c = self.col[v];
            key.extend([v as u32, c as u32]);
            match self.limit {
                Limit::Defect(_) => key.push(self.same[v] as u32),
                Limit::Clustering(_) => {
                    let comp = self.component_mask(v, self.class[c]);
                    key.extend([comp.count_ones(), (comp & frontier).trailing_zeros()]);
                }
            }
        }
        key
    }

    fn run(&mut self, pos: usize, used: usize) -> bool {
        if pos == self.order.len() {
            return true;
        }
        let key = self.frontier_key(pos);
        if self.failed.contains(&key) {
            return false;
        }
        let v = self.order[pos];
        let candidates: Vec<usize> = match &self.lists {
            Some(l) => l[v].clone(),
            None => (0..self.k.min(used + 1)).collect(),
        };
        for c in candidates {
            if self.feasible(v, c) {
                self.assign(v, c);
                if self.run(pos + 1, used.max(c + 1)) {
                    return true;
                }
                self.unassign(v);
            }
        }
        if self.failed.len() < MEMO_LIMIT {
            self.failed.insert(key);
        }
        false
    }
}

/// Failed search states remembered at most.
const MEMO_LIMIT: usize = 1 << 22;

/// Highest degree first, then repeatedly the vertex with most already-ordered neighbours.
fn search_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (links[v], g.degree(v), std::cmp::Reverse(v)))
            .unwrap_or(0);
        placed[v] = true;
        order.push(v);
        for u in g.neighbours(v) {
            links[u] += 1;
        }
    }
    order
}

/// A `k`-colouring within `limit`, the first found in the canonical search order.
pub fn colourable(
    g: &Graph,
    k: usize,
    limit: Limit,
    caps: &Caps,
) -> Result<Option<Colouring>, OracleError> {
    check_cap("colouring search", g.n(), caps.colouring.min(64))?;
    if g.n() == 0 {
        return Ok(Some(Colouring(Vec::new())));
    }
    if k == 0 {
        return Ok(None);
    }
    let mut s = Search::new(g, limit, k, None);
    Ok(s.run(0, 0).then_some(Colouring(s.col)))
}

fn min_colours(g: &Graph, limit: Limit, caps: &Caps) -> Result<usize, OracleError> {
    check_cap("colouring search", g.n(), caps.colouring.min(64))?;
    for k in 0..=g.n() {
        if colourable(g, k, limit, caps)?.is_some() {
            return Ok(k);
        }
    }
    Ok(g.n())
}

/// Least `k` such that `g` has a `k`-colouring with defect at most `d`.
pub fn min_colours_defect(g: &Graph, d: usize, caps: &Caps) -> Result<usize, OracleError> {
    min_colours(g, Limit::Defect(d), caps)
}

/// Least `k` such that `g` has a `k`-colouring with clustering at most `c` (`c >= 1`).
pub fn min_colours_clustering(g: &Graph, c: usize, caps: &Caps) -> Result<usize, OracleError> {
    min_colours(g, Limit::Clustering(c.max(1)), caps)
}

/// An `L`-colouring with defect at most `d`, if one exists.
pub fn list_colourable_with_defect(
    g: &Graph,
    lists: &ListAssignment,
    d: usize,
    caps: &Caps,
) -> Result<Option<Colouring>, OracleError> {
    check_cap("list colouring search", g.n(), caps.colouring.min(64))?;
    if lists.len() != g.n() {
        return Err(OracleError::ListLength {
            got: lists.len(),
            n: g.n(),
        });
    }
    let l: Vec<Vec<usize>> = lists
        .0
        .iter()
        .map(|s| s.iter().copied().collect())
        .collect();
    let mut s = Search::new(g, Limit::Defect(d), 0, Some(l));
    Ok(s.run(0, 0).then_some(Colouring(s.col)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colouring::audit;

    #[test]
    fn small_exact_values() {
        let caps = Caps::default();
        assert_eq!(min_colours_defect(&Graph::new(5), 0, &caps), Ok(1));
        assert_eq!(
            min_colours_defect(&Graph::complete_bipartite(1, 3), 2, &caps),
            Ok(2)
        );
        assert_eq!(
            min_colours_defect(&Graph::complete_bipartite(1, 3), 3, &caps),
            Ok(1)
        );
        assert_eq!(min_colours_clustering(&Graph::path(4), 3, &caps), Ok(2));
        assert_eq!(min_colours_clustering(&Graph::complete(6), 1, &caps), Ok(6));
        assert_eq!(min_colours_defect(&Graph::new(0), 0, &caps), Ok(0));
    }

    #[test]
    fn witness_meets_limit() {
        let g = Graph::grid(4, 4);
        let w = colourable(
            &Graph::complete(3),
            2,
            Limit::Clustering(1),
            &Caps::default(),
        )
        .unwrap();
        assert!(w.is_none());
        let w = colourable(&g, 2, Limit::Clustering(1), &Caps::default())
            .unwrap()
            .unwrap();
        assert_eq!(audit(&g, &w).unwrap().clustering, 1);
        let w = colourable(&g, 2, Limit::Defect(1), &Caps::default())
            .unwrap()
            .unwrap();
        assert!(audit(&g, &w).unwrap().defect <= 1);
    }

    #[test]
    fn refuses_above_cap() {
        let r = min_colours_defect(&Graph::path(30), 0, &Caps::default());
        assert_eq!(
            r,
            Err(OracleError::CapExceeded {
                what: "colouring search",
                size: 30,
                cap: 24
            })
        );
    }

    #[test]
    fn lists_are_respected() {
        let lists = ListAssignment::new(vec![[0].into(), [0].into(), [0, 1].into()]).unwrap();
        let g = Graph::path(3);
        assert_eq!(
            list_colourable_with_defect(&g, &lists, 0, &Caps::default()),
            Ok(None)
        );
        let w = list_colourable_with_defect(&g, &lists, 1, &Caps::default())
            .unwrap()
            .unwrap();
        assert_eq!(w, Colouring(vec![0, 0, 1]));
    }
}
