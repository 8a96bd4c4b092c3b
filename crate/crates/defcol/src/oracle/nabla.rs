use num_rational::Ratio;

use super::{check_cap, Caps, OracleError};
use crate::graph::Graph;

/// Largest average degree of a graph whose 1-subdivision is a subgraph of `g`.
///
/// For each branch set the best such graph is a maximum matching between branch pairs
/// and the outside vertices adjacent to both.
pub fn nabla_exact(g: &Graph, caps: &Caps) -> Result<Ratio<i64>, OracleError> {
    check_cap("shallow topological density", g.n(), caps.nabla.min(16))?;
    let n = g.n();
    let mut best = Ratio::from_integer(0);
    for mask in 1u32..(1 << n) {
        let branch: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let mut pairs: Vec<Vec<usize>> = Vec::new();
        for (i, &a) in branch.iter().enumerate() {
            for &b in &branch[i + 1..] {
                let middles: Vec<usize> = (0..n)
                    .filter(|&w| mask >> w & 1 == 0 && g.has_edge(a, w) && g.has_edge(b, w))
                    .collect();
                if !middles.is_empty() {
                    pairs.push(middles);
                }
            }
        }
        let edges = matching(&pairs, n);
        let r = Ratio::new(2 * edges as i64, branch.len() as i64);
        if r > best {
            best = r;
        }
    }
    Ok(best)
}

fn matching(left: &[Vec<usize>], right: usize) -> usize {
    let mut owner = vec![usize::MAX; right];
    let mut size = 0;
    for l in 0..left.len() {
        let mut seen = vec![false; right];
        if augment(l, left, &mut owner, &mut seen) {
            size += 1;
        }
    }
    size
}

fn augment(l: usize, left: &[Vec<usize>], owner: &mut [usize], seen: &mut [bool]) -> bool {
    for &r in &left[l] {
        if !seen[r] {
            seen[r] = true;
            if owner[r] == usize::MAX || augment(owner[r], left, owner, seen) {
                owner[r] = l;
                return true;
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subdivided_triangle() {
        let caps = Caps::default();
        assert_eq!(
            nabla_exact(&Graph::cycle(6), &caps),
            Ok(Ratio::from_integer(2))
        );
        assert_eq!(
            nabla_exact(&Graph::path(3), &caps),
            Ok(Ratio::from_integer(1))
        );
        assert_eq!(
            nabla_exact(&Graph::new(4), &caps),
            Ok(Ratio::from_integer(0))
        );
        assert!(nabla_exact(&Graph::path(11), &caps).is_err());
    }
}
