use num_rational::Ratio;

use super::{SeparatorError, SeparatorOracle};
use crate::graph::Graph;

/// Outcome of a fragmentation run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fragmentation {
    /// Removed vertices, sorted.
    pub separator: Vec<usize>,
    /// Target component size.
    pub target: usize,
    /// Size of the largest component left.
    pub largest: usize,
    /// Number of separator requests made to the oracle.
    pub oracle_calls: usize,
}

/// Removes separators until every component has at most `target` vertices.
///
/// Each component above the target is handed to the oracle; the answer must be balanced
/// within that component and within the oracle's declared size, otherwise the run stops
/// with the offending component. The total is checked against
/// `c 2^beta n / ((2^beta - 1) target^beta)`.
pub fn fragment<O: SeparatorOracle + ?Sized>(
    g: &Graph,
    oracle: &O,
    target: usize,
) -> Result<Fragmentation, SeparatorError> {
    if target == 0 {
        return Err(SeparatorError::TargetSize);
    }
    let bound = oracle.bound();
    let mut removed = vec![false; g.n()];
    let mut stack: Vec<Vec<usize>> = g.components();
    stack.reverse();
    let mut largest = 0;
    let mut oracle_calls = 0;
    while let Some(comp) = stack.pop() {
        if comp.len() <= target {
            largest = largest.max(comp.len());
            continue;
        }
        let sub = g.induced_subgraph(&comp);
        let local = oracle.find(&sub.graph)?;
        oracle_calls += 1;
        if let Some(&vertex) = local.iter().find(|&&v| v >= comp.len()) {
            return Err(SeparatorError::OutOfRange {
                vertex,
                n: comp.len(),
            });
        }
        let mut separator: Vec<usize> = local.iter().map(|&v| sub.host[v]).collect();
        separator.sort_unstable();
        separator.dedup();
        if !bound.admits(separator.len(), comp.len()) {
            return Err(SeparatorError::Oversized {
                vertices: comp,
                separator,
                limit: format!("{:.3}", bound.separator_limit(sub.graph.n())),
            });
        }
        for &v in &separator {
            removed[v] = true;
        }
        let mut alive = vec![false; g.n()];
        for &v in &comp {
            alive[v] = !removed[v];
        }
        let pieces = g.components_within(&alive);
        if let Some(piece) = pieces.iter().find(|p| 2 * p.len() > comp.len()) {
            return Err(SeparatorError::Unbalanced {
                largest: piece.len(),
                vertices: comp,
                separator,
            });
        }
        stack.extend(pieces.into_iter().rev());
    }
    let separator: Vec<usize> = g.vertices().filter(|&v| removed[v]).collect();
    if !bound.admits_fragment(separator.len(), g.n(), target) {
        return Err(SeparatorError::FragmentBound {
            size: separator.len(),
            limit: format!("{:.3}", bound.fragment_limit(g.n(), target)),
        });
    }
    Ok(Fragmentation {
        separator,
        target,
        largest,
        oracle_calls,
    })
}

/// Fragmentation removing at most `eps * n` vertices, with the target component size set to
/// `ceil(2 (c / (eps (2^beta - 1)))^(1/beta))`.
pub fn fragment_epsilon<O: SeparatorOracle + ?Sized>(
    g: &Graph,
    oracle: &O,
    eps: Ratio<i64>,
) -> Result<Fragmentation, SeparatorError> {
    let target = oracle.bound().component_limit(eps)?;
    let out = fragment(g, oracle, target)?;
    if Ratio::from_integer(out.separator.len() as i64) > eps * Ratio::from_integer(g.n() as i64) {
        return Err(SeparatorError::FragmentBound {
            size: out.separator.len(),
            limit: format!("{eps} * {}", g.n()),
        });
    }
    Ok(out)
}
