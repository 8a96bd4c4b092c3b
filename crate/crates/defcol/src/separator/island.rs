use num_rational::Ratio;

use super::{fragment_epsilon, SeparatorError, SeparatorOracle};
use crate::graph::Graph;

/// A `k`-island extracted from sparsity and separators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparatorIsland {
    /// Island vertices, sorted.
    pub island: Vec<usize>,
    /// The fragment component it was peeled from.
    pub component: Vec<usize>,
    /// Closed-form size limit for the island.
    pub limit: usize,
}

/// Whether `edges < (k + 1 - alpha) * vertices`.
pub(crate) fn density_holds(edges: usize, vertices: usize, k: usize, alpha: Ratio<i64>) -> bool {
    Ratio::from_integer(edges as i64)
        < (Ratio::from_integer(k as i64 + 1) - alpha) * Ratio::from_integer(vertices as i64)
}

/// A `k`-island of size at most `ceil(2 (c (k + 1) / (alpha (2^beta - 1)))^(1/beta))` in a
/// graph with fewer than `(k + 1 - alpha) n` edges.
///
/// Fragments with `eps = alpha / (k + 1)`, takes the first component `K` (by least vertex)
/// with fewer than `(k + 1) |K|` edges touching it, then strips vertices with more than `k`
/// neighbours outside `K`.
pub fn separator_island<O: SeparatorOracle + ?Sized>(
    g: &Graph,
    oracle: &O,
    k: usize,
    alpha: Ratio<i64>,
) -> Result<SeparatorIsland, SeparatorError> {
    if !density_holds(g.m(), g.n(), k, alpha) {
        return Err(SeparatorError::Density {
            edges: g.m(),
            vertices: g.n(),
            limit: format!("({} - {alpha}) * {}", k + 1, g.n()),
        });
    }
    let limit = oracle.bound().island_limit(k, alpha)?;
    let frag = fragment_epsilon(g, oracle, alpha / Ratio::from_integer(k as i64 + 1))?;
    let mut alive = vec![true; g.n()];
    for &v in &frag.separator {
        alive[v] = false;
    }
    let touching = |comp: &[usize], inside: &[bool]| -> usize {
        comp.iter()
            .map(|&v| g.neighbours(v).filter(|&u| !inside[u] || u > v).count())
            .sum()
    };
    let mut inside = vec![false; g.n()];
    let mut chosen = None;
    for comp in g.components_within(&alive) {
        comp.iter().for_each(|&v| inside[v] = true);
        if touching(&comp, &inside) < (k + 1) * comp.len() {
            chosen = Some(comp);
            break;
        }
        comp.iter().for_each(|&v| inside[v] = false);
    }
    let component = chosen.ok_or(SeparatorError::NoSparseComponent)?;
    let mut island = component.clone();
    loop {
        let outside = |v: usize, inside: &[bool]| g.neighbours(v).filter(|&u| !inside[u]).count();
        match island.iter().position(|&v| outside(v, &inside) > k) {
            Some(i) => {
                inside[island[i]] = false;
                island.remove(i);
            }
            None => break,
        }
    }
    if island.is_empty() {
        return Err(SeparatorError::EmptyIsland);
    }
    if island.len() > limit {
        return Err(SeparatorError::IslandSize {
            size: island.len(),
            limit,
        });
    }
    Ok(SeparatorIsland {
        island,
        component,
        limit,
    })
}

#[cfg(test)]
mod tests {
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::constructions::random_triangulation;
    use crate::separator::{BfsLevelOracle, CentroidOracle};

    fn is_island(g: &Graph, island: &[usize], k: usize) -> bool {
        !island.is_empty()
            && island.iter().all(|&v| {
                g.neighbours(v)
                    .filter(|u| island.binary_search(u).is_err())
                    .count()
                    <= k
            })
    }

    #[test]
    fn trees_give_one_islands() {
        let g = Graph::path(500);
        let out = separator_island(&g, &CentroidOracle::default(), 1, Ratio::new(1, 2)).unwrap();
        assert!(is_island(&g, &out.island, 1));
        assert!(out.island.len() <= out.limit);
    }

    #[test]
    fn dense_graph_is_refused() {
        let err = separator_island(
            &Graph::complete(3),
            &CentroidOracle::default(),
            1,
            Ratio::from_integer(1),
        )
        .unwrap_err();
        assert!(matches!(
            err,
            SeparatorError::Density {
                edges: 3,
                vertices: 3,
                ..
            }
        ));
    }

    #[test]
    fn planar_three_islands() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let t = random_triangulation(200, 400, &mut rng);
        let oracle = BfsLevelOracle::planar();
        let out = separator_island(t.graph(), &oracle, 3, Ratio::new(1, 2)).unwrap();
        assert!(is_island(t.graph(), &out.island, 3));
        // 2 * 8 * 64 * (3 + 2 sqrt 2), rounded up.
        assert_eq!(out.limit, 5969);
        assert!(out.island.len() <= out.limit);
    }
}
