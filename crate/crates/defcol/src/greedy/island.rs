use super::{check_lists, GreedyError};
use crate::colouring::{Colouring, ListAssignment};
use crate::graph::Graph;

/// An island colouring together with the islands in peeling order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IslandColouring {
    pub colouring: Colouring,
    pub islands: Vec<Vec<usize>>,
}

impl IslandColouring {
    /// Island index of every vertex.
    pub fn island_of(&self) -> Vec<usize> {
        let mut owner = vec![usize::MAX; self.colouring.len()];
        for (i, island) in self.islands.iter().enumerate() {
            for &v in island {
                owner[v] = i;
            }
        }
        owner
    }
}

/// `(k + 1)`-list colouring by island peeling.
///
/// `finder(g, alive)` must return a non-empty `k`-island of the subgraph induced by the
/// alive vertices. Islands are coloured in reverse peeling order; each island vertex avoids
/// the colours of its neighbours outside the island, so every monochromatic component
/// stays inside one island.
pub fn island_colour<F>(
    g: &Graph,
    lists: &ListAssignment,
    k: usize,
    mut finder: F,
) -> Result<IslandColouring, GreedyError>
where
    F: FnMut(&Graph, &[bool]) -> Result<Vec<usize>, GreedyError>,
{
    check_lists(g.n(), lists, k + 1)?;
    let mut alive = vec![true; g.n()];
    let mut remaining = g.n();
    let mut islands = Vec::new();
    while remaining > 0 {
        let mut island = finder(g, &alive)?;
        island.sort_unstable();
        island.dedup();
        if island.is_empty() {
            return Err(GreedyError::EmptyIsland { alive: remaining });
        }
        if let Some(&vertex) = island.iter().find(|&&v| v >= g.n() || !alive[v]) {
            return Err(GreedyError::IslandOutside { vertex });
        }
        for &v in &island {
            alive[v] = false;
        }
        for &v in &island {
            let outside = g.neighbours(v).filter(|&u| alive[u]).count();
            if outside > k {
                return Err(GreedyError::NotAnIsland {
                    k,
                    vertex: v,
                    outside,
                });
            }
        }
        remaining -= island.len();
        islands.push(island);
    }

    let mut colour = vec![usize::MAX; g.n()];
    let mut inside = vec![false; g.n()];
    for island in islands.iter().rev() {
        for &v in island {
            inside[v] = true;
        }
        for &v in island {
            let chosen = lists
                .list(v)
                .iter()
                .copied()
                .find(|&c| g.neighbours(v).all(|u| inside[u] || colour[u] != c))
                .ok_or_else(|| {
                    GreedyError::Audit(format!("island vertex {v} sees every list colour outside"))
                })?;
            colour[v] = chosen;
        }
        for &v in island {
            inside[v] = false;
        }
    }
    Ok(IslandColouring {
        colouring: Colouring(colour),
        islands,
    })
}

/// Island finder returning the alive vertex of least degree (lowest id on ties), so that
/// a `k`-degenerate graph is peeled one vertex at a time.
pub fn degeneracy_islands(g: &Graph, alive: &[bool]) -> Result<Vec<usize>, GreedyError> {
    let best = g
        .vertices()
        .filter(|&v| alive[v])
        .min_by_key(|&v| (g.neighbours(v).filter(|&u| alive[u]).count(), v));
    Ok(best.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colouring::audit;

    #[test]
    fn degenerate_graphs_colour_properly() {
        let g = Graph::grid(4, 5);
        let out =
            island_colour(&g, &ListAssignment::uniform(20, 3), 2, degeneracy_islands).unwrap();
        assert_eq!(audit(&g, &out.colouring).unwrap().clustering, 1);
        assert_eq!(out.islands.len(), 20);
    }

    #[test]
    fn empty_graph() {
        let g = Graph::new(0);
        let out = island_colour(&g, &ListAssignment::uniform(0, 1), 0, degeneracy_islands).unwrap();
        assert!(out.colouring.is_empty());
    }

    #[test]
    fn rejects_non_islands() {
        let g = Graph::complete(5);
        let err = island_colour(&g, &ListAssignment::uniform(5, 3), 2, |_, alive| {
            Ok((0..5).filter(|&v| alive[v]).take(1).collect())
        })
        .unwrap_err();
        assert_eq!(
            err,
            GreedyError::NotAnIsland {
                k: 2,
                vertex: 0,
                outside: 4
            }
        );
    }
}
