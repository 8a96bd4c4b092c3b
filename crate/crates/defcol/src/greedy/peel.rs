use super::{check_lists, GreedyError};
use crate::colouring::{audit, Colouring, ListAssignment};
use crate::graph::Graph;

/// Colours by peeling layers for graphs with no subgraph isomorphic to a tree on
/// `tree_order` vertices with radius `radius`.
///
/// Layer `i < radius` holds every remaining vertex with at most `tree_order - 2` remaining
/// neighbours; the last layer takes the rest. Layer `i` gets colour `i`. The hypothesis is
/// not checked up front: if the last layer has a vertex of degree above `tree_order - 2`
/// the error names it.
pub fn tree_subgraph_peel(
    g: &Graph,
    tree_order: usize,
    radius: usize,
) -> Result<Colouring, GreedyError> {
    let limit = tree_order.saturating_sub(2);
    let radius = radius.max(1);
    let mut layer = vec![radius - 1; g.n()];
    let mut alive = vec![true; g.n()];
    for i in 0..radius - 1 {
        let low: Vec<usize> = g
            .vertices()
            .filter(|&v| alive[v] && g.neighbours(v).filter(|&u| alive[u]).count() <= limit)
            .collect();
        for v in low {
            layer[v] = i;
            alive[v] = false;
        }
    }
    let colouring = Colouring(layer);
    let cert = audit(g, &colouring)?;
    if cert.defect > limit {
        let (vertex, degree) = g
            .vertices()
            .map(|v| {
                (
                    v,
                    g.neighbours(v)
                        .filter(|&u| colouring.colour(u) == colouring.colour(v))
                        .count(),
                )
            })
            .find(|&(_, d)| d > limit)
            .expect("the audit found an overloaded vertex");
        return Err(GreedyError::TreeHypothesis {
            vertex,
            degree,
            limit,
        });
    }
    Ok(colouring)
}

/// `(6k + 1)`-list colouring with clustering `max(genus, 1)` for graphs of
/// `genus`-thickness at most `k`.
///
/// Peels vertices of degree at most `6k` (lowest id first) until at most `6k * genus`
/// remain. Those are coloured first, each with the list colour used least so far among
/// them; the peeled vertices then return in reverse order, each avoiding its neighbours.
pub fn thickness_peel(
    g: &Graph,
    lists: &ListAssignment,
    k: usize,
    genus: usize,
) -> Result<Colouring, GreedyError> {
    let limit = 6 * k;
    check_lists(g.n(), lists, limit + 1)?;
    let mut rest = g.clone();
    let mut alive = vec![true; g.n()];
    let mut remaining = g.n();
    let mut peeled = Vec::new();
    while remaining > limit * genus {
        let v = (0..g.n())
            .find(|&v| alive[v] && rest.degree(v) <= limit)
            .ok_or(GreedyError::ThicknessHypothesis { remaining, limit })?;
        peeled.push(v);
        rest.isolate(v);
        alive[v] = false;
        remaining -= 1;
    }
    let mut colour = vec![usize::MAX; g.n()];
    let mut uses = std::collections::BTreeMap::<usize, usize>::new();
    for v in (0..g.n()).filter(|&v| alive[v]) {
        let c = lists
            .list(v)
            .iter()
            .copied()
            .min_by_key(|c| (uses.get(c).copied().unwrap_or(0), *c))
            .expect("lists are non-empty");
        colour[v] = c;
        *uses.entry(c).or_insert(0) += 1;
    }
    for &v in peeled.iter().rev() {
        colour[v] = lists
            .list(v)
            .iter()
            .copied()
            .find(|&c| g.neighbours(v).all(|u| colour[u] != c))
            .ok_or_else(|| {
                GreedyError::Audit(format!("peeled vertex {v} sees every list colour"))
            })?;
    }
    let colouring = Colouring(colour);
    let cert = audit(g, &colouring)?;
    if cert.clustering > genus.max(1) {
        return Err(GreedyError::Audit(format!(
            "clustering {} exceeds {}",
            cert.clustering,
            genus.max(1)
        )));
    }
    Ok(colouring)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{standard_defect, thickness_gadgets};

    #[test]
    fn low_degree_graph_gets_one_colour() {
        let c = tree_subgraph_peel(&Graph::cycle(8), 4, 1).unwrap();
        assert_eq!(c.colours_used().len(), 1);
    }

    #[test]
    fn standard_example_avoids_binary_tree() {
        let g = standard_defect(2, 5);
        let c = tree_subgraph_peel(&g, 15, 3).unwrap();
        assert!(c.colours_used().len() <= 3);
        assert!(audit(&g, &c).unwrap().defect <= 13);
    }

    #[test]
    fn star_exposes_false_hypothesis() {
        let err = tree_subgraph_peel(&Graph::complete_bipartite(1, 5), 4, 1).unwrap_err();
        assert_eq!(
            err,
            GreedyError::TreeHypothesis {
                vertex: 0,
                degree: 5,
                limit: 2
            }
        );
    }

    #[test]
    fn thickness_two_gadget() {
        let w = thickness_gadgets(6);
        let n = w.graph.n();
        let c = thickness_peel(&w.graph, &ListAssignment::uniform(n, 13), 2, 0).unwrap();
        assert_eq!(audit(&w.graph, &c).unwrap().clustering, 1);
        let g = Graph::grid(6, 6);
        let c = thickness_peel(&g, &ListAssignment::uniform(36, 7), 1, 0).unwrap();
        assert_eq!(audit(&g, &c).unwrap().clustering, 1);
    }
}
