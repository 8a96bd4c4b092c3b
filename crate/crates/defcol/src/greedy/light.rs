use super::{check_lists, GreedyError};
use crate::colouring::{audit, respects_lists, Colouring, ListAssignment};
use crate::graph::Graph;

enum Step {
    Vertex(usize, Vec<usize>),
    Edge(usize, usize),
}

/// `L`-colouring with defect `ell - k` from `(k + 1)`-lists, provided every subgraph has a
/// vertex of degree at most `k` or an `ell`-light edge.
///
/// Deletes low-degree vertices and light edges until nothing is left, then replays the
/// deletions backwards. A re-inserted vertex takes a list colour unused by its neighbours;
/// a re-inserted edge that overloads an end recolours that end the same way.
pub fn light_edge_colour(
    g: &Graph,
    lists: &ListAssignment,
    k: usize,
    ell: usize,
) -> Result<Colouring, GreedyError> {
    check_lists(g.n(), lists, k + 1)?;
    let ell = ell.max(k);
    let mut rest = g.clone();
    let mut alive = vec![true; g.n()];
    let mut remaining = g.n();
    let mut steps = Vec::with_capacity(g.n() + g.m());
    while remaining > 0 {
        if let Some(v) = (0..g.n()).find(|&v| alive[v] && rest.degree(v) <= k) {
            steps.push(Step::Vertex(v, rest.neighbours(v).collect()));
            rest.isolate(v);
            alive[v] = false;
            remaining -= 1;
            continue;
        }
        let light = rest
            .edges()
            .find(|&(x, y)| rest.degree(x) <= ell && rest.degree(y) <= ell);
        let Some((x, y)) = light else {
            let vertices: Vec<usize> = (0..g.n()).filter(|&v| alive[v]).collect();
            return Err(GreedyError::NoLightEdge {
                k,
                ell,
                vertices,
                edges: rest.edge_list(),
            });
        };
        steps.push(Step::Edge(x, y));
        rest.remove_edge(x, y);
    }

    let defect = ell - k;
    let mut current = Graph::new(g.n());
    let mut colour = vec![usize::MAX; g.n()];
    let free_colour = |current: &Graph, colour: &[usize], v: usize| {
        lists
            .list(v)
            .iter()
            .copied()
            .find(|&c| current.neighbours(v).all(|u| colour[u] != c))
    };
    for step in steps.into_iter().rev() {
        match step {
            Step::Vertex(v, nbrs) => {
                for u in nbrs {
                    current.add_edge(u, v).expect("in range");
                }
                colour[v] = free_colour(&current, &colour, v).ok_or_else(|| {
                    GreedyError::Audit(format!("vertex {v} has no free colour on re-insertion"))
                })?;
            }
            Step::Edge(x, y) => {
                current.add_edge(x, y).expect("in range");
                if colour[x] != colour[y] {
                    continue;
                }
                let same = |v: usize| {
                    current
                        .neighbours(v)
                        .filter(|&u| colour[u] == colour[v])
                        .count()
                };
                for v in [x, y] {
                    if same(v) > defect {
                        colour[v] = free_colour(&current, &colour, v).ok_or_else(|| {
                            GreedyError::Audit(format!(
                                "vertex {v} cannot be recoloured after edge {x}-{y}"
                            ))
                        })?;
                        break;
                    }
                }
            }
        }
    }
    let colouring = Colouring(colour);
    let cert = audit(g, &colouring)?;
    if cert.defect > defect || !respects_lists(&colouring, lists) {
        return Err(GreedyError::Audit(format!(
            "defect {} exceeds {defect} or a list is broken",
            cert.defect
        )));
    }
    Ok(colouring)
}
