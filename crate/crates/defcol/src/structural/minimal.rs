use std::collections::BTreeSet;

use super::StructuralError;
use crate::colouring::Colouring;
use crate::graph::{blocks_and_cutvertices, Graph};

/// A minimal connected induced subgraph containing a terminal set, with a two-colouring of
/// clustering at most `ceil(|terminals| / 2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalConnected {
    /// Vertices of the subgraph, sorted.
    pub vertices: Vec<usize>,
    /// Colours in 0 and 1, aligned with `vertices`.
    pub colouring: Colouring,
}

/// Shrinks the component holding `terminals` to a minimal connected induced subgraph and
/// two-colours it by peeling leaf blocks.
///
/// Non-terminals are deleted, lowest id first, while the rest stays connected. While
/// non-terminals remain, the leaf block with fewest vertices besides its cut vertex `v` is
/// set aside; `v` joins the terminals. The final all-terminal graph is split in half by id,
/// and each set-aside block takes the colour opposite its cut vertex.
pub fn minimal_connected_subgraph(
    g: &Graph,
    terminals: &[usize],
) -> Result<MinimalConnected, StructuralError> {
    let wanted: BTreeSet<usize> = terminals.iter().copied().collect();
    let Some(&first) = wanted.iter().next() else {
        return Err(StructuralError::Parameter(
            "the terminal set is empty".into(),
        ));
    };
    if let Some(&v) = wanted.iter().find(|&&v| v >= g.n()) {
        return Err(StructuralError::Parameter(format!(
            "terminal {v} out of range"
        )));
    }
    let reach = g.bfs(first);
    if wanted.iter().any(|&v| reach[v].is_none()) {
        return Err(StructuralError::TerminalsSplit(
            wanted.into_iter().collect(),
        ));
    }
    let mut keep = vec![false; g.n()];
    for v in g.vertices().filter(|&v| reach[v].is_some()) {
        keep[v] = true;
    }
    loop {
        let mut changed = false;
        for v in g.vertices() {
            if keep[v] && !wanted.contains(&v) {
                keep[v] = false;
                if g.components_within(&keep).len() == 1 {
                    changed = true;
                } else {
                    keep[v] = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    let vertices: Vec<usize> = g.vertices().filter(|&v| keep[v]).collect();
    let k = wanted.len();
    let sub = g.induced_subgraph(&vertices);
    if let Some(v) = sub.graph.vertices().find(|&v| sub.graph.degree(v) > k) {
        return Err(StructuralError::Internal(format!(
            "vertex {} has degree above {k}",
            vertices[v]
        )));
    }
    let colouring = Colouring(two_colour(
        &sub.graph,
        wanted
            .iter()
            .map(|&v| vertices.binary_search(&v).unwrap())
            .collect(),
    )?);
    Ok(MinimalConnected {
        vertices,
        colouring,
    })
}

fn two_colour(h: &Graph, mut terminals: BTreeSet<usize>) -> Result<Vec<usize>, StructuralError> {
    let mut alive: Vec<usize> = h.vertices().collect();
    let mut peeled: Vec<(Vec<usize>, usize)> = Vec::new();
    while alive.len() > terminals.len() {
        let sub = h.induced_subgraph(&alive);
        let blocks = blocks_and_cutvertices(&sub.graph);
        let cuts: BTreeSet<usize> = blocks.cut_vertices.iter().copied().collect();
        let (rest, cut) = blocks
            .leaf_blocks()
            .into_iter()
            .filter_map(|b| {
                let block = &blocks.blocks[b];
                let cut = *block.iter().find(|v| cuts.contains(v))?;
                let rest: Vec<usize> = block
                    .iter()
                    .filter(|&&v| v != cut)
                    .map(|&v| sub.host[v])
                    .collect();
                Some((rest, sub.host[cut]))
            })
            .min_by_key(|(rest, _)| (rest.len(), rest[0]))
            .ok_or_else(|| {
                StructuralError::Internal("a non-terminal lies outside every cut".into())
            })?;
        if rest.iter().any(|v| !terminals.contains(v)) || 2 * rest.len() > terminals.len() {
            return Err(StructuralError::Internal(format!(
                "leaf block {rest:?} breaks the peeling invariant"
            )));
        }
        for v in &rest {
            terminals.remove(v);
        }
        terminals.insert(cut);
        alive.retain(|v| !rest.contains(v));
        peeled.push((rest, cut));
    }
    let mut colour = vec![usize::MAX; h.n()];
    let half = alive.len().div_ceil(2);
    for (i, &v) in alive.iter().enumerate() {
        colour[v] = usize::from(i >= half);
    }
    for (rest, cut) in peeled.into_iter().rev() {
        for v in rest {
            colour[v] = 1 - colour[cut];
        }
    }
    Ok(colour)
}

#[cfg(test)]
mod tests {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::colouring::audit;
    use crate::constructions::random_connected;

    #[test]
    fn single_terminal_and_path_ends() {
        let g = Graph::path(8);
        let one = minimal_connected_subgraph(&g, &[3]).unwrap();
        assert_eq!(one.vertices, vec![3]);
        let ends = minimal_connected_subgraph(&g, &[0, 7]).unwrap();
        assert_eq!(ends.vertices.len(), 8);
        assert!(audit(&g, &ends.colouring).unwrap().clustering <= 1);
    }

    #[test]
    fn random_terminals() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..10 {
            let g = random_connected(40, 25, &mut rng);
            let mut all: Vec<usize> = g.vertices().collect();
            all.shuffle(&mut rng);
            let out = minimal_connected_subgraph(&g, &all[..6]).unwrap();
            let sub = g.induced_subgraph(&out.vertices).graph;
            assert!(sub.is_connected() && sub.max_degree() <= 6);
            assert!(audit(&sub, &out.colouring).unwrap().clustering <= 3);
        }
    }

    #[test]
    fn split_terminals() {
        let g = Graph::new(3);
        assert!(matches!(
            minimal_connected_subgraph(&g, &[0, 2]),
            Err(StructuralError::TerminalsSplit(_))
        ));
    }
}
