use std::collections::BTreeSet;

use super::{minimal_connected_subgraph, StructuralError};
use crate::colouring::{audit, Colouring};
use crate::graph::Graph;

/// Branch sets of a `K_t` minor: disjoint, each connected, pairwise adjacent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorWitness {
    pub branch_sets: Vec<Vec<usize>>,
}

impl MinorWitness {
    pub fn verify(&self, g: &Graph) -> bool {
        let mut owner = vec![usize::MAX; g.n()];
        for (i, set) in self.branch_sets.iter().enumerate() {
            if set.is_empty() || !g.induced_subgraph(set).graph.is_connected() {
                return false;
            }
            for &v in set {
                if v >= g.n() || owner[v] != usize::MAX {
                    return false;
                }
                owner[v] = i;
            }
        }
        let t = self.branch_sets.len();
        let mut touching = BTreeSet::new();
        for (u, v) in g.edges() {
            let (a, b) = (owner[u], owner[v]);
            if a != usize::MAX && b != usize::MAX && a != b {
                touching.insert((a.min(b), a.max(b)));
            }
        }
        touching.len() == t * (t - 1) / 2
    }
}

/// The decomposition into parts together with both colourings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VdhwColouring {
    /// Parts in construction order, each sorted.
    pub parts: Vec<Vec<usize>>,
    /// `t - 1` colours, defect at most `t - 2`.
    pub defective: Colouring,
    /// At most `2t - 2` colours, clustering at most `ceil((t - 2) / 2)`.
    pub clustered: Colouring,
}

/// Colourings of a `K_t`-minor-free graph, `t >= 4`, from a sequence of connected parts.
///
/// Repeatedly, the unassigned component holding the least unassigned vertex is examined.
/// It must touch at most `t - 2` earlier parts, all pairwise adjacent; otherwise those
/// parts and the component form a `K_t` minor, which is returned. The next part is the
/// minimal connected subgraph of the component containing, for each touching part, the
/// least vertex adjacent to it. Each part takes the least colour unused by earlier
/// adjacent parts; the clustered colouring refines that by the part's own two-colouring.
pub fn vdhw_colour(g: &Graph, t: usize) -> Result<VdhwColouring, StructuralError> {
    if t < 4 {
        return Err(StructuralError::Parameter(format!("t = {t}, need t >= 4")));
    }
    let n = g.n();
    let mut part_of = vec![usize::MAX; n];
    let mut parts: Vec<Vec<usize>> = Vec::new();
    let mut adjacent: Vec<BTreeSet<usize>> = Vec::new();
    let mut bit = vec![0usize; n];
    loop {
        let free: Vec<bool> = part_of.iter().map(|&p| p == usize::MAX).collect();
        let Some(component) = g.components_within(&free).into_iter().next() else {
            break;
        };
        let touching: BTreeSet<usize> = component
            .iter()
            .flat_map(|&v| g.neighbours(v))
            .map(|u| part_of[u])
            .filter(|&p| p != usize::MAX)
            .collect();
        let touching: Vec<usize> = touching.into_iter().collect();
        for (i, &p) in touching.iter().enumerate() {
            if let Some(&q) = touching[i + 1..]
                .iter()
                .find(|q| !adjacent[**q].contains(&p))
            {
                return Err(StructuralError::Internal(format!(
                    "parts {p} and {q} touch one component but not each other"
                )));
            }
        }
        if touching.len() > t - 2 {
            let mut branch_sets: Vec<Vec<usize>> = touching
                .iter()
                .take(t - 1)
                .map(|&p| parts[p].clone())
                .collect();
            branch_sets.push(component);
            return Err(StructuralError::Minor(MinorWitness { branch_sets }));
        }
        let mut anchors: Vec<usize> = if touching.is_empty() {
            vec![component[0]]
        } else {
            touching
                .iter()
                .map(|&p| {
                    *component
                        .iter()
                        .find(|&&v| g.neighbours(v).any(|u| part_of[u] == p))
                        .expect("touching part")
                })
                .collect()
        };
        anchors.sort_unstable();
        anchors.dedup();
        let sub = g.induced_subgraph(&component);
        let local: Vec<usize> = anchors
            .iter()
            .map(|v| component.binary_search(v).expect("anchor in component"))
            .collect();
        let minimal = minimal_connected_subgraph(&sub.graph, &local)?;
        let part: Vec<usize> = minimal.vertices.iter().map(|&v| sub.host[v]).collect();
        let index = parts.len();
        let mut touches = BTreeSet::new();
        for (i, &v) in part.iter().enumerate() {
            part_of[v] = index;
            bit[v] = minimal.colouring.colour(i);
        }
        for &v in &part {
            for u in g.neighbours(v) {
                if part_of[u] != usize::MAX && part_of[u] != index {
                    touches.insert(part_of[u]);
                }
            }
        }
        let inner = g.induced_subgraph(&part).graph;
        if inner.max_degree() > t - 2 {
            return Err(StructuralError::Internal(format!(
                "part {index} has maximum degree {}",
                inner.max_degree()
            )));
        }
        for &q in &touches {
            adjacent[q].insert(index);
        }
        adjacent.push(touches);
        parts.push(part);
    }

    let mut part_colour = vec![0usize; parts.len()];
    for i in 0..parts.len() {
        let used: BTreeSet<usize> = adjacent[i]
            .iter()
            .filter(|&&q| q < i)
            .map(|&q| part_colour[q])
            .collect();
        part_colour[i] = (0..)
            .find(|c| !used.contains(c))
            .expect("some colour is free");
    }
    let defective = Colouring(part_of.iter().map(|&p| part_colour[p]).collect());
    let clustered = Colouring(
        (0..n)
            .map(|v| 2 * part_colour[part_of[v]] + bit[v])
            .collect(),
    );
    let d = audit(g, &defective)?;
    if d.k > t - 1 || d.defect > t - 2 {
        return Err(StructuralError::Audit(format!(
            "{} colours with defect {}",
            d.k, d.defect
        )));
    }
    let c = audit(g, &clustered)?;
    if c.k > 2 * t - 2 || c.clustering > (t - 2).div_ceil(2) {
        return Err(StructuralError::Audit(format!(
            "{} colours with clustering {}",
            c.k, c.clustering
        )));
    }
    Ok(VdhwColouring {
        parts,
        defective,
        clustered,
    })
}

#[cfg(test)]
mod tests {
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::constructions::random_plane_graph;

    #[test]
    fn planar_graphs_with_t5() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..5 {
            let (g, _) = random_plane_graph(80, 0.8, &mut rng);
            let out = vdhw_colour(&g, 5).unwrap();
            assert!(audit(&g, &out.defective).unwrap().defect <= 3);
            assert!(audit(&g, &out.clustered).unwrap().clustering <= 2);
        }
    }

    #[test]
    fn trees_with_t4() {
        let g = Graph::path(30);
        let out = vdhw_colour(&g, 4).unwrap();
        let cert = audit(&g, &out.defective).unwrap();
        assert!(cert.k <= 3 && cert.defect <= 2);
    }

    #[test]
    fn complete_graph_gives_a_witness() {
        let g = Graph::complete(5);
        let Err(StructuralError::Minor(w)) = vdhw_colour(&g, 5) else {
            panic!("expected a minor")
        };
        assert_eq!(w.branch_sets.len(), 5);
        assert!(w.verify(&g));
    }
}
