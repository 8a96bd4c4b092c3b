use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::StructuralError;
use crate::colouring::{audit, monochromatic_components, Colouring};
use crate::graph::Graph;
use crate::greedy::{lovasz_defective, Contract, GreedyError, MaxDegreeEngine};

/// Resampling rounds are capped at this many per vertex before a reseed.
const RESAMPLES_PER_VERTEX: usize = 64;
const MAX_RESEEDS: usize = 8;

/// Segment length as a multiple of the maximum degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SegmentLength {
    /// `8Δ`, where the local lemma applies directly; clustering at most `24Δ`.
    #[default]
    Standard,
    /// `2Δ`, the independent-transversal threshold; clustering at most `6Δ`.
    Short,
}

impl SegmentLength {
    pub fn vertices(self, max_degree: usize) -> usize {
        let factor = match self {
            SegmentLength::Standard => 8,
            SegmentLength::Short => 2,
        };
        (factor * max_degree).max(1)
    }

    pub fn clustering_bound(self, max_degree: usize) -> usize {
        3 * self.vertices(max_degree)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClusterConversion {
    pub colouring: Colouring,
    /// Consecutive runs of `L` vertices along long monochromatic paths and cycles.
    pub segments: Vec<Vec<usize>>,
    /// One vertex per segment, aligned with `segments`; all take the new colour.
    pub transversal: Vec<usize>,
    pub resamples: usize,
    pub reseeds: usize,
}

/// Turns a colouring of defect at most 2 into one with a single extra colour and
/// clustering at most `3L`, where `L` is the segment length.
///
/// Every monochromatic component is a path or cycle. Those with more than `L` vertices are
/// cut, in traversal order, into `floor(|Y| / L)` segments of exactly `L` vertices; a
/// leftover shorter run is not a segment. An independent transversal of the segments is
/// found by resampling the choice in both segments of some edge with two chosen ends, with
/// `64n` resamples allowed per seed and up to 8 reseeds.
pub fn defect2_to_cluster(
    g: &Graph,
    chi: &Colouring,
    length: SegmentLength,
    seed: u64,
) -> Result<ClusterConversion, StructuralError> {
    let cert = audit(g, chi)?;
    if cert.defect > 2 {
        return Err(StructuralError::DefectTooLarge {
            defect: cert.defect,
        });
    }
    let n = g.n();
    let delta = g.max_degree();
    let run = length.vertices(delta);
    let mut segments: Vec<Vec<usize>> = Vec::new();
    for component in monochromatic_components(g, chi) {
        if component.len() > run {
            let order = traverse(g, &component);
            segments.extend(order.chunks_exact(run).map(<[usize]>::to_vec));
        }
    }
    let mut segment_of = vec![usize::MAX; n];
    for (i, segment) in segments.iter().enumerate() {
        for &v in segment {
            segment_of[v] = i;
        }
    }

    let budget = RESAMPLES_PER_VERTEX * n.max(1);
    let mut resamples = 0;
    let mut found = None;
    for reseed in 0..=MAX_RESEEDS {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(reseed as u64));
        let mut pick: Vec<usize> = segments
            .iter()
            .map(|s| s[rng.gen_range(0..s.len())])
            .collect();
        let mut chosen = vec![false; n];
        pick.iter().for_each(|&v| chosen[v] = true);
        let mut round = 0;
        loop {
            let Some((u, v)) = g.edges().find(|&(u, v)| chosen[u] && chosen[v]) else {
                found = Some(reseed);
                break;
            };
            if round == budget {
                break;
            }
            round += 1;
            for segment in [segment_of[u], segment_of[v]] {
                chosen[pick[segment]] = false;
                let members = &segments[segment];
                pick[segment] = members[rng.gen_range(0..members.len())];
                chosen[pick[segment]] = true;
            }
        }
        resamples += round;
        if let Some(reseeds) = found {
            let transversal = pick;
            return finish(g, chi, length, segments, transversal, resamples, reseeds);
        }
    }
    Err(StructuralError::RetryBudget {
        reseeds: MAX_RESEEDS,
        resamples,
    })
}

fn finish(
    g: &Graph,
    chi: &Colouring,
    length: SegmentLength,
    segments: Vec<Vec<usize>>,
    transversal: Vec<usize>,
    resamples: usize,
    reseeds: usize,
) -> Result<ClusterConversion, StructuralError> {
    let fresh = chi.colours_used().last().map_or(0, |&c| c + 1);
    let mut colour = chi.0.clone();
    for &v in &transversal {
        colour[v] = fresh;
    }
    let colouring = Colouring(colour);
    if let Some((u, v)) = g
        .edges()
        .find(|&(u, v)| colouring.colour(u) == fresh && colouring.colour(v) == fresh)
    {
        return Err(StructuralError::Audit(format!(
            "transversal vertices {u} and {v} are adjacent"
        )));
    }
    if let Some(i) = (0..segments.len()).find(|&i| !segments[i].contains(&transversal[i])) {
        return Err(StructuralError::Audit(format!(
            "segment {i} is missed by the transversal"
        )));
    }
    let before = chi.colours_used().len();
    let cert = audit(g, &colouring)?;
    let limit = length.clustering_bound(g.max_degree());
    if cert.k > before + 1 || cert.clustering > limit {
        return Err(StructuralError::Audit(format!(
            "{} colours with clustering {}, limits {} and {limit}",
            cert.k,
            cert.clustering,
            before + 1
        )));
    }
    Ok(ClusterConversion {
        colouring,
        segments,
        transversal,
        resamples,
        reseeds,
    })
}

/// Vertices of a path or cycle component in order: from its least endpoint, or around the
/// cycle from its least vertex.
fn traverse(g: &Graph, component: &[usize]) -> Vec<usize> {
    let inside = |v: usize| component.binary_search(&v).is_ok();
    let inner_degree = |v: usize| g.neighbours(v).filter(|&u| inside(u)).count();
    let start = component
        .iter()
        .copied()
        .find(|&v| inner_degree(v) <= 1)
        .unwrap_or(component[0]);
    let mut order = vec![start];
    let mut previous = usize::MAX;
    let mut current = start;
    while let Some(next) = g
        .neighbours(current)
        .find(|&u| inside(u) && u != previous && u != start)
    {
        if order.len() == component.len() {
            break;
        }
        order.push(next);
        previous = current;
        current = next;
    }
    order
}

/// Lovász split with defect 2 followed by the defect-to-cluster conversion:
/// `floor(Δ / 3) + 2` colours with clustering at most `24Δ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Defect2Engine {
    pub seed: u64,
}

impl MaxDegreeEngine for Defect2Engine {
    fn contract(&self) -> Contract {
        Contract {
            x: 3.into(),
            y: 2.into(),
            alpha: 24.into(),
        }
    }

    fn colour(&self, g: &Graph) -> Result<Colouring, GreedyError> {
        let split = lovasz_defective(g, 2);
        defect2_to_cluster(g, &split.colouring, SegmentLength::Standard, self.seed)
            .map(|out| out.colouring)
            .map_err(|e| GreedyError::Contract(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::random_bounded_degree;

    fn cycle_in_two_colours(n: usize) -> (Graph, Colouring) {
        let g = Graph::cycle(n);
        let colour = (0..n).map(|v| usize::from(v >= n / 2)).collect();
        (g, Colouring(colour))
    }

    #[test]
    fn short_components_only_gain_a_colour() {
        let g = Graph::path(10);
        let chi = Colouring((0..10).map(|v| (v / 3) % 2).collect());
        let out = defect2_to_cluster(&g, &chi, SegmentLength::Standard, 1).unwrap();
        assert!(out.segments.is_empty() && out.transversal.is_empty());
        assert_eq!(out.colouring, chi);
        assert!(audit(&g, &out.colouring).unwrap().clustering <= 16);
    }

    #[test]
    fn long_cycle_with_degree_two() {
        let (g, chi) = cycle_in_two_colours(400);
        let out = defect2_to_cluster(&g, &chi, SegmentLength::Standard, 3).unwrap();
        let cert = audit(&g, &out.colouring).unwrap();
        assert_eq!(cert.k, 3);
        assert!(cert.clustering <= 48);
        assert_eq!(out.transversal.len(), 2 * (200 / 16));
        let short = defect2_to_cluster(&g, &chi, SegmentLength::Short, 3).unwrap();
        assert!(audit(&g, &short.colouring).unwrap().clustering <= 12);
    }

    #[test]
    fn single_cycle_component() {
        let g = Graph::cycle(50);
        let out =
            defect2_to_cluster(&g, &Colouring::uniform(50, 0), SegmentLength::Standard, 0).unwrap();
        assert_eq!(out.segments.len(), 3);
        assert!(audit(&g, &out.colouring).unwrap().clustering <= 48);
    }

    #[test]
    fn lovasz_outputs_on_degree_nine() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for seed in 0..5 {
            let g = random_bounded_degree(300, 9, 4000, &mut rng);
            let split = lovasz_defective(&g, 2);
            let out =
                defect2_to_cluster(&g, &split.colouring, SegmentLength::Standard, seed).unwrap();
            let cert = audit(&g, &out.colouring).unwrap();
            assert!(cert.k <= g.max_degree() / 3 + 2);
            assert!(cert.clustering <= 24 * g.max_degree());
        }
    }

    #[test]
    fn rejects_defect_three() {
        let g = Graph::complete_bipartite(1, 3);
        assert_eq!(
            defect2_to_cluster(&g, &Colouring::uniform(4, 0), SegmentLength::Standard, 0),
            Err(StructuralError::DefectTooLarge { defect: 3 })
        );
    }

    #[test]
    fn engine_keeps_its_contract() {
        let g = Graph::grid(12, 12);
        let engine = Defect2Engine::default();
        let colouring = engine.colour(&g).unwrap();
        engine
            .contract()
            .check(&g, &colouring, g.max_degree())
            .unwrap();
    }
}
