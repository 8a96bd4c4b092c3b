use num_integer::Roots;

use super::PlanarError;
use crate::colouring::{audit, Colouring};
use crate::graph::Graph;

/// Defect `max(12, ceil(sqrt(6g)) + 7)` for Euler genus `g`.
pub fn genus_defect(genus: usize) -> usize {
    let six_g = 6 * genus;
    let mut root = six_g.sqrt();
    if root * root < six_g {
        root += 1;
    }
    (root + 7).max(12)
}

/// Three-colouring with defect `genus_defect(genus)` for graphs of Euler genus at most
/// `genus`.
///
/// Deletes vertices of degree at most 2 and edges joining two vertices of degree at most
/// `d`. What is left has its low-degree vertices stable; they take colour 0 and the
/// high-degree vertices are split by id, the first half colour 1, the rest colour 2.
/// Deleted vertices return in reverse order with a colour absent from their neighbours.
pub fn genus_three_colour(g: &Graph, genus: usize) -> Result<Colouring, PlanarError> {
    let d = genus_defect(genus);
    let mut rest = g.clone();
    let mut alive = vec![true; g.n()];
    let mut removed: Vec<(usize, Vec<usize>)> = Vec::new();
    loop {
        if let Some(v) = (0..g.n()).find(|&v| alive[v] && rest.degree(v) <= 2) {
            removed.push((v, rest.neighbours(v).collect()));
            rest.isolate(v);
            alive[v] = false;
            continue;
        }
        let light = rest
            .edges()
            .find(|&(u, v)| rest.degree(u) <= d && rest.degree(v) <= d);
        match light {
            Some((u, v)) => {
                rest.remove_edge(u, v);
            }
            None => break,
        }
    }
    let high: Vec<usize> = (0..g.n())
        .filter(|&v| alive[v] && rest.degree(v) > d)
        .collect();
    let budget = 12 * genus.saturating_sub(2);
    if (d - 11) * high.len() > budget {
        return Err(PlanarError::GenusHypothesis {
            high: high.len(),
            defect: d,
            genus,
        });
    }
    let mut colour = vec![usize::MAX; g.n()];
    for v in (0..g.n()).filter(|&v| alive[v]) {
        colour[v] = 0;
    }
    let red = high.len().div_ceil(2);
    for (i, &v) in high.iter().enumerate() {
        colour[v] = if i < red { 1 } else { 2 };
    }
    for (v, nbrs) in removed.into_iter().rev() {
        colour[v] = (0..3)
            .find(|c| nbrs.iter().all(|&u| colour[u] != *c))
            .expect("at most two neighbours");
    }
    let colouring = Colouring(colour);
    let cert = audit(g, &colouring)?;
    if cert.defect > d || cert.k > 3 {
        return Err(PlanarError::Audit(format!(
            "defect {} with {} colours against {d}",
            cert.defect, cert.k
        )));
    }
    Ok(colouring)
}
