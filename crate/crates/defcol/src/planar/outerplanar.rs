use super::PlanarError;
use crate::colouring::{audit, Colouring};
use crate::graph::Graph;

/// Two-colouring by BFS layer parity, one BFS per component from its least vertex.
///
/// On an outerplanar graph each layer induces a disjoint union of paths, so every
/// monochromatic component is a path. Otherwise the offending layer is reported.
pub fn outerplanar_two_colour(g: &Graph) -> Result<Colouring, PlanarError> {
    let mut layer = vec![usize::MAX; g.n()];
    let mut root = vec![usize::MAX; g.n()];
    for comp in g.components() {
        let dist = g.bfs(comp[0]);
        for &v in &comp {
            layer[v] = dist[v].expect("component vertices are reachable");
            root[v] = comp[0];
        }
    }
    let colouring = Colouring(layer.iter().map(|&l| l % 2).collect());
    let cert = audit(g, &colouring)?;
    if cert.all_paths {
        return Ok(colouring);
    }
    let bad = cert
        .components
        .iter()
        .find(|comp| {
            let inner: usize = comp
                .iter()
                .map(|&v| {
                    g.neighbours(v)
                        .filter(|u| comp.binary_search(u).is_ok())
                        .count()
                })
                .sum();
            inner / 2 + 1 != comp.len()
                || comp.iter().any(|&v| {
                    g.neighbours(v)
                        .filter(|u| comp.binary_search(u).is_ok())
                        .count()
                        > 2
                })
        })
        .expect("some component is not a path");
    Err(PlanarError::Outerplanarity {
        root: root[bad[0]],
        layer: layer[bad[0]],
        vertices: bad.clone(),
    })
}
