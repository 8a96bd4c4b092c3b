use super::{Graph, GraphError};

/// Partition of the vertices into layers `L_0, L_1, ...` with every edge inside a layer
/// or between consecutive layers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Layering {
    pub layers: Vec<Vec<usize>>,
    pub source: usize,
}

impl Layering {
    /// `layer_of[v]` for every vertex.
    pub fn index(&self, n: usize) -> Vec<usize> {
        let mut at = vec![usize::MAX; n];
        for (i, layer) in self.layers.iter().enumerate() {
            for &v in layer {
                at[v] = i;
            }
        }
        at
    }

    pub fn validate(&self, g: &Graph) -> Result<(), GraphError> {
        let at = self.index(g.n());
        if let Some(v) = at.iter().position(|&l| l == usize::MAX) {
            return Err(GraphError::Unreached(v));
        }
        for (u, v) in g.edges() {
            if at[u].abs_diff(at[v]) > 1 {
                return Err(GraphError::LayerSpan {
                    u,
                    v,
                    lu: at[u],
                    lv: at[v],
                });
            }
        }
        Ok(())
    }
}

/// Breadth-first layering of a connected graph.
pub fn bfs_layering(g: &Graph, source: usize) -> Result<Layering, GraphError> {
    if source >= g.n() {
        return Err(GraphError::VertexOutOfRange {
            vertex: source,
            n: g.n(),
        });
    }
    let dist = g.bfs(source);
    let mut layers: Vec<Vec<usize>> = Vec::new();
    for (v, d) in dist.iter().enumerate() {
        let Some(d) = *d else {
            return Err(GraphError::Unreached(v));
        };
        if layers.len() <= d {
            layers.resize(d + 1, Vec::new());
        }
        layers[d].push(v);
    }
    Ok(Layering { layers, source })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_layers() {
        let l = bfs_layering(&Graph::cycle(6), 0).unwrap();
        assert_eq!(l.layers, vec![vec![0], vec![1, 5], vec![2, 4], vec![3]]);
        l.validate(&Graph::cycle(6)).unwrap();
    }

    #[test]
    fn disconnected_reports_vertex() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert_eq!(bfs_layering(&g, 0), Err(GraphError::Unreached(2)));
    }

    #[test]
    fn span_is_detected() {
        let l = Layering {
            layers: vec![vec![0], vec![1], vec![2]],
            source: 0,
        };
        let g = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(
            l.validate(&g),
            Err(GraphError::LayerSpan {
                u: 0,
                v: 2,
                lu: 0,
                lv: 2
            })
        );
    }
}
