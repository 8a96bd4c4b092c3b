use std::collections::{BTreeMap, VecDeque};

use super::{Graph, GraphError};

/// A plane graph whose internal faces are triangles, given by its face list and outer cycle.
///
/// Faces are stored oriented consistently: every internal face `[u, v, w]` is traversed
/// `u -> v -> w`, and the outer cycle is traversed in the opposite sense.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneTriangulation {
    graph: Graph,
    faces: Vec<[usize; 3]>,
    outer: Vec<usize>,
    rotation: Vec<Vec<usize>>,
}

fn bad(msg: impl Into<String>) -> GraphError {
    GraphError::Triangulation(msg.into())
}

impl PlaneTriangulation {
    pub fn new(
        graph: Graph,
        faces: Vec<[usize; 3]>,
        outer: Vec<usize>,
    ) -> Result<Self, GraphError> {
        let n = graph.n();
        if n < 3 || outer.len() < 3 {
            return Err(bad(
                "need at least three vertices and an outer cycle of length at least three",
            ));
        }
        for f in &faces {
            for i in 0..3 {
                if f[i] >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: f[i], n });
                }
                if !graph.has_edge(f[i], f[(i + 1) % 3]) {
                    return Err(bad(format!("face {f:?} uses a non-edge")));
                }
            }
        }
        let mut seen = vec![false; n];
        for i in 0..outer.len() {
            let (u, v) = (outer[i], outer[(i + 1) % outer.len()]);
            if u >= n || seen[u] {
                return Err(bad(format!(
                    "outer cycle repeats or leaves the graph at {u}"
                )));
            }
            seen[u] = true;
            if !graph.has_edge(u, v) {
                return Err(bad(format!("outer cycle uses non-edge {u}-{v}")));
            }
        }
        let (nn, m, f) = (n as i64, graph.m() as i64, faces.len() as i64 + 1);
        if nn - m + f != 2 {
            return Err(bad(format!("Euler's formula fails: {nn} - {m} + {f} != 2")));
        }
        if !graph.is_connected() {
            return Err(bad("graph is disconnected"));
        }

        let key = |u: usize, v: usize| (u.min(v), u.max(v));
        let mut on_edge: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for (i, f) in faces.iter().enumerate() {
            for j in 0..3 {
                on_edge
                    .entry(key(f[j], f[(j + 1) % 3]))
                    .or_default()
                    .push(i);
            }
        }
        let mut outer_edge = BTreeMap::new();
        for i in 0..outer.len() {
            let (u, v) = (outer[i], outer[(i + 1) % outer.len()]);
            outer_edge.insert(key(u, v), (u, v));
        }
        for (u, v) in graph.edges() {
            let inner = on_edge.get(&(u, v)).map_or(0, Vec::len);
            let total = inner + usize::from(outer_edge.contains_key(&(u, v)));
            if total != 2 {
                return Err(bad(format!("edge {u}-{v} lies on {total} faces")));
            }
        }

        // Orient faces: an outer edge u->v (in outer order) is traversed u->v by its inner face.
        let mut oriented: Vec<Option<[usize; 3]>> = vec![None; faces.len()];
        let mut queue = VecDeque::new();
        let orient = |f: [usize; 3], u: usize, v: usize| -> [usize; 3] {
            let w = f.iter().copied().find(|&x| x != u && x != v).unwrap_or(u);
            [u, v, w]
        };
        for (&k, &(u, v)) in &outer_edge {
            let i = on_edge[&k][0];
            let want = orient(faces[i], u, v);
            match oriented[i] {
                None => {
                    oriented[i] = Some(want);
                    queue.push_back(i);
                }
                Some(have) if !same_cycle(have, want) => {
                    return Err(bad(format!(
                        "face {:?} cannot be oriented consistently",
                        faces[i]
                    )))
                }
                Some(_) => {}
            }
        }
        while let Some(i) = queue.pop_front() {
            let f = oriented[i].unwrap_or(faces[i]);
            for j in 0..3 {
                let (u, v) = (f[j], f[(j + 1) % 3]);
                for &o in &on_edge[&key(u, v)] {
                    if o == i {
                        continue;
                    }
                    let want = orient(faces[o], v, u);
                    match oriented[o] {
                        None => {
                            oriented[o] = Some(want);
                            queue.push_back(o);
                        }
                        Some(have) if !same_cycle(have, want) => {
                            return Err(bad(format!(
                                "face {:?} cannot be oriented consistently",
                                faces[o]
                            )))
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        let faces: Vec<[usize; 3]> = oriented
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| bad("some face is not reachable from the outer cycle"))?;

        // Rotation: for consecutive u, v, w on a face, the successor of u around v is w.
        let mut succ: Vec<BTreeMap<usize, usize>> = vec![BTreeMap::new(); n];
        let mut corner = |u: usize, v: usize, w: usize| -> Result<(), GraphError> {
            if succ[v].insert(u, w).is_some() {
                return Err(bad(format!("dart {u}->{v} lies on two faces")));
            }
            Ok(())
        };
        for f in &faces {
            corner(f[0], f[1], f[2])?;
            corner(f[1], f[2], f[0])?;
            corner(f[2], f[0], f[1])?;
        }
        let l = outer.len();
        for i in 0..l {
            corner(outer[(i + 1) % l], outer[i], outer[(i + l - 1) % l])?;
        }
        let mut rotation = Vec::with_capacity(n);
        for (v, map) in succ.iter().enumerate() {
            let deg = graph.degree(v);
            if map.len() != deg {
                return Err(bad(format!("vertex {v} has an incomplete rotation")));
            }
            let Some(&start) = graph.neighbour_set(v).iter().next() else {
                return Err(bad(format!("vertex {v} is isolated")));
            };
            let mut order = vec![start];
            let mut cur = map[&start];
            while cur != start {
                if order.len() > deg {
                    return Err(bad(format!("rotation at {v} is not a cycle")));
                }
                order.push(cur);
                cur = *map
                    .get(&cur)
                    .ok_or_else(|| bad(format!("rotation at {v} leaves its neighbours")))?;
            }
            if order.len() != deg {
                return Err(bad(format!("faces around vertex {v} do not form a disc")));
            }
            rotation.push(order);
        }
        Ok(PlaneTriangulation {
            graph,
            faces,
            outer,
            rotation,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn faces(&self) -> &[[usize; 3]] {
        &self.faces
    }

    pub fn outer(&self) -> &[usize] {
        &self.outer
    }

    /// Cyclic neighbour order at each vertex; the face after dart `u -> v` continues to
    /// the successor of `u` in the rotation of `v`.
    pub fn rotation(&self) -> &[Vec<usize>] {
        &self.rotation
    }
}

fn same_cycle(a: [usize; 3], b: [usize; 3]) -> bool {
    a == b || a == [b[1], b[2], b[0]] || a == [b[2], b[0], b[1]]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> PlaneTriangulation {
        PlaneTriangulation::new(
            Graph::complete(4),
            vec![[0, 1, 3], [1, 2, 3], [2, 0, 3]],
            vec![0, 1, 2],
        )
        .unwrap()
    }

    #[test]
    fn k4_rotation_is_cyclic() {
        let t = k4();
        assert_eq!(t.rotation().len(), 4);
        assert!(t.rotation().iter().all(|r| r.len() == 3));
    }

    #[test]
    fn missing_face_rejected() {
        let r = PlaneTriangulation::new(
            Graph::complete(4),
            vec![[0, 1, 3], [1, 2, 3]],
            vec![0, 1, 2],
        );
        assert!(matches!(r, Err(GraphError::Triangulation(_))));
    }

    #[test]
    fn square_with_diagonal() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        let t = PlaneTriangulation::new(g, vec![[0, 1, 2], [0, 2, 3]], vec![0, 1, 2, 3]).unwrap();
        assert_eq!(t.faces().len(), 2);
    }
}
