use crate::graph::{Graph, PlaneTriangulation};

/// A rhombus of the triangular lattice with its boundary split into four arcs.
///
/// `arcs[0]` runs along the bottom from corner `a` to `b`, `arcs[1]` up the right side to
/// `c`, `arcs[2]` along the top to `d`, `arcs[3]` down the left side back to `a`.
/// Consecutive arcs share their corner.
#[derive(Debug, Clone)]
pub struct HexGrid {
    pub triangulation: PlaneTriangulation,
    pub side: usize,
    pub arcs: [Vec<usize>; 4],
}

impl HexGrid {
    pub fn graph(&self) -> &Graph {
        self.triangulation.graph()
    }

    pub fn corners(&self) -> [usize; 4] {
        [
            self.arcs[0][0],
            self.arcs[1][0],
            self.arcs[2][0],
            self.arcs[3][0],
        ]
    }
}

/// Triangular grid on `(k + 1) x (k + 1)` points: opposite arcs are at distance `k`
/// and no vertex has more than six neighbours.
pub fn hex_grid(k: usize) -> HexGrid {
    let side = k.max(1) + 1;
    let id = |i: usize, j: usize| j * side + i;
    let mut g = Graph::new(side * side);
    let mut faces = Vec::new();
    for j in 0..side - 1 {
        for i in 0..side - 1 {
            let (p, q, r, s) = (id(i, j), id(i + 1, j), id(i, j + 1), id(i + 1, j + 1));
            faces.push([p, q, r]);
            faces.push([q, s, r]);
            for (u, v) in [(p, q), (p, r), (q, r), (q, s), (r, s)] {
                g.add_edge(u, v).expect("grid ids are in range");
            }
        }
    }
    let last = side - 1;
    let bottom: Vec<usize> = (0..side).map(|i| id(i, 0)).collect();
    let right: Vec<usize> = (0..side).map(|j| id(last, j)).collect();
    let top: Vec<usize> = (0..side).rev().map(|i| id(i, last)).collect();
    let left: Vec<usize> = (0..side).rev().map(|j| id(0, j)).collect();
    let outer: Vec<usize> = [&bottom, &right, &top, &left]
        .iter()
        .flat_map(|arc| arc[..arc.len() - 1].iter().copied())
        .collect();
    let triangulation = PlaneTriangulation::new(g, faces, outer)
        .expect("the lattice rhombus is a near-triangulation");
    HexGrid {
        triangulation,
        side,
        arcs: [bottom, right, top, left],
    }
}
