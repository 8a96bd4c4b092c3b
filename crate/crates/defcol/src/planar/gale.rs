use std::collections::{BTreeMap, VecDeque};

use super::PlanarError;
use crate::colouring::Colouring;
use crate::graph::PlaneTriangulation;

/// A monochromatic path joining two opposite boundary arcs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaleWitness {
    pub path: Vec<usize>,
    pub colour: usize,
    /// Indices of the two arcs joined: `(0, 2)` or `(1, 3)`.
    pub arcs: (usize, usize),
    /// Faces of the extended graph along the bichromatic dual path that was followed.
    pub dual_path: Vec<[usize; 3]>,
}

/// Finds a monochromatic path between opposite arcs in a 2-coloured near-triangulation.
///
/// Four apex vertices are attached, one per arc, coloured so that the two apices of each
/// opposite pair share a colour. In the graph on internal faces joined across bichromatic
/// edges, the four corner faces have degree 1 and all others degree 0 or 2; the dual path
/// leaving the first corner face ends at another corner face, and the vertices of one
/// colour on it contain the witness.
pub fn gale_extract(
    t: &PlaneTriangulation,
    arcs: &[Vec<usize>; 4],
    colouring: &Colouring,
) -> Result<GaleWitness, PlanarError> {
    let g = t.graph();
    let n = g.n();
    if colouring.len() != n || colouring.0.iter().any(|&c| c > 1) {
        return Err(PlanarError::Arcs(
            "the colouring must use colours 0 and 1 on every vertex".into(),
        ));
    }
    for i in 0..4 {
        let arc = &arcs[i];
        if arc.len() < 2 || arc.last() != arcs[(i + 1) % 4].first() {
            return Err(PlanarError::Arcs(format!(
                "arc {i} does not end where arc {} starts",
                (i + 1) % 4
            )));
        }
        if arc
            .windows(2)
            .any(|w| w[0] >= n || w[1] >= n || !g.has_edge(w[0], w[1]))
        {
            return Err(PlanarError::Arcs(format!(
                "arc {i} is not a path in the graph"
            )));
        }
    }
    let corners: Vec<usize> = arcs.iter().map(|a| a[0]).collect();
    if (0..4).any(|i| (i + 1..4).any(|j| corners[i] == corners[j])) {
        return Err(PlanarError::Arcs("corners must be distinct".into()));
    }

    // Apex i sits on arc i; apices 0 and 2 take colour 0, apices 1 and 3 colour 1.
    let apex = |i: usize| n + i;
    let mut colour = colouring.0.clone();
    colour.extend([0, 1, 0, 1]);
    let mut faces: Vec<[usize; 3]> = t.faces().to_vec();
    for (i, arc) in arcs.iter().enumerate() {
        for w in arc.windows(2) {
            faces.push([w[0], w[1], apex(i)]);
        }
    }
    let special_start = faces.len();
    for i in 0..4 {
        faces.push([corners[i], apex(i), apex((i + 3) % 4)]);
    }

    let key = |u: usize, v: usize| (u.min(v), u.max(v));
    let mut on_edge: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (f, face) in faces.iter().enumerate() {
        for j in 0..3 {
            on_edge
                .entry(key(face[j], face[(j + 1) % 3]))
                .or_default()
                .push(f);
        }
    }
    let mut dual: Vec<Vec<usize>> = vec![Vec::new(); faces.len()];
    for (&(u, v), fs) in &on_edge {
        if colour[u] != colour[v] && fs.len() == 2 {
            dual[fs[0]].push(fs[1]);
            dual[fs[1]].push(fs[0]);
        }
    }
    for (f, nbrs) in dual.iter().enumerate() {
        let want_one = f >= special_start;
        if (want_one && nbrs.len() != 1) || (!want_one && !nbrs.is_empty() && nbrs.len() != 2) {
            return Err(PlanarError::Arcs(format!(
                "dual vertex {f} has degree {}",
                nbrs.len()
            )));
        }
    }

    let mut walk = vec![special_start];
    let mut previous = usize::MAX;
    let mut current = special_start;
    loop {
        let next = dual[current].iter().copied().find(|&f| f != previous);
        match next {
            Some(f) => {
                previous = current;
                current = f;
                walk.push(f);
                if f >= special_start {
                    break;
                }
            }
            None => break,
        }
    }

    let mut pool: Vec<bool> = vec![false; n];
    let dual_path: Vec<[usize; 3]> = walk.iter().map(|&f| faces[f]).collect();
    for pairing in [(0, 2), (1, 3)] {
        for c in 0..2 {
            pool.iter_mut().for_each(|p| *p = false);
            for face in &dual_path {
                for &v in face {
                    if v < n && colour[v] == c {
                        pool[v] = true;
                    }
                }
            }
            if let Some(path) = pool_path(t, &pool, &arcs[pairing.0], &arcs[pairing.1]) {
                return Ok(GaleWitness {
                    path,
                    colour: c,
                    arcs: pairing,
                    dual_path,
                });
            }
        }
    }
    Err(PlanarError::Arcs(
        "dual path carries no monochromatic arc-to-arc walk".into(),
    ))
}

/// Shortest path inside `pool` from a vertex of `from` to a vertex of `to`.
fn pool_path(
    t: &PlaneTriangulation,
    pool: &[bool],
    from: &[usize],
    to: &[usize],
) -> Option<Vec<usize>> {
    let g = t.graph();
    let mut parent = vec![usize::MAX; g.n()];
    let mut queue = VecDeque::new();
    let mut sources: Vec<usize> = from.iter().copied().filter(|&v| pool[v]).collect();
    sources.sort_unstable();
    for s in sources {
        parent[s] = s;
        queue.push_back(s);
    }
    while let Some(v) = queue.pop_front() {
        if to.contains(&v) {
            let mut path = vec![v];
            let mut x = v;
            while parent[x] != x {
                x = parent[x];
                path.push(x);
            }
            path.reverse();
            return Some(path);
        }
        for u in g.neighbours(v) {
            if pool[u] && parent[u] == usize::MAX {
                parent[u] = v;
                queue.push_back(u);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::hex_grid;

    fn check(hex: &crate::constructions::HexGrid, colouring: &Colouring) -> GaleWitness {
        let w = gale_extract(&hex.triangulation, &hex.arcs, colouring).unwrap();
        let g = hex.graph();
        assert!(w.path.windows(2).all(|e| g.has_edge(e[0], e[1])));
        assert!(w.path.iter().all(|&v| colouring.colour(v) == w.colour));
        assert!(hex.arcs[w.arcs.0].contains(&w.path[0]));
        assert!(hex.arcs[w.arcs.1].contains(w.path.last().unwrap()));
        w
    }

    #[test]
    fn every_colouring_of_small_hex_has_a_crossing() {
        let hex = hex_grid(2);
        let n = hex.graph().n();
        for mask in 0u32..1 << n {
            let colouring = Colouring((0..n).map(|v| (mask >> v & 1) as usize).collect());
            let w = check(&hex, &colouring);
            assert!(w.path.len() > 2);
        }
    }

    #[test]
    fn monochromatic_grid() {
        let hex = hex_grid(3);
        let n = hex.graph().n();
        let w = check(&hex, &Colouring::uniform(n, 1));
        assert!(w.path.len() >= 4);
    }
}
