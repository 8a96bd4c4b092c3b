use std::collections::{BTreeMap, BTreeSet};

use super::{Graph, GraphError};

/// Faces of a rotation system: the face after dart `u -> v` continues with
/// `v -> succ_v(u)`, where `succ_v` is the cyclic successor in `rotation[v]`.
pub fn trace_faces(g: &Graph, rotation: &[Vec<usize>]) -> Result<Vec<Vec<usize>>, GraphError> {
    let bad = |m: String| GraphError::Triangulation(m);
    if rotation.len() != g.n() {
        return Err(bad(format!(
            "rotation has {} entries for {} vertices",
            rotation.len(),
            g.n()
        )));
    }
    let mut succ: Vec<BTreeMap<usize, usize>> = vec![BTreeMap::new(); g.n()];
    for (v, order) in rotation.iter().enumerate() {
        let set: BTreeSet<usize> = order.iter().copied().collect();
        if set.len() != order.len() || &set != g.neighbour_set(v) {
            return Err(bad(format!(
                "rotation at {v} is not a cyclic order of its neighbours"
            )));
        }
        for (i, &u) in order.iter().enumerate() {
            succ[v].insert(u, order[(i + 1) % order.len()]);
        }
    }
    let mut used: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut faces = Vec::new();
    for (u, v) in g.edges().flat_map(|(a, b)| [(a, b), (b, a)]) {
        if used.contains(&(u, v)) {
            continue;
        }
        let mut face = Vec::new();
        let (mut a, mut b) = (u, v);
        while used.insert((a, b)) {
            face.push(a);
            let c = succ[b][&a];
            a = b;
            b = c;
        }
        faces.push(face);
    }
    Ok(faces)
}

/// Euler genus `2c - n + m - f` of the surface a rotation system describes, where `c`
/// counts components (isolated vertices contribute one face each).
pub fn euler_genus(g: &Graph, rotation: &[Vec<usize>]) -> Result<usize, GraphError> {
    let faces = trace_faces(g, rotation)?;
    let isolated = g.vertices().filter(|&v| g.degree(v) == 0).count();
    let c = g.components().len() as i64;
    let genus = 2 * c - g.n() as i64 + g.m() as i64 - (faces.len() + isolated) as i64;
    Ok(genus.max(0) as usize)
}
