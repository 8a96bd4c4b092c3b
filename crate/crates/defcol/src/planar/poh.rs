use std::collections::VecDeque;

use super::PlanarError;
use crate::colouring::{audit, Colouring};
use crate::graph::{Graph, PlaneTriangulation};

type Rotation = Vec<Vec<usize>>;

fn position(order: &[usize], u: usize) -> usize {
    order
        .iter()
        .position(|&y| y == u)
        .expect("neighbour present in rotation")
}

fn succ(rot: &Rotation, v: usize, u: usize) -> usize {
    let r = &rot[v];
    r[(position(r, u) + 1) % r.len()]
}

fn insert_after(order: &mut Vec<usize>, after: usize, new: usize) {
    let i = position(order, after);
    order.insert(i + 1, new);
}

fn replace(order: &mut [usize], old: usize, new: usize) {
    let i = position(order, old);
    order[i] = new;
}

/// Face walks of a rotation system: dart `u -> v` is followed by `v -> succ_v(u)`.
fn faces(rot: &Rotation) -> Vec<Vec<usize>> {
    let mut used: Vec<Vec<bool>> = rot.iter().map(|r| vec![false; r.len()]).collect();
    let mut out = Vec::new();
    for s in 0..rot.len() {
        for i in 0..rot[s].len() {
            if used[s][i] {
                continue;
            }
            let mut face = Vec::new();
            let (mut u, mut j) = (s, i);
            while !used[u][j] {
                used[u][j] = true;
                face.push(u);
                let v = rot[u][j];
                let k = (position(&rot[v], u) + 1) % rot[v].len();
                u = v;
                j = k;
            }
            out.push(face);
        }
    }
    out
}

/// Adds chords until every face is a triangle. The graph must be connected and simple.
fn triangulate(rot: &mut Rotation) -> Result<(), PlanarError> {
    loop {
        let Some(face) = faces(rot).into_iter().find(|f| f.len() > 3) else {
            return Ok(());
        };
        let len = face.len();
        let chord = (0..len)
            .flat_map(|i| (i + 2..len).map(move |j| (i, j)))
            .find(|&(i, j)| {
                let (wi, wj) = (face[i], face[j]);
                !(i == 0 && j == len - 1) && wi != wj && !rot[wi].contains(&wj)
            });
        let Some((i, j)) = chord else {
            return Err(PlanarError::Embedding(format!(
                "face {face:?} admits no chord"
            )));
        };
        let (wi, wj) = (face[i], face[j]);
        let (before_i, before_j) = (face[(i + len - 1) % len], face[j - 1]);
        insert_after(&mut rot[wj], before_j, wi);
        insert_after(&mut rot[wi], before_i, wj);
    }
}

/// Shortest `from`-`to` path avoiding `blocked`, preferring lower ids.
fn bfs_path(rot: &Rotation, from: usize, to: usize, blocked: &[bool]) -> Option<Vec<usize>> {
    let mut parent = vec![usize::MAX; rot.len()];
    parent[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(v) = queue.pop_front() {
        if v == to {
            let mut path = vec![to];
            let mut x = to;
            while x != from {
                x = parent[x];
                path.push(x);
            }
            path.reverse();
            return Some(path);
        }
        let mut nbrs = rot[v].clone();
        nbrs.sort_unstable();
        for u in nbrs {
            if parent[u] == usize::MAX && !blocked[u] {
                parent[u] = v;
                queue.push_back(u);
            }
        }
    }
    None
}

/// A side of the separating cycle, contracted: rotation, the parent id of each local
/// vertex, and the local id of the contracted vertex.
struct Side {
    rot: Rotation,
    parent: Vec<usize>,
    hub: usize,
}

/// Builds one side with the cycle contracted. `rim` lists `(side vertex, cycle vertex)`
/// edges in the cyclic order they meet the contracted vertex.
fn contract_side(rot: &Rotation, members: &[usize], rim: &[(usize, usize)]) -> Side {
    let mut local = vec![usize::MAX; rot.len()];
    for (i, &v) in members.iter().enumerate() {
        local[v] = i;
    }
    let hub = members.len();
    let mut kept = vec![usize::MAX; rot.len()];
    let mut hub_rot = Vec::new();
    for &(u, c) in rim {
        if kept[u] == usize::MAX {
            kept[u] = c;
            hub_rot.push(local[u]);
        }
    }
    let mut out: Rotation = members
        .iter()
        .map(|&v| {
            rot[v]
                .iter()
                .filter_map(|&y| match local[y] {
                    usize::MAX if kept[v] == y => Some(hub),
                    usize::MAX => None,
                    l => Some(l),
                })
                .collect()
        })
        .collect();
    out.push(hub_rot);
    Side {
        rot: out,
        parent: members.to_vec(),
        hub,
    }
}

/// Three-colouring in which every monochromatic component is an induced path and both
/// `v1` and `v2` have no neighbour of their own colour.
fn poh(mut rot: Rotation, v1: usize, v2: usize) -> Result<Vec<usize>, PlanarError> {
    let n = rot.len();
    if n <= 4 {
        return Ok((0..n)
            .map(|v| {
                if v == v1 {
                    0
                } else if v == v2 {
                    1
                } else {
                    2
                }
            })
            .collect());
    }
    triangulate(&mut rot)?;
    if !rot[v1].contains(&v2) {
        return Err(PlanarError::Embedding(format!(
            "{v1} and {v2} are not adjacent"
        )));
    }
    let a = succ(&rot, v2, v1);
    let b = succ(&rot, v1, v2);
    let x = n;
    let mut split = rot.clone();
    split.push(vec![a, v2, b, v1]);
    insert_after(&mut split[a], v2, x);
    insert_after(&mut split[b], v1, x);
    replace(&mut split[v1], v2, x);
    replace(&mut split[v2], v1, x);

    let mut blocked = vec![false; n + 1];
    blocked[v1] = true;
    blocked[v2] = true;
    blocked[x] = true;
    let path = bfs_path(&split, a, b, &blocked)
        .ok_or_else(|| PlanarError::Embedding(format!("no {a}-{b} path avoiding {v1}, {v2}")))?;
    let mut cycle = vec![x];
    cycle.extend(path);
    let len = cycle.len();
    let mut on_cycle = vec![false; n + 1];
    for &c in &cycle {
        on_cycle[c] = true;
    }

    let mut left = Vec::new();
    let mut right = Vec::new();
    for idx in 0..len {
        let c = cycle[idx];
        let (p, q) = (cycle[(idx + len - 1) % len], cycle[(idx + 1) % len]);
        let r = &split[c];
        let start = position(r, p);
        let mut wedge_left = Vec::new();
        let mut wedge_right = Vec::new();
        let mut past_q = false;
        for step in 1..r.len() {
            let y = r[(start + step) % r.len()];
            if y == q {
                past_q = true;
            } else if past_q {
                wedge_right.push((y, c));
            } else {
                wedge_left.push((y, c));
            }
        }
        left.push(wedge_left);
        right.push(wedge_right);
    }
    let flood = |seeds: &[Vec<(usize, usize)>]| -> Vec<usize> {
        let mut seen = vec![false; n + 1];
        let mut stack: Vec<usize> = seeds.iter().flatten().map(|&(y, _)| y).collect();
        for &s in &stack {
            seen[s] = true;
        }
        while let Some(v) = stack.pop() {
            for &u in &split[v] {
                if !on_cycle[u] && !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        (0..=n).filter(|&v| seen[v]).collect()
    };
    let side1 = flood(&left);
    let side2 = flood(&right);
    if side1.binary_search(&v1).is_err()
        || side2.binary_search(&v2).is_err()
        || side1.iter().any(|v| side2.binary_search(v).is_ok())
    {
        return Err(PlanarError::Embedding(
            "separating cycle does not split the two ends".into(),
        ));
    }
    let rim1: Vec<(usize, usize)> = left.into_iter().flatten().collect();
    let rim2: Vec<(usize, usize)> = right.into_iter().rev().flatten().collect();
    let inner = contract_side(&split, &side1, &rim1);
    let outer = contract_side(&split, &side2, &rim2);
    let local = |side: &Side, v: usize| side.parent.binary_search(&v).expect("member of its side");
    let col1 = poh(inner.rot.clone(), local(&inner, v1), inner.hub)?;
    let col2 = poh(outer.rot.clone(), local(&outer, v2), outer.hub)?;

    let shared = col1[inner.hub];
    let first = col1[local(&inner, v1)];
    let third = 3 - shared - first;
    let mut perm = [usize::MAX; 3];
    perm[col2[outer.hub]] = shared;
    perm[col2[local(&outer, v2)]] = third;
    let missing = (0..3).find(|c| !perm.contains(c)).expect("three colours");
    for slot in perm.iter_mut() {
        if *slot == usize::MAX {
            *slot = missing;
        }
    }
    let mut colour = vec![shared; n];
    for (i, &v) in inner.parent.iter().enumerate() {
        colour[v] = col1[i];
    }
    for (i, &v) in outer.parent.iter().enumerate() {
        colour[v] = perm[col2[i]];
    }
    Ok(colour)
}

/// Three-colouring of a plane graph, given by a rotation system, in which every
/// monochromatic component is a path. Components are coloured separately.
pub fn poh_from_rotation(g: &Graph, rotation: &[Vec<usize>]) -> Result<Colouring, PlanarError> {
    if rotation.len() != g.n() {
        return Err(PlanarError::Embedding(format!(
            "rotation has {} entries for {} vertices",
            rotation.len(),
            g.n()
        )));
    }
    let mut colour = vec![0; g.n()];
    for comp in g.components() {
        let mut local = vec![usize::MAX; g.n()];
        for (i, &v) in comp.iter().enumerate() {
            local[v] = i;
        }
        let rot: Rotation = comp
            .iter()
            .map(|&v| rotation[v].iter().map(|&u| local[u]).collect())
            .collect();
        let (v1, v2) = match rot.first().and_then(|r| r.iter().min()) {
            Some(&u) => (0, u),
            None => (0, usize::MAX),
        };
        let local_colours = poh(rot, v1, v2)?;
        for (i, &v) in comp.iter().enumerate() {
            colour[v] = local_colours[i];
        }
    }
    let colouring = Colouring(colour);
    let cert = audit(g, &colouring)?;
    if cert.k > 3 || !cert.all_paths {
        return Err(PlanarError::Audit(format!(
            "{} colours, all paths: {}",
            cert.k, cert.all_paths
        )));
    }
    Ok(colouring)
}

/// Three-colouring of a plane triangulation in which every monochromatic component is a
/// path, by splitting along a shortest cycle through an added apex and recursing on both
/// contracted sides.
pub fn poh_three_colour(t: &PlaneTriangulation) -> Result<Colouring, PlanarError> {
    poh_from_rotation(t.graph(), t.rotation())
}

#[cfg(test)]
mod tests {
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::constructions::{hex_grid, random_plane_graph, random_triangulation};
    use crate::graph::euler_genus;

    fn octahedron() -> PlaneTriangulation {
        let g = Graph::from_edges(
            6,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (0, 4),
                (5, 1),
                (5, 2),
                (5, 3),
                (5, 4),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 1),
            ],
        )
        .unwrap();
        let faces = vec![
            [0, 1, 2],
            [0, 2, 3],
            [0, 3, 4],
            [5, 2, 1],
            [5, 3, 2],
            [5, 4, 3],
            [5, 1, 4],
        ];
        PlaneTriangulation::new(g, faces, vec![0, 4, 1]).unwrap()
    }

    #[test]
    fn triangulating_keeps_the_plane() {
        let hex = hex_grid(3);
        let mut rot = hex.triangulation.rotation().to_vec();
        triangulate(&mut rot).unwrap();
        let mut g = Graph::new(rot.len());
        for (v, r) in rot.iter().enumerate() {
            for &u in r {
                g.add_edge(u, v).unwrap();
            }
        }
        assert_eq!(g.m(), 3 * g.n() - 6);
        assert_eq!(euler_genus(&g, &rot), Ok(0));
    }

    #[test]
    fn small_triangulations() {
        let t = octahedron();
        let c = poh_three_colour(&t).unwrap();
        assert!(audit(t.graph(), &c).unwrap().all_paths);
        let k4 = Graph::complete(4);
        let t = PlaneTriangulation::new(k4, vec![[0, 1, 2], [0, 2, 3], [0, 3, 1]], vec![1, 2, 3])
            .unwrap();
        assert!(poh_three_colour(&t).is_ok());
    }

    #[test]
    fn random_triangulations() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in [5, 6, 9, 20, 60, 150] {
            let t = random_triangulation(n, 2 * n, &mut rng);
            let c = poh_three_colour(&t).unwrap();
            let cert = audit(t.graph(), &c).unwrap();
            assert!(cert.k <= 3 && cert.all_paths && cert.defect <= 2);
        }
        let (g, rot) = random_plane_graph(80, 0.6, &mut rng);
        assert!(poh_from_rotation(&g, &rot).is_ok());
    }
}
