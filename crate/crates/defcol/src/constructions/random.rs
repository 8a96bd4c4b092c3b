use std::collections::{BTreeMap, VecDeque};

use rand::seq::SliceRandom;
use rand::Rng;

use super::ConstructionError;
use crate::graph::{Graph, PlaneTriangulation};

fn shuffled(n: usize, rng: &mut impl Rng) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    perm
}

/// A uniformly relabelled random triangulation of a convex `n`-gon.
pub fn random_maximal_outerplanar(n: usize, rng: &mut impl Rng) -> Graph {
    let n = n.max(3);
    let mut g = Graph::cycle(n);
    let mut stack = vec![(0, n - 1)];
    while let Some((lo, hi)) = stack.pop() {
        if hi - lo < 2 {
            continue;
        }
        let apex = rng.gen_range(lo + 1..hi);
        g.add_edge(lo, apex).expect("in range");
        g.add_edge(apex, hi).expect("in range");
        stack.push((lo, apex));
        stack.push((apex, hi));
    }
    g.permuted(&shuffled(n, rng))
}

/// A random plane triangulation on `n >= 3` vertices with outer face `[0, 1, 2]` before
/// relabelling: repeated insertion into a random internal face, then `flips` random
/// edge flips that keep every degree at least 3.
pub fn random_triangulation(n: usize, flips: usize, rng: &mut impl Rng) -> PlaneTriangulation {
    let n = n.max(3);
    let mut g = Graph::cycle(3);
    let mut faces: Vec<[usize; 3]> = vec![[0, 1, 2]];
    let mut dart_face: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let register =
        |faces: &[[usize; 3]], i: usize, dart_face: &mut BTreeMap<(usize, usize), usize>| {
            let f = faces[i];
            for j in 0..3 {
                dart_face.insert((f[j], f[(j + 1) % 3]), i);
            }
        };
    register(&faces, 0, &mut dart_face);
    while g.n() < n {
        let x = g.add_vertex();
        let i = rng.gen_range(0..faces.len());
        let [a, b, c] = faces[i];
        for v in [a, b, c] {
            g.add_edge(v, x).expect("in range");
        }
        faces[i] = [a, b, x];
        faces.push([b, c, x]);
        faces.push([c, a, x]);
        let len = faces.len();
        for k in [i, len - 2, len - 1] {
            register(&faces, k, &mut dart_face);
        }
    }
    for _ in 0..flips {
        let fi = rng.gen_range(0..faces.len());
        let j = rng.gen_range(0..3);
        let f = faces[fi];
        let (u, v, w) = (f[j], f[(j + 1) % 3], f[(j + 2) % 3]);
        let Some(&gi) = dart_face.get(&(v, u)) else {
            continue;
        };
        let h = faces[gi];
        let x = h
            .iter()
            .copied()
            .find(|&y| y != u && y != v)
            .expect("a face has three vertices");
        if g.has_edge(w, x) || g.degree(u) <= 3 || g.degree(v) <= 3 {
            continue;
        }
        g.remove_edge(u, v);
        g.add_edge(w, x).expect("in range");
        dart_face.remove(&(u, v));
        dart_face.remove(&(v, u));
        faces[fi] = [u, x, w];
        faces[gi] = [x, v, w];
        register(&faces, fi, &mut dart_face);
        register(&faces, gi, &mut dart_face);
    }
    let perm = shuffled(n, rng);
    let graph = g.permuted(&perm);
    let faces = faces.iter().map(|f| f.map(|v| perm[v])).collect();
    let outer = vec![perm[0], perm[2], perm[1]];
    PlaneTriangulation::new(graph, faces, outer).expect("insertion and flips keep a triangulation")
}

/// A random plane graph: a random triangulation with each edge kept with probability
/// `keep`. Returns the graph and the inherited rotation system.
pub fn random_plane_graph(n: usize, keep: f64, rng: &mut impl Rng) -> (Graph, Vec<Vec<usize>>) {
    let t = random_triangulation(n, 2 * n, rng);
    let mut g = t.graph().clone();
    for (u, v) in t.graph().edges() {
        if !rng.gen_bool(keep.clamp(0.0, 1.0)) {
            g.remove_edge(u, v);
        }
    }
    let rotation = t
        .rotation()
        .iter()
        .enumerate()
        .map(|(v, r)| r.iter().copied().filter(|&u| g.has_edge(u, v)).collect())
        .collect();
    (g, rotation)
}

/// Up to `attempts` random edges, each added only if both ends stay within `max_degree`.
pub fn random_bounded_degree(
    n: usize,
    max_degree: usize,
    attempts: usize,
    rng: &mut impl Rng,
) -> Graph {
    let mut g = Graph::new(n);
    if n < 2 {
        return g;
    }
    for _ in 0..attempts {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v && g.degree(u) < max_degree && g.degree(v) < max_degree {
            g.add_edge(u, v).expect("in range");
        }
    }
    g
}

/// A random graph of maximum degree at most 3.
pub fn random_subcubic(n: usize, rng: &mut impl Rng) -> Graph {
    random_bounded_degree(n, 3, 4 * n, rng)
}

/// Erdős–Rényi `G(n, p)`.
pub fn gnp(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p.clamp(0.0, 1.0)) {
                g.add_edge(u, v).expect("in range");
            }
        }
    }
    g
}

/// A random spanning tree plus up to `extra` random edges.
pub fn random_connected(n: usize, extra: usize, rng: &mut impl Rng) -> Graph {
    let order = shuffled(n, rng);
    let mut g = Graph::new(n);
    for i in 1..n {
        let j = rng.gen_range(0..i);
        g.add_edge(order[i], order[j]).expect("in range");
    }
    for _ in 0..extra {
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if u != v {
            g.add_edge(u, v).expect("in range");
        }
    }
    g
}

/// Whether `u` reaches `v` in fewer than `limit` steps without the edge `uv`.
fn close_without_edge(g: &Graph, u: usize, v: usize, limit: usize) -> bool {
    let mut dist = vec![usize::MAX; g.n()];
    dist[u] = 0;
    let mut queue = VecDeque::from([u]);
    while let Some(x) = queue.pop_front() {
        if dist[x] + 1 >= limit {
            continue;
        }
        for y in g.neighbours(x) {
            if (x == u && y == v) || dist[y] != usize::MAX {
                continue;
            }
            if y == v {
                return true;
            }
            dist[y] = dist[x] + 1;
            queue.push_back(y);
        }
    }
    false
}

/// Edges lying on a cycle of length at most `girth_limit`.
fn short_cycle_edges(g: &Graph, girth_limit: usize) -> Vec<(usize, usize)> {
    g.edges()
        .filter(|&(u, v)| close_without_edge(g, u, v, girth_limit))
        .collect()
}

fn random_regular(n: usize, r: usize, rng: &mut impl Rng) -> Option<Graph> {
    for _ in 0..100 {
        let mut points: Vec<usize> = (0..n * r).map(|p| p / r).collect();
        points.shuffle(rng);
        let mut g = Graph::new(n);
        if points
            .chunks(2)
            .all(|pair| pair[0] != pair[1] && g.add_edge(pair[0], pair[1]).unwrap_or(false))
        {
            return Some(g);
        }
    }
    None
}

/// An `r`-regular graph of girth greater than `girth`, by random pairing followed by
/// double-edge swaps that never increase the number of edges on short cycles.
///
/// Starts at the smallest admissible order and grows it after `swaps` unsuccessful swaps,
/// giving up beyond `max_n` vertices.
pub fn high_girth_regular(
    r: usize,
    girth: usize,
    swaps: usize,
    max_n: usize,
    rng: &mut impl Rng,
) -> Result<Graph, ConstructionError> {
    let moore = if r <= 2 {
        girth + 1
    } else {
        moore_bound(r, girth + 1)
    };
    let mut n = moore.max(r + 1);
    while n <= max_n {
        if n * r % 2 == 1 {
            n += 1;
            continue;
        }
        if let Some(mut g) = random_regular(n, r, rng) {
            let mut bad = short_cycle_edges(&g, girth);
            for _ in 0..swaps {
                if bad.is_empty() {
                    return Ok(g);
                }
                let (a, b) = bad[rng.gen_range(0..bad.len())];
                let edges = g.edge_list();
                let (mut c, mut d) = edges[rng.gen_range(0..edges.len())];
                if rng.gen_bool(0.5) {
                    std::mem::swap(&mut c, &mut d);
                }
                if [a, b].contains(&c)
                    || [a, b].contains(&d)
                    || g.has_edge(a, c)
                    || g.has_edge(b, d)
                {
                    continue;
                }
                let mut next = g.clone();
                next.remove_edge(a, b);
                next.remove_edge(c, d);
                next.add_edge(a, c).expect("in range");
                next.add_edge(b, d).expect("in range");
                let next_bad = short_cycle_edges(&next, girth);
                if next_bad.len() <= bad.len() {
                    g = next;
                    bad = next_bad;
                }
            }
            if bad.is_empty() {
                return Ok(g);
            }
        }
        n += 1;
    }
    Err(ConstructionError::RetryBudget {
        what: "high girth regular graph",
        budget: swaps,
    })
}

/// Minimum order of an `r`-regular graph with girth at least `girth`.
fn moore_bound(r: usize, girth: usize) -> usize {
    let (mut total, mut layer, levels) = if girth % 2 == 1 {
        (1, r, (girth - 1) / 2)
    } else {
        (2, 2 * (r - 1), girth / 2 - 1)
    };
    for _ in 0..levels {
        total += layer;
        layer *= r - 1;
    }
    total
}

#[cfg(test)]
mod tests {
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;

    #[test]
    fn outerplanar_counts() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for n in [3, 4, 10, 57] {
            let g = random_maximal_outerplanar(n, &mut rng);
            assert_eq!((g.n(), g.m()), (n, 2 * n - 3));
        }
    }

    #[test]
    fn triangulations_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for n in [3, 4, 5, 30, 120] {
            let t = random_triangulation(n, 3 * n, &mut rng);
            assert_eq!(t.graph().m(), 3 * n - 6);
        }
    }

    #[test]
    fn moore_bounds() {
        assert_eq!(moore_bound(3, 5), 10);
        assert_eq!(moore_bound(3, 4), 6);
        assert_eq!(moore_bound(3, 6), 14);
    }

    #[test]
    fn petersen_like() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let g = high_girth_regular(3, 4, 20_000, 40, &mut rng).unwrap();
        assert!(g.vertices().all(|v| g.degree(v) == 3));
        assert!(g.girth().unwrap() >= 5);
        let l = g.line_graph();
        assert!(l.vertices().all(|v| l.degree(v) == 4));
    }
}
