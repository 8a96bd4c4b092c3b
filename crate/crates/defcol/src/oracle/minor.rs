use std::collections::{BTreeSet, HashSet};

use super::{check_cap, treewidth_exact, Caps, OracleError};
use crate::graph::Graph;

/// Whether `h` is isomorphic to a (not necessarily induced) subgraph of `g`.
pub fn is_subgraph(h: &Graph, g: &Graph) -> bool {
    embed(h, g).is_some()
}

/// An injective map from `h` into `g` preserving edges.
pub fn embed(h: &Graph, g: &Graph) -> Option<Vec<usize>> {
    if h.n() > g.n() || h.m() > g.m() {
        return None;
    }
    let order = pattern_order(h);
    let mut map = vec![usize::MAX; h.n()];
    let mut used = vec![false; g.n()];
    place(h, g, &order, 0, &mut map, &mut used).then_some(map)
}

fn pattern_order(h: &Graph) -> Vec<usize> {
    let n = h.n();
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (links[v], h.degree(v), std::cmp::Reverse(v)))
            .unwrap_or(0);
        placed[v] = true;
        order.push(v);
        for u in h.neighbours(v) {
            links[u] += 1;
        }
    }
    order
}

fn place(
    h: &Graph,
    g: &Graph,
    order: &[usize],
    pos: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if pos == order.len() {
        return true;
    }
    let x = order[pos];
    let anchors: Vec<usize> = h
        .neighbours(x)
        .filter(|&y| map[y] != usize::MAX)
        .map(|y| map[y])
        .collect();
    let candidates: Vec<usize> = match anchors.first() {
        Some(&a) => g.neighbours(a).collect(),
        None => g.vertices().collect(),
    };
    for v in candidates {
        if used[v] || g.degree(v) < h.degree(x) || !anchors.iter().all(|&a| g.has_edge(a, v)) {
            continue;
        }
        map[x] = v;
        used[v] = true;
        if place(h, g, order, pos + 1, map, used) {
            return true;
        }
        used[v] = false;
        map[x] = usize::MAX;
    }
    false
}

/// Width of the better of the min-degree and min-fill elimination orderings.
pub fn treewidth_upper_bound(g: &Graph) -> usize {
    eliminate(g, false).min(eliminate(g, true))
}

fn eliminate(g: &Graph, min_fill: bool) -> usize {
    let n = g.n();
    let mut adj: Vec<BTreeSet<usize>> = g.vertices().map(|v| g.neighbour_set(v).clone()).collect();
    let mut alive = vec![true; n];
    let mut width = 0;
    for _ in 0..n {
        let score = |v: usize| -> usize {
            if !min_fill {
                return adj[v].len();
            }
            let nb: Vec<usize> = adj[v].iter().copied().collect();
            let mut missing = 0;
            for (i, &a) in nb.iter().enumerate() {
                for &b in &nb[i + 1..] {
                    if !adj[a].contains(&b) {
                        missing += 1;
                    }
                }
            }
            missing
        };
        let Some(v) = (0..n)
            .filter(|&v| alive[v])
            .min_by_key(|&v| (score(v), adj[v].len(), v))
        else {
            break;
        };
        let nb: Vec<usize> = adj[v].iter().copied().collect();
        width = width.max(nb.len());
        for &a in &nb {
            adj[a].remove(&v);
            for &b in &nb {
                if a != b {
                    adj[a].insert(b);
                }
            }
        }
        adj[v].clear();
        alive[v] = false;
    }
    width
}

type Edge = (usize, usize);

/// Searches for a set of edges to contract so that the pattern becomes a subgraph.
///
/// A state is a graph plus the edges already decided not to be contracted.
struct MinorSearch<'a> {
    pattern: &'a Graph,
    pattern_tw: usize,
    min_degree: usize,
    connected: bool,
    seen: HashSet<(usize, Vec<Edge>, Vec<Edge>)>,
}

fn remap(kept: &BTreeSet<Edge>, map: &[usize]) -> BTreeSet<Edge> {
    kept.iter()
        .map(|&(u, v)| (map[u].min(map[v]), map[u].max(map[v])))
        .filter(|&(u, v)| u != v)
        .collect()
}

impl MinorSearch<'_> {
    /// Deletes and suppresses vertices that cannot matter given the pattern's minimum degree.
    fn reduce(&self, mut g: Graph, mut kept: BTreeSet<Edge>) -> (Graph, BTreeSet<Edge>) {
        loop {
            let victim = g.vertices().find(|&v| {
                let d = g.degree(v);
                (d == 0 && self.min_degree >= 1)
                    || (d == 1 && self.min_degree >= 2)
                    || (d == 2
                        && self.min_degree >= 3
                        && g.neighbours(v)
                            .any(|a| !kept.contains(&(v.min(a), v.max(a)))))
            });
            let Some(v) = victim else { return (g, kept) };
            let (next, map) = if g.degree(v) == 2 {
                let a = g
                    .neighbours(v)
                    .find(|&a| !kept.contains(&(v.min(a), v.max(a))))
                    .unwrap_or(v);
                match g.contract_set(&[v, a]) {
                    Ok(c) => (c.graph, c.map),
                    Err(_) => return (g, kept),
                }
            } else {
                let sub = g.without(&[v]);
                let mut map = vec![usize::MAX; g.n()];
                for (i, &h) in sub.host.iter().enumerate() {
                    map[h] = i;
                }
                map[v] = 0;
                kept.retain(|&(x, y)| x != v && y != v);
                (sub.graph, map)
            };
            kept = remap(&kept, &map);
            g = next;
        }
    }

    fn search(&mut self, g: Graph, kept: BTreeSet<Edge>) -> bool {
        let (g, kept) = self.reduce(g, kept);
        let h = self.pattern;
        if g.n() < h.n() || g.m() < h.m() {
            return false;
        }
        if self.connected && !g.is_connected() {
            return g.components().into_iter().any(|c| {
                let sub = g.induced_subgraph(&c);
                let mut map = vec![usize::MAX; g.n()];
                for (i, &x) in sub.host.iter().enumerate() {
                    map[x] = i;
                }
                let inner = kept
                    .iter()
                    .filter(|&&(u, _)| map[u] != usize::MAX)
                    .copied()
                    .collect();
                self.search(sub.graph, remap(&inner, &map))
            });
        }
        if !self
            .seen
            .insert((g.n(), g.edge_list(), kept.iter().copied().collect()))
        {
            return false;
        }
        if treewidth_upper_bound(&g) < self.pattern_tw {
            return false;
        }
        if is_subgraph(h, &g) {
            return true;
        }
        if g.n() == h.n() || g.m() == h.m() {
            return false;
        }
        let free = |&(u, v): &Edge| !kept.contains(&(u, v));
        let Some((u, v)) = g
            .edges()
            .filter(free)
            .min_by_key(|&(u, v)| (g.degree(u).min(g.degree(v)), u, v))
        else {
            return false;
        };
        if let Ok(c) = g.contract_set(&[u, v]) {
            if self.search(c.graph, remap(&kept, &c.map)) {
                return true;
            }
        }
        let mut kept = kept;
        kept.insert((u, v));
        self.search(g, kept)
    }
}

/// Whether `h` is a minor of `g`, by exhaustive contraction and deletion.
pub fn has_minor(g: &Graph, h: &Graph, caps: &Caps) -> Result<bool, OracleError> {
    check_cap("minor test pattern", h.n(), caps.minor_pattern)?;
    check_cap("minor test host", g.n(), caps.minor_host)?;
    if h.m() == 0 {
        return Ok(g.n() >= h.n());
    }
    let mut search = MinorSearch {
        pattern: h,
        pattern_tw: treewidth_exact(
            h,
            &Caps {
                tree_depth: 20,
                ..*caps
            },
        )?,
        min_degree: h.min_degree(),
        connected: h.is_connected(),
        seen: HashSet::new(),
    };
    Ok(search.search(g.clone(), BTreeSet::new()))
}

/// Whether some subdivision of `h` is a subgraph of `g`; brute force for tiny instances.
pub fn has_topological_minor(g: &Graph, h: &Graph, caps: &Caps) -> Result<bool, OracleError> {
    check_cap("topological minor pattern", h.n(), caps.minor_pattern)?;
    check_cap("topological minor host", g.n(), 16)?;
    let mut branch = vec![usize::MAX; h.n()];
    let mut used = vec![false; g.n()];
    Ok(choose_branches(g, h, 0, &mut branch, &mut used))
}

fn choose_branches(
    g: &Graph,
    h: &Graph,
    x: usize,
    branch: &mut [usize],
    used: &mut [bool],
) -> bool {
    if x == h.n() {
        let edges = h.edge_list();
        return route(g, &edges, 0, branch, used);
    }
    for v in g.vertices() {
        if !used[v] && g.degree(v) >= h.degree(x) {
            used[v] = true;
            branch[x] = v;
            if choose_branches(g, h, x + 1, branch, used) {
                return true;
            }
            used[v] = false;
        }
    }
    false
}

fn route(
    g: &Graph,
    edges: &[(usize, usize)],
    i: usize,
    branch: &[usize],
    used: &mut [bool],
) -> bool {
    let Some(&(a, b)) = edges.get(i) else {
        return true;
    };
    let (s, t) = (branch[a], branch[b]);
    let mut path = vec![s];
    walk(g, edges, i, branch, used, t, &mut path)
}

fn walk(
    g: &Graph,
    edges: &[(usize, usize)],
    i: usize,
    branch: &[usize],
    used: &mut [bool],
    target: usize,
    path: &mut Vec<usize>,
) -> bool {
    let last = *path.last().unwrap_or(&target);
    for u in g.neighbours(last).collect::<Vec<_>>() {
        if u == target {
            if route(g, edges, i + 1, branch, used) {
                return true;
            }
        } else if !used[u] {
            used[u] = true;
            path.push(u);
            if walk(g, edges, i, branch, used, target, path) {
                return true;
            }
            path.pop();
            used[u] = false;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn petersen() -> Graph {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((i + 5, (i + 2) % 5 + 5));
        }
        Graph::from_edges(10, &e).unwrap()
    }

    #[test]
    fn trees_have_no_triangle_minor() {
        let caps = Caps::default();
        assert_eq!(
            has_minor(&Graph::path(10), &Graph::complete(3), &caps),
            Ok(false)
        );
        assert_eq!(
            has_minor(&Graph::cycle(10), &Graph::complete(3), &caps),
            Ok(true)
        );
    }

    #[test]
    fn petersen_has_k5_minor() {
        let caps = Caps::default();
        let p = petersen();
        assert_eq!(treewidth_exact(&p, &caps), Ok(4));
        assert!(treewidth_upper_bound(&p) >= 4);
        assert_eq!(has_minor(&petersen(), &Graph::complete(5), &caps), Ok(true));
        assert_eq!(
            has_minor(&petersen(), &Graph::complete_bipartite(3, 3), &caps),
            Ok(true)
        );
        assert_eq!(
            has_minor(&Graph::grid(3, 3), &Graph::complete(5), &caps),
            Ok(false)
        );
        assert_eq!(
            has_minor(&Graph::grid(3, 3), &Graph::complete(4), &caps),
            Ok(true)
        );
    }

    #[test]
    fn isolated_pattern_vertices_need_spares() {
        let caps = Caps::default();
        let h = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(has_minor(&Graph::complete(3), &h, &caps), Ok(false));
        assert_eq!(has_minor(&Graph::cycle(5), &h, &caps), Ok(false));
        assert_eq!(
            has_minor(&Graph::cycle(5).disjoint_union(&Graph::new(1)), &h, &caps),
            Ok(true)
        );
    }

    #[test]
    fn subgraph_embedding() {
        assert!(is_subgraph(&Graph::cycle(4), &Graph::grid(2, 3)));
        assert!(!is_subgraph(&Graph::complete(3), &Graph::grid(3, 3)));
    }

    #[test]
    fn refuses_large_patterns() {
        let r = has_minor(&Graph::complete(10), &Graph::complete(9), &Caps::default());
        assert!(matches!(r, Err(OracleError::CapExceeded { .. })));
    }
}
