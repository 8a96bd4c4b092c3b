//! Simple undirected graphs on vertices `0..n` and the structural objects built on them.

mod blocks;
mod density;
mod embedding;
mod layering;
mod tpartition;
mod triangulation;

pub use blocks::{blocks_and_cutvertices, Blocks};
pub use density::{mad_by_subsets, mad_exact};
pub use embedding::{euler_genus, trace_faces};
pub use layering::{bfs_layering, Layering};
pub use tpartition::TPartition;
pub use triangulation::PlaneTriangulation;

use std::collections::{BTreeSet, VecDeque};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("vertex {0} is not reached from the layering source")]
    Unreached(usize),
    #[error("edge {u}-{v} joins layers {lu} and {lv}")]
    LayerSpan {
        u: usize,
        v: usize,
        lu: usize,
        lv: usize,
    },
    #[error("vertex set {0:?} does not induce a connected subgraph")]
    DisconnectedSet(Vec<usize>),
    #[error("invalid plane triangulation: {0}")]
    Triangulation(String),
    #[error("invalid T-partition: {0}")]
    TPartition(String),
    #[error("label count {labels} does not match vertex count {n}")]
    LabelCount { labels: usize, n: usize },
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<BTreeSet<usize>>,
    labels: Option<Vec<String>>,
}

/// A subgraph together with the host vertex behind each of its vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgraph {
    pub graph: Graph,
    /// `host[i]` is the host vertex of subgraph vertex `i`.
    pub host: Vec<usize>,
}

/// Result of contracting a connected set to a single vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Contraction {
    pub graph: Graph,
    /// `map[v]` is the vertex of the contracted graph that host vertex `v` became.
    pub map: Vec<usize>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![BTreeSet::new(); n],
            labels: None,
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.adj[u].insert(v);
                g.adj[v].insert(u);
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::new(n);
        for v in 1..n {
            g.adj[v - 1].insert(v);
            g.adj[v].insert(v - 1);
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::path(n);
        if n >= 3 {
            g.adj[0].insert(n - 1);
            g.adj[n - 1].insert(0);
        }
        g
    }

    pub fn complete_bipartite(s: usize, t: usize) -> Self {
        let mut g = Graph::new(s + t);
        for u in 0..s {
            for v in s..s + t {
                g.adj[u].insert(v);
                g.adj[v].insert(u);
            }
        }
        g
    }

    /// The `rows x cols` square grid, vertex `(r, c)` at index `r * cols + c`.
    pub fn grid(rows: usize, cols: usize) -> Self {
        let mut g = Graph::new(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                let v = r * cols + c;
                if c + 1 < cols {
                    g.adj[v].insert(v + 1);
                    g.adj[v + 1].insert(v);
                }
                if r + 1 < rows {
                    g.adj[v].insert(v + cols);
                    g.adj[v + cols].insert(v);
                }
            }
        }
        g
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, GraphError> {
        if labels.len() != self.n() {
            return Err(GraphError::LabelCount {
                labels: labels.len(),
                n: self.n(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    fn check(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        }
    }

    /// Adds a vertex and returns its index.
    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(BTreeSet::new());
        if let Some(labels) = &mut self.labels {
            labels.push(String::new());
        }
        self.adj.len() - 1
    }

    /// Adds `uv`; returns whether the edge is new.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool, GraphError> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Err(GraphError::Loop(u));
        }
        self.adj[v].insert(u);
        Ok(self.adj[u].insert(v))
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        if u >= self.n() || v >= self.n() {
            return false;
        }
        self.adj[v].remove(&u);
        self.adj[u].remove(&v)
    }

    /// Removes every edge at `v`, leaving it isolated.
    pub fn isolate(&mut self, v: usize) {
        let nbrs = std::mem::take(&mut self.adj[v]);
        for u in nbrs {
            self.adj[u].remove(&v);
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(&v)
    }

    pub fn neighbours(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn neighbour_set(&self, v: usize) -> &BTreeSet<usize> {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).min().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.range(u + 1..).map(move |&v| (u, v)))
    }

    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        self.edges().collect()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n()
    }

    /// The subgraph induced by `vertices`, relabelled `0..k` in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Subgraph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::new(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            for &u in &self.adj[v] {
                let j = index[u];
                if j != usize::MAX {
                    g.adj[i].insert(j);
                }
            }
        }
        if let Some(labels) = &self.labels {
            g.labels = Some(vertices.iter().map(|&v| labels[v].clone()).collect());
        }
        Subgraph {
            graph: g,
            host: vertices.to_vec(),
        }
    }

    /// The graph with `removed` deleted, keeping the remaining vertices in order.
    pub fn without(&self, removed: &[usize]) -> Subgraph {
        let mut gone = vec![false; self.n()];
        for &v in removed {
            gone[v] = true;
        }
        let keep: Vec<usize> = self.vertices().filter(|&v| !gone[v]).collect();
        self.induced_subgraph(&keep)
    }

    /// Connected components, each sorted, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_within(&vec![true; self.n()])
    }

    /// Components of the subgraph induced by the vertices with `alive[v]`.
    pub fn components_within(&self, alive: &[bool]) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for s in self.vertices() {
            if !alive[s] || seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for &u in &self.adj[v] {
                    if alive[u] && !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Distances from `source`; `None` for unreachable vertices.
    pub fn bfs(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap_or(0);
            for &u in &self.adj[v] {
                if dist[u].is_none() {
                    dist[u] = Some(d + 1);
                    queue.push_back(u);
                }
            }
        }
        dist
    }

    /// A shortest path from `from` to `to` using only vertices with `alive[v]`,
    /// breaking ties towards smaller vertex ids.
    pub fn shortest_path_within(
        &self,
        from: usize,
        to: usize,
        alive: &[bool],
    ) -> Option<Vec<usize>> {
        let mut parent = vec![usize::MAX; self.n()];
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
            for &u in &self.adj[v] {
                if alive[u] && parent[u] == usize::MAX {
                    parent[u] = v;
                    queue.push_back(u);
                }
            }
        }
        None
    }

    pub fn is_forest(&self) -> bool {
        self.m() + self.components().len() == self.n()
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for s in self.vertices() {
            let mut dist = vec![usize::MAX; self.n()];
            let mut parent = vec![usize::MAX; self.n()];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &u in &self.adj[v] {
                    if dist[u] == usize::MAX {
                        dist[u] = dist[v] + 1;
                        parent[u] = v;
                        queue.push_back(u);
                    } else if parent[v] != u {
                        let len = dist[u] + dist[v] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// The line graph; vertex `i` is the `i`-th edge of [`Graph::edge_list`].
    pub fn line_graph(&self) -> Graph {
        let edges = self.edge_list();
        let mut at: Vec<Vec<usize>> = vec![Vec::new(); self.n()];
        for (i, &(u, v)) in edges.iter().enumerate() {
            at[u].push(i);
            at[v].push(i);
        }
        let mut lg = Graph::new(edges.len());
        for incident in &at {
            for (a, &e) in incident.iter().enumerate() {
                for &f in &incident[a + 1..] {
                    lg.adj[e].insert(f);
                    lg.adj[f].insert(e);
                }
            }
        }
        lg
    }

    /// Contracts the connected set `set` into one vertex placed at `min(set)`;
    /// the other vertices are compacted in order.
    pub fn contract_set(&self, set: &[usize]) -> Result<Contraction, GraphError> {
        for &v in set {
            self.check(v)?;
        }
        let Some(&rep) = set.iter().min() else {
            return Ok(Contraction {
                graph: self.clone(),
                map: self.vertices().collect(),
            });
        };
        let mut inside = vec![false; self.n()];
        for &v in set {
            inside[v] = true;
        }
        let comps = self.components_within(&inside);
        if comps.len() != 1 {
            let mut s = set.to_vec();
            s.sort_unstable();
            s.dedup();
            return Err(GraphError::DisconnectedSet(s));
        }
        let mut map = vec![0; self.n()];
        let mut next = 0;
        for v in self.vertices() {
            if inside[v] && v != rep {
                continue;
            }
            map[v] = next;
            next += 1;
        }
        for v in self.vertices() {
            if inside[v] {
                map[v] = map[rep];
            }
        }
        let mut g = Graph::new(next);
        for (u, v) in self.edges() {
            let (a, b) = (map[u], map[v]);
            if a != b {
                g.adj[a].insert(b);
                g.adj[b].insert(a);
            }
        }
        Ok(Contraction { graph: g, map })
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n();
        let mut g = self.clone();
        g.labels = None;
        for nb in &other.adj {
            g.adj.push(nb.iter().map(|&u| u + shift).collect());
        }
        g
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let mut g = Graph::new(self.n());
        for (u, v) in self.edges() {
            g.adj[perm[u]].insert(perm[v]);
            g.adj[perm[v]].insert(perm[u]);
        }
        g
    }

    /// Vertices in an order where each has the fewest remaining neighbours when removed.
    pub fn degeneracy_order(&self) -> (usize, Vec<usize>) {
        let n = self.n();
        let mut deg: Vec<usize> = self.adj.iter().map(BTreeSet::len).collect();
        let mut removed = vec![false; n];
        let mut order = Vec::with_capacity(n);
        let mut degeneracy = 0;
        for _ in 0..n {
            let v = (0..n)
                .filter(|&v| !removed[v])
                .min_by_key(|&v| (deg[v], v))
                .unwrap_or(0);
            degeneracy = degeneracy.max(deg[v]);
            removed[v] = true;
            order.push(v);
            for &u in &self.adj[v] {
                if !removed[u] {
                    deg[u] -= 1;
                }
            }
        }
        (degeneracy, order)
    }
}
