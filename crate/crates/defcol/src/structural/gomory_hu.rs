use super::StructuralError;
use crate::flow::FlowNetwork;
use crate::graph::Graph;

/// A Gomory–Hu cut tree: each tree edge carries the size of a minimum edge cut between its
/// ends, and removing it splits the vertices along such a cut.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GomoryHuTree {
    /// `parent[v]` for every vertex except the root 0, which holds `usize::MAX`.
    pub parent: Vec<usize>,
    /// Weight of the edge from each vertex to its parent; 0 at the root.
    pub weight: Vec<usize>,
}

impl GomoryHuTree {
    pub fn n(&self) -> usize {
        self.parent.len()
    }

    /// Tree edges `(child, parent, weight)`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        (0..self.n())
            .filter(|&v| self.parent[v] != usize::MAX)
            .map(|v| (v, self.parent[v], self.weight[v]))
    }

    pub fn tree(&self) -> Graph {
        let edges: Vec<(usize, usize)> = self.edges().map(|(u, v, _)| (u, v)).collect();
        Graph::from_edges(self.n(), &edges).expect("tree edges are in range")
    }

    /// Least weight on the tree path between `u` and `v`: the minimum `u`-`v` edge cut.
    pub fn min_cut(&self, u: usize, v: usize) -> usize {
        if u == v {
            return usize::MAX;
        }
        let depth = |mut x: usize| {
            let mut d = 0;
            while self.parent[x] != usize::MAX {
                x = self.parent[x];
                d += 1;
            }
            d
        };
        let (mut a, mut b) = (u, v);
        let (mut da, mut db) = (depth(a), depth(b));
        let mut best = usize::MAX;
        while da > db {
            best = best.min(self.weight[a]);
            a = self.parent[a];
            da -= 1;
        }
        while db > da {
            best = best.min(self.weight[b]);
            b = self.parent[b];
            db -= 1;
        }
        while a != b {
            best = best.min(self.weight[a]).min(self.weight[b]);
            a = self.parent[a];
            b = self.parent[b];
        }
        best
    }

    /// Vertices on the child side of the tree edge above `child`.
    pub fn below(&self, child: usize) -> Vec<bool> {
        let mut side = vec![false; self.n()];
        for v in 0..self.n() {
            let mut x = v;
            while x != usize::MAX {
                if x == child {
                    side[v] = true;
                    break;
                }
                x = self.parent[x];
            }
        }
        side
    }
}

/// Unit-capacity maximum flow between `s` and `t`, with the source side of a minimum cut.
pub(crate) fn min_edge_cut(g: &Graph, s: usize, t: usize) -> (usize, Vec<bool>) {
    let mut net = FlowNetwork::new(g.n());
    for (u, v) in g.edges() {
        net.add_edge(u, v, 1);
    }
    let value = net.max_flow(s, t) as usize;
    let mut side = net.source_side(s);
    side.truncate(g.n());
    (value, side)
}

/// Gomory–Hu tree of a connected graph by Gusfield's `n - 1` flow computations.
pub fn gomory_hu(g: &Graph) -> Result<GomoryHuTree, StructuralError> {
    if !g.is_connected() {
        return Err(StructuralError::Disconnected);
    }
    let n = g.n();
    let mut parent = vec![0usize; n];
    let mut weight = vec![0usize; n];
    for s in 1..n {
        let t = parent[s];
        let (value, side) = min_edge_cut(g, s, t);
        weight[s] = value;
        for i in 0..n {
            if i != s && side[i] && parent[i] == t {
                parent[i] = s;
            }
        }
        if t != 0 && side[parent[t]] {
            parent[s] = parent[t];
            parent[t] = s;
            weight[s] = weight[t];
            weight[t] = value;
        }
    }
    if n > 0 {
        parent[0] = usize::MAX;
        weight[0] = 0;
    }
    Ok(GomoryHuTree { parent, weight })
}

/// Cut tree of every component, with component roots chained by weight-0 edges.
pub(crate) fn cut_forest(g: &Graph) -> GomoryHuTree {
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut weight = vec![0usize; n];
    let mut previous_root: Option<usize> = None;
    for comp in g.components() {
        let sub = g.induced_subgraph(&comp);
        let tree = gomory_hu(&sub.graph).expect("components are connected");
        for (child, up, w) in tree.edges() {
            parent[sub.host[child]] = sub.host[up];
            weight[sub.host[child]] = w;
        }
        let root = sub.host[0];
        if let Some(prev) = previous_root {
            parent[root] = prev;
            weight[root] = 0;
        }
        previous_root = Some(previous_root.unwrap_or(root));
    }
    GomoryHuTree { parent, weight }
}
