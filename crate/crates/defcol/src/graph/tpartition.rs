use super::{Graph, GraphError};

/// A partition of a host graph's vertices into bags indexed by the nodes of a tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TPartition {
    pub tree: Graph,
    pub bags: Vec<Vec<usize>>,
}

impl TPartition {
    pub fn new(host: &Graph, tree: Graph, bags: Vec<Vec<usize>>) -> Result<Self, GraphError> {
        let bad = |m: String| GraphError::TPartition(m);
        if tree.n() == 0 || !tree.is_connected() || tree.m() + 1 != tree.n() {
            return Err(bad("index graph is not a tree".into()));
        }
        if bags.len() != tree.n() {
            return Err(bad(format!(
                "{} bags for {} tree nodes",
                bags.len(),
                tree.n()
            )));
        }
        let mut owner = vec![usize::MAX; host.n()];
        for (i, bag) in bags.iter().enumerate() {
            for &v in bag {
                if v >= host.n() {
                    return Err(GraphError::VertexOutOfRange {
                        vertex: v,
                        n: host.n(),
                    });
                }
                if owner[v] != usize::MAX {
                    return Err(bad(format!("vertex {v} lies in bags {} and {i}", owner[v])));
                }
                owner[v] = i;
            }
        }
        if let Some(v) = owner.iter().position(|&o| o == usize::MAX) {
            return Err(bad(format!("vertex {v} lies in no bag")));
        }
        Ok(TPartition { tree, bags })
    }

    /// `owner[v]` is the tree node whose bag holds `v`.
    pub fn owner(&self, n: usize) -> Vec<usize> {
        let mut owner = vec![usize::MAX; n];
        for (i, bag) in self.bags.iter().enumerate() {
            for &v in bag {
                owner[v] = i;
            }
        }
        owner
    }

    /// Tree path between two nodes, inclusive.
    pub fn tree_path(&self, from: usize, to: usize) -> Vec<usize> {
        let alive = vec![true; self.tree.n()];
        self.tree
            .shortest_path_within(from, to, &alive)
            .unwrap_or_default()
    }

    /// Number of host edges crossing each tree edge, keyed like `tree.edge_list()`.
    pub fn crossing_counts(&self, host: &Graph) -> Vec<((usize, usize), usize)> {
        let owner = self.owner(host.n());
        let tree_edges = self.tree.edge_list();
        let mut count = vec![0; tree_edges.len()];
        for (u, v) in host.edges() {
            let path = self.tree_path(owner[u], owner[v]);
            for w in path.windows(2) {
                let e = (w[0].min(w[1]), w[0].max(w[1]));
                if let Ok(i) = tree_edges.binary_search(&e) {
                    count[i] += 1;
                }
            }
        }
        tree_edges.into_iter().zip(count).collect()
    }

    pub fn adhesion(&self, host: &Graph) -> usize {
        self.crossing_counts(host)
            .into_iter()
            .map(|(_, c)| c)
            .max()
            .unwrap_or(0)
    }
}
