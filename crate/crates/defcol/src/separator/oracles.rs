use num_rational::Ratio;

use super::{SeparatorBound, SeparatorError};
use crate::graph::Graph;
use crate::oracle::{is_balanced_separator, min_balanced_separator, Caps};

/// A source of balanced separators with a declared size guarantee.
///
/// `find` receives a graph with local ids and returns a vertex set whose removal leaves
/// components of at most half the vertices. Callers check every answer against `bound`.
pub trait SeparatorOracle {
    fn bound(&self) -> SeparatorBound;
    fn find(&self, g: &Graph) -> Result<Vec<usize>, SeparatorError>;
}

/// Exhaustive smallest balanced separator, refused above the separator cap.
#[derive(Debug, Clone, Copy)]
pub struct ExactOracle {
    pub bound: SeparatorBound,
    pub caps: Caps,
}

impl ExactOracle {
    pub fn new(bound: SeparatorBound) -> Self {
        ExactOracle {
            bound,
            caps: Caps::default(),
        }
    }
}

impl SeparatorOracle for ExactOracle {
    fn bound(&self) -> SeparatorBound {
        self.bound
    }

    fn find(&self, g: &Graph) -> Result<Vec<usize>, SeparatorError> {
        Ok(min_balanced_separator(g, &self.caps)?)
    }
}

/// Centroid of the one tree holding more than half the vertices: one vertex suffices on
/// forests, so `c = 1` for any `beta`.
#[derive(Debug, Clone, Copy)]
pub struct CentroidOracle {
    pub beta: Ratio<i64>,
}

impl Default for CentroidOracle {
    fn default() -> Self {
        CentroidOracle {
            beta: Ratio::new(1, 2),
        }
    }
}

impl SeparatorOracle for CentroidOracle {
    fn bound(&self) -> SeparatorBound {
        SeparatorBound::new(Ratio::from_integer(1), self.beta).expect("beta validated by callers")
    }

    fn find(&self, g: &Graph) -> Result<Vec<usize>, SeparatorError> {
        if !g.is_forest() {
            return Err(SeparatorError::Heuristic {
                n: g.n(),
                reason: "the centroid oracle needs a forest".into(),
            });
        }
        Ok(largest_component(g)
            .map(|comp| vec![centroid(g, &comp)])
            .unwrap_or_default())
    }
}

/// The vertex of the tree `comp` whose removal leaves pieces of at most `|comp| / 2`.
fn centroid(g: &Graph, comp: &[usize]) -> usize {
    let root = comp[0];
    let mut parent = vec![usize::MAX; g.n()];
    let mut order = vec![root];
    parent[root] = root;
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        i += 1;
        for u in g.neighbours(v) {
            if parent[u] == usize::MAX {
                parent[u] = v;
                order.push(u);
            }
        }
    }
    let total = comp.len();
    let mut size = vec![1usize; g.n()];
    for &v in order.iter().rev() {
        if v != root {
            size[parent[v]] += size[v];
        }
    }
    order
        .iter()
        .copied()
        .find(|&v| {
            let above = total - size[v];
            2 * above <= total
                && g.neighbours(v)
                    .filter(|&u| parent[u] == v && u != root)
                    .all(|u| 2 * size[u] <= total)
        })
        .expect("every tree has a centroid")
}

/// The component with more than half the vertices, if any.
fn largest_component(g: &Graph) -> Option<Vec<usize>> {
    g.components().into_iter().find(|c| 2 * c.len() > g.n())
}

/// BFS-level separators for planar-like graphs.
///
/// Inside the component holding more than half the vertices, BFS layers are taken from
/// every root when the component has at most 400 vertices, otherwise from the least vertex,
/// the ends of a double sweep and a vertex of maximum degree. Candidates per root are each
/// balanced layer and the cheapest set of layers leaving no run of kept layers above `n/2`
/// (by dynamic programming); the smallest after pruning to a minimal balanced subset wins. If that still exceeds the declared bound, graphs within the separator
/// cap fall back to the exhaustive search; larger ones are an error.
#[derive(Debug, Clone, Copy)]
pub struct BfsLevelOracle {
    pub bound: SeparatorBound,
    pub caps: Caps,
}

impl BfsLevelOracle {
    pub fn new(bound: SeparatorBound) -> Self {
        BfsLevelOracle {
            bound,
            caps: Caps::default(),
        }
    }

    /// Declared `c = 2 sqrt 2`, `beta = 1/2`.
    pub fn planar() -> Self {
        Self::new(SeparatorBound::square_root(Ratio::from_integer(8)).expect("valid constants"))
    }

    /// The best pruned level separator, before any fallback.
    pub fn level_separator(&self, g: &Graph) -> Vec<usize> {
        let Some(comp) = largest_component(g) else {
            return Vec::new();
        };
        let roots = if comp.len() <= ALL_ROOTS {
            comp.clone()
        } else {
            let farthest = |from: usize| -> usize {
                let dist = g.bfs(from);
                comp.iter()
                    .copied()
                    .max_by_key(|&v| (dist[v], std::cmp::Reverse(v)))
                    .expect("non-empty")
            };
            let first = farthest(comp[0]);
            let second = farthest(first);
            let hub = comp
                .iter()
                .copied()
                .max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)))
                .expect("non-empty");
            let mut roots = vec![comp[0], first, second, hub];
            roots.sort_unstable();
            roots.dedup();
            roots
        };

        let mut best: Option<Vec<usize>> = None;
        let consider = |candidate: Vec<usize>, best: &mut Option<Vec<usize>>| {
            if best.as_ref().is_some_and(|b| b.len() <= candidate.len())
                || !is_balanced_separator(g, &candidate)
            {
                return;
            }
            let pruned = prune(g, candidate);
            if best.as_ref().is_none_or(|b| pruned.len() < b.len()) {
                *best = Some(pruned);
            }
        };
        for root in roots {
            let dist = g.bfs(root);
            let depth = comp.iter().filter_map(|&v| dist[v]).max().unwrap_or(0);
            let mut layers = vec![Vec::new(); depth + 1];
            for &v in &comp {
                if let Some(level) = dist[v] {
                    layers[level].push(v);
                }
            }
            let sizes: Vec<usize> = layers.iter().map(Vec::len).collect();
            let chosen = cheapest_layer_cut(&sizes, g.n() / 2);
            consider(
                chosen
                    .iter()
                    .flat_map(|&l| layers[l].iter().copied())
                    .collect(),
                &mut best,
            );
            for layer in layers {
                consider(layer, &mut best);
            }
        }
        best.expect("the layer cut is balanced")
    }
}

/// Components up to this size try every vertex as a BFS root.
const ALL_ROOTS: usize = 400;

/// Layers to delete, of least total size, so that every run of kept consecutive layers
/// holds at most `half` vertices.
fn cheapest_layer_cut(sizes: &[usize], half: usize) -> Vec<usize> {
    let depth = sizes.len();
    // cost[i]: cheapest deletion set whose last deleted layer is i, with every earlier run short.
    let mut cost = vec![usize::MAX; depth];
    let mut previous = vec![None; depth];
    for i in 0..depth {
        let mut run = 0;
        for j in (0..i).rev() {
            if cost[j] != usize::MAX && cost[j] + sizes[i] < cost[i] {
                cost[i] = cost[j] + sizes[i];
                previous[i] = Some(j);
            }
            run += sizes[j];
            if run > half {
                break;
            }
        }
        if sizes[..i].iter().sum::<usize>() <= half && sizes[i] < cost[i] {
            cost[i] = sizes[i];
            previous[i] = None;
        }
    }
    if sizes.iter().sum::<usize>() <= half {
        return Vec::new();
    }
    let mut tail = 0;
    let mut last = None;
    for i in (0..depth).rev() {
        if cost[i] != usize::MAX && last.is_none_or(|l: usize| cost[i] < cost[l]) {
            last = Some(i);
        }
        tail += sizes[i];
        if tail > half {
            break;
        }
    }
    let mut out = Vec::new();
    let mut at = last;
    while let Some(i) = at {
        out.push(i);
        at = previous[i];
    }
    out.reverse();
    out
}

/// Drops separator vertices, in order, whenever balance survives without them.
fn prune(g: &Graph, mut separator: Vec<usize>) -> Vec<usize> {
    let mut i = 0;
    while i < separator.len() {
        let v = separator.remove(i);
        if !is_balanced_separator(g, &separator) {
            separator.insert(i, v);
            i += 1;
        }
    }
    separator
}

impl SeparatorOracle for BfsLevelOracle {
    fn bound(&self) -> SeparatorBound {
        self.bound
    }

    fn find(&self, g: &Graph) -> Result<Vec<usize>, SeparatorError> {
        let level = self.level_separator(g);
        if self.bound.admits(level.len(), g.n()) {
            return Ok(level);
        }
        if g.n() <= self.caps.separator {
            return Ok(min_balanced_separator(g, &self.caps)?);
        }
        Err(SeparatorError::Heuristic {
            n: g.n(),
            reason: format!(
                "best level separator has {} vertices, limit {:.2}",
                level.len(),
                self.bound.separator_limit(g.n())
            ),
        })
    }
}
