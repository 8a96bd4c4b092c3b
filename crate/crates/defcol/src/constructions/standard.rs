use crate::graph::Graph;

/// `S(h, d)`: one vertex for `h = 0`, otherwise a dominant vertex over `d + 1` copies
/// of `S(h - 1, d)`. Vertex 0 is the dominant vertex.
pub fn standard_defect(h: usize, d: usize) -> Graph {
    closure_of_tree(&complete_tree_parents(h, d + 1))
}

/// Parent of each vertex in the complete `branching`-ary tree with `h + 1` levels,
/// numbered in depth-first preorder; the root has parent `usize::MAX`.
pub fn complete_tree_parents(h: usize, branching: usize) -> Vec<usize> {
    fn grow(level: usize, h: usize, branching: usize, parent: usize, out: &mut Vec<usize>) {
        let me = out.len();
        out.push(parent);
        if level < h {
            for _ in 0..branching {
                grow(level + 1, h, branching, me, out);
            }
        }
    }
    let mut out = Vec::new();
    grow(0, h, branching, usize::MAX, &mut out);
    out
}

/// Depth of every vertex of a rooted forest given by parent pointers.
pub fn depths(parents: &[usize]) -> Vec<usize> {
    let mut depth = vec![0; parents.len()];
    for v in 0..parents.len() {
        let mut d = 0;
        let mut x = v;
        while parents[x] != usize::MAX {
            x = parents[x];
            d += 1;
        }
        depth[v] = d;
    }
    depth
}

/// Joins every vertex to all of its ancestors.
pub fn closure_of_tree(parents: &[usize]) -> Graph {
    let mut g = Graph::new(parents.len());
    for v in 0..parents.len() {
        let mut x = parents[v];
        while x != usize::MAX {
            g.add_edge(v, x).expect("tree vertices are in range");
            x = parents[x];
        }
    }
    g
}

/// `S̄(h, c)` for `h >= 1`: the path on `c + 1` vertices, then a dominant vertex over `c`
/// copies. Vertex 0 is the dominant vertex when `h >= 2`.
pub fn standard_cluster(h: usize, c: usize) -> Graph {
    if h <= 1 {
        return Graph::path(c + 1);
    }
    let inner = standard_cluster(h - 1, c);
    let mut g = Graph::new(1);
    for _ in 0..c {
        let shift = g.n();
        g = g.disjoint_union(&inner);
        for v in shift..g.n() {
            g.add_edge(0, v).expect("in range");
        }
    }
    g
}

/// `K*_{s,t}`: `K_{s,t}` plus one vertex for each pair on the `s` side, adjacent to that pair.
///
/// The `s` side is `0..s`, the `t` side `s..s+t`, the pair vertices follow in
/// lexicographic pair order.
pub fn kst_star(s: usize, t: usize) -> Graph {
    let mut g = Graph::complete_bipartite(s, t);
    for a in 0..s {
        for b in a + 1..s {
            let x = g.add_vertex();
            g.add_edge(a, x).expect("in range");
            g.add_edge(b, x).expect("in range");
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(standard_defect(0, 3), Graph::new(1));
        assert_eq!(standard_defect(1, 2), Graph::complete_bipartite(1, 3));
        assert_eq!(standard_defect(2, 2).n(), 13);
        assert_eq!(standard_defect(3, 2).n(), 40);
        assert_eq!(standard_cluster(1, 3), Graph::path(4));
        assert_eq!(standard_cluster(2, 2).n(), 7);
        assert_eq!(standard_cluster(3, 3).n(), 40);
    }

    #[test]
    fn kst_star_counts() {
        assert_eq!(kst_star(1, 5), Graph::complete_bipartite(1, 5));
        assert_eq!(kst_star(2, 2).n(), 5);
        assert_eq!(kst_star(7, 13).n(), 41);
    }
}
