use num_rational::Ratio;

use super::Graph;
use crate::flow::{FlowNetwork, INFINITE};

/// Maximum average degree `max 2e(H)/|H|` over non-empty subgraphs, exactly.
///
/// Iterates densest-subgraph cuts: at density `p/q` the closure network has value
/// `max_S q*e(S) - p*|S| = q*m - mincut`, and a positive value yields a denser set.
pub fn mad_exact(g: &Graph) -> Ratio<i64> {
    let n = g.n();
    let m = g.m();
    if m == 0 {
        return Ratio::from_integer(0);
    }
    let edges = g.edge_list();
    let mut density = Ratio::new(m as i64, n as i64);
    loop {
        let (p, q) = (*density.numer(), *density.denom());
        let source = 0;
        let sink = 1;
        let mut net = FlowNetwork::new(2 + m + n);
        for (i, &(u, v)) in edges.iter().enumerate() {
            let e = 2 + i;
            net.add_arc(source, e, q);
            net.add_arc(e, 2 + m + u, INFINITE);
            net.add_arc(e, 2 + m + v, INFINITE);
        }
        for v in 0..n {
            net.add_arc(2 + m + v, sink, p);
        }
        let cut = net.max_flow(source, sink);
        if q * m as i64 - cut <= 0 {
            return density * 2;
        }
        let side = net.source_side(source);
        let set: Vec<bool> = (0..n).map(|v| side[2 + m + v]).collect();
        let size = set.iter().filter(|&&b| b).count() as i64;
        let inner = edges.iter().filter(|&&(u, v)| set[u] && set[v]).count() as i64;
        let next = Ratio::new(inner, size);
        if next <= density {
            return density * 2;
        }
        density = next;
    }
}

/// Reference value by enumerating every vertex subset; for at most 20 vertices.
pub fn mad_by_subsets(g: &Graph) -> Ratio<i64> {
    let n = g.n();
    assert!(n <= 20, "subset enumeration limited to 20 vertices");
    let edges = g.edge_list();
    let mut best = Ratio::from_integer(0);
    for mask in 1u32..(1u32 << n) {
        let inner = edges
            .iter()
            .filter(|&&(u, v)| mask >> u & 1 == 1 && mask >> v & 1 == 1)
            .count();
        let r = Ratio::new(2 * inner as i64, mask.count_ones() as i64);
        if r > best {
            best = r;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_values() {
        assert_eq!(mad_exact(&Graph::new(3)), Ratio::from_integer(0));
        assert_eq!(mad_exact(&Graph::complete(5)), Ratio::from_integer(4));
        assert_eq!(mad_exact(&Graph::path(4)), Ratio::new(3, 2));
        assert_eq!(
            mad_exact(&Graph::complete_bipartite(3, 3)),
            Ratio::from_integer(3)
        );
    }

    #[test]
    fn densest_part_dominates() {
        let mut g = Graph::complete(4).disjoint_union(&Graph::path(10));
        g.add_edge(0, 4).unwrap();
        assert_eq!(mad_exact(&g), Ratio::from_integer(3));
        assert_eq!(
            mad_by_subsets(&Graph::grid(3, 3)),
            mad_exact(&Graph::grid(3, 3))
        );
    }
}
