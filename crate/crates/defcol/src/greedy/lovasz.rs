use crate::colouring::Colouring;
use crate::graph::Graph;

/// Result of the Lovász local search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LovaszRun {
    pub colouring: Colouring,
    /// Palette size `floor(Δ / (d + 1)) + 1`; not every colour need be used.
    pub palette: usize,
    pub iterations: usize,
    /// Number of bichromatic edges before the search and after each move.
    pub bichromatic: Vec<usize>,
}

/// Colouring with defect `d` from `floor(Δ / (d + 1)) + 1` colours.
///
/// Starts from the all-zero colouring and repeatedly moves the lowest overloaded vertex
/// to the colour it sees least often (lowest colour on ties). Every move raises the
/// number of bichromatic edges, so there are at most `|E|` moves.
pub fn lovasz_defective(g: &Graph, d: usize) -> LovaszRun {
    let palette = g.max_degree() / (d + 1) + 1;
    let n = g.n();
    let mut colour = vec![0usize; n];
    let mut seen = vec![vec![0usize; palette]; n];
    for v in 0..n {
        seen[v][0] = g.degree(v);
    }
    let mut bichromatic = vec![0];
    let mut iterations = 0;
    let mut cursor = 0;
    while cursor < n {
        let v = cursor;
        if seen[v][colour[v]] <= d {
            cursor += 1;
            continue;
        }
        let old = colour[v];
        let new = (0..palette).min_by_key(|&c| (seen[v][c], c)).unwrap_or(0);
        let gained = seen[v][old] - seen[v][new];
        colour[v] = new;
        for u in g.neighbours(v) {
            seen[u][old] -= 1;
            seen[u][new] += 1;
        }
        iterations += 1;
        bichromatic.push(bichromatic.last().copied().unwrap_or(0) + gained);
        cursor = g
            .neighbours(v)
            .filter(|&u| colour[u] == new)
            .min()
            .map_or(cursor, |u| u.min(cursor));
    }
    LovaszRun {
        colouring: Colouring(colour),
        palette,
        iterations,
        bichromatic,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colouring::audit;

    #[test]
    fn clique_defects() {
        let run = lovasz_defective(&Graph::complete(7), 1);
        assert_eq!(run.palette, 4);
        assert!(audit(&Graph::complete(7), &run.colouring).unwrap().defect <= 1);
        let run = lovasz_defective(&Graph::complete(5), 4);
        assert_eq!((run.palette, run.iterations), (1, 0));
    }

    #[test]
    fn bichromatic_count_strictly_grows() {
        let g = Graph::grid(5, 5);
        let run = lovasz_defective(&g, 0);
        assert!(run.bichromatic.windows(2).all(|w| w[0] < w[1]));
        assert!(run.iterations <= g.m());
        assert_eq!(audit(&g, &run.colouring).unwrap().defect, 0);
    }
}
