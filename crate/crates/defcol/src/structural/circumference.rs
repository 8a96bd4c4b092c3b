use std::collections::{BTreeSet, VecDeque};

use super::StructuralError;
use crate::colouring::{audit, Colouring};
use crate::graph::{blocks_and_cutvertices, Graph};
use crate::oracle::{longest_cycle, Caps};

/// `floor(3 log2 k)`, computed as `floor(log2 k^3)`.
pub fn circumference_palette(k: usize) -> usize {
    ((k as u128).pow(3)).ilog2() as usize
}

/// Colouring with at most `floor(3 log2 k)` colours and clustering `k` of a graph with
/// circumference at most `k >= 2`.
///
/// Recursive: forests are properly 2-coloured; a smallest separation of order at most 2
/// (components, then the least cut vertex, then the lexicographically first 2-cut) splits
/// the graph, with the separator made a clique and coloured first on the side holding the
/// pre-coloured clique; otherwise a longest cycle `Q` of length `L` takes one fresh colour
/// and the rest is coloured with circumference bound `floor(L / 2)` from the colours not
/// used on `Q` or the clique. Cycle searches are exhaustive and capped by
/// `caps.circumference`.
pub fn circumference_colour(
    g: &Graph,
    k: usize,
    caps: &Caps,
) -> Result<Colouring, StructuralError> {
    if k < 2 {
        return Err(StructuralError::Parameter(format!("k = {k}, need k >= 2")));
    }
    if g.n() <= caps.circumference {
        if let Some(cycle) = longest_cycle(g, caps)?.filter(|c| c.len() > k) {
            return Err(StructuralError::LongCycle(cycle));
        }
    }
    let palette: Vec<usize> = (0..circumference_palette(k)).collect();
    let host: Vec<usize> = g.vertices().collect();
    let colour = Solver { caps, limit: k }.solve(g, &host, k, &[], &palette)?;
    let colouring = Colouring(colour);
    let cert = audit(g, &colouring)?;
    if cert.k > palette.len() || cert.clustering > k {
        return Err(StructuralError::Audit(format!(
            "{} colours with clustering {}",
            cert.k, cert.clustering
        )));
    }
    Ok(colouring)
}

struct Solver<'a> {
    caps: &'a Caps,
    /// The circumference bound of the input; longer cycles violate the hypothesis.
    limit: usize,
}

impl Solver<'_> {
    /// Colours `g` from `palette` keeping the clique `pre` as given; every monochromatic
    /// component meeting `pre` stays inside it. `host` maps vertices to the input graph.
    fn solve(
        &self,
        g: &Graph,
        host: &[usize],
        k: usize,
        pre: &[(usize, usize)],
        palette: &[usize],
    ) -> Result<Vec<usize>, StructuralError> {
        let n = g.n();
        let mut colour = vec![usize::MAX; n];
        for &(v, c) in pre {
            colour[v] = c;
        }
        let pre_colours: BTreeSet<usize> = pre.iter().map(|&(_, c)| c).collect();
        let fresh = |taken: &BTreeSet<usize>| palette.iter().copied().find(|c| !taken.contains(c));
        if n <= 2 {
            let c = fresh(&pre_colours)
                .ok_or_else(|| StructuralError::Internal("palette exhausted".into()))?;
            colour
                .iter_mut()
                .filter(|x| **x == usize::MAX)
                .for_each(|x| *x = c);
            return Ok(colour);
        }
        if g.is_forest() {
            return forest_colour(g, pre, palette);
        }
        if let Some(separator) = small_separation(g) {
            return self.split(g, host, k, pre, palette, &separator);
        }

        let cycle = longest_cycle(g, self.caps)?
            .ok_or_else(|| StructuralError::Internal("no cycle in a non-forest".into()))?;
        if cycle.len() > self.limit {
            return Err(StructuralError::LongCycle(
                cycle.iter().map(|&v| host[v]).collect(),
            ));
        }
        if cycle.len() > k {
            return Err(StructuralError::Internal(format!(
                "a {}-cycle survived the bound {k}",
                cycle.len()
            )));
        }
        let on_cycle = fresh(&pre_colours)
            .ok_or_else(|| StructuralError::Internal("palette exhausted".into()))?;
        let mut taken = pre_colours.clone();
        taken.insert(on_cycle);
        let mut removed = vec![false; n];
        for &v in &cycle {
            removed[v] = true;
            if colour[v] == usize::MAX {
                colour[v] = on_cycle;
            }
        }
        for &(v, _) in pre {
            removed[v] = true;
        }
        let rest: Vec<usize> = g.vertices().filter(|&v| !removed[v]).collect();
        if !rest.is_empty() {
            let sub = g.induced_subgraph(&rest);
            let sub_host: Vec<usize> = rest.iter().map(|&v| host[v]).collect();
            let sub_palette: Vec<usize> = palette
                .iter()
                .copied()
                .filter(|c| !taken.contains(c))
                .collect();
            let inner_k = (cycle.len() / 2).max(2);
            if sub_palette.len() < circumference_palette(inner_k) {
                return Err(StructuralError::Internal(format!(
                    "{} colours left for bound {inner_k}",
                    sub_palette.len()
                )));
            }
            let inner = self.solve(&sub.graph, &sub_host, inner_k, &[], &sub_palette)?;
            for (i, &v) in rest.iter().enumerate() {
                colour[v] = inner[i];
            }
        }
        Ok(colour)
    }

    #[allow(clippy::too_many_arguments)]
    fn split(
        &self,
        g: &Graph,
        host: &[usize],
        k: usize,
        pre: &[(usize, usize)],
        palette: &[usize],
        separator: &[usize],
    ) -> Result<Vec<usize>, StructuralError> {
        let mut alive = vec![true; g.n()];
        for &v in separator {
            alive[v] = false;
        }
        let pieces = g.components_within(&alive);
        let anchor = pre.iter().map(|&(v, _)| v).find(|v| !separator.contains(v));
        let first = anchor.map_or(0, |a| {
            pieces
                .iter()
                .position(|p| p.contains(&a))
                .expect("anchor lies in a piece")
        });
        let mut side1: Vec<usize> = separator.to_vec();
        side1.extend(&pieces[first]);
        let mut side2: Vec<usize> = separator.to_vec();
        for (i, piece) in pieces.iter().enumerate() {
            if i != first {
                side2.extend(piece);
            }
        }
        let mut colour = vec![usize::MAX; g.n()];
        let part1 = self.side(g, host, k, pre, palette, &side1, separator)?;
        for (i, &v) in side1.iter().enumerate() {
            colour[v] = part1[i];
        }
        let sep_pre: Vec<(usize, usize)> = separator.iter().map(|&v| (v, colour[v])).collect();
        let part2 = self.side(g, host, k, &sep_pre, palette, &side2, separator)?;
        for (i, &v) in side2.iter().enumerate() {
            colour[v] = part2[i];
        }
        Ok(colour)
    }

    /// Solves the side induced by `side`, with the separator made a clique.
    #[allow(clippy::too_many_arguments)]
    fn side(
        &self,
        g: &Graph,
        host: &[usize],
        k: usize,
        pre: &[(usize, usize)],
        palette: &[usize],
        side: &[usize],
        separator: &[usize],
    ) -> Result<Vec<usize>, StructuralError> {
        let mut sub = g.induced_subgraph(side);
        let local = |v: usize| {
            side.iter()
                .position(|&x| x == v)
                .expect("vertex on this side")
        };
        if let [a, b] = separator {
            sub.graph.add_edge(local(*a), local(*b))?;
        }
        let sub_host: Vec<usize> = side.iter().map(|&v| host[v]).collect();
        let sub_pre: Vec<(usize, usize)> = pre.iter().map(|&(v, c)| (local(v), c)).collect();
        self.solve(&sub.graph, &sub_host, k, &sub_pre, palette)
    }
}

/// Empty separator if disconnected, else the least cut vertex, else the first 2-cut.
fn small_separation(g: &Graph) -> Option<Vec<usize>> {
    if !g.is_connected() {
        return Some(Vec::new());
    }
    if let Some(&c) = blocks_and_cutvertices(g).cut_vertices.iter().min() {
        return Some(vec![c]);
    }
    for a in g.vertices() {
        for b in a + 1..g.n() {
            let rest = g.without(&[a, b]).graph;
            if rest.n() > 0 && !rest.is_connected() {
                return Some(vec![a, b]);
            }
        }
    }
    None
}

/// Proper 2-colouring of a forest around the pre-coloured clique; an equal-coloured edge
/// clique is treated as one contracted vertex.
fn forest_colour(
    g: &Graph,
    pre: &[(usize, usize)],
    palette: &[usize],
) -> Result<Vec<usize>, StructuralError> {
    let n = g.n();
    let mut colour = vec![usize::MAX; n];
    let (first, second) = match pre {
        [] => (palette[0], palette[1]),
        [(_, c)] => (
            *c,
            *palette
                .iter()
                .find(|x| *x != c)
                .expect("palette has two colours"),
        ),
        [(_, c), (_, d)] if c != d => (*c, *d),
        [(_, c), _] => (
            *c,
            *palette
                .iter()
                .find(|x| *x != c)
                .expect("palette has two colours"),
        ),
        _ => {
            return Err(StructuralError::Internal(
                "pre-coloured clique above two vertices".into(),
            ))
        }
    };
    let mut queue = VecDeque::new();
    for &(v, c) in pre {
        colour[v] = c;
        queue.push_back(v);
    }
    let mut next_root = 0;
    loop {
        while let Some(v) = queue.pop_front() {
            let other = if colour[v] == first { second } else { first };
            for u in g.neighbours(v) {
                if colour[u] == usize::MAX {
                    colour[u] = other;
                    queue.push_back(u);
                }
            }
        }
        while next_root < n && colour[next_root] != usize::MAX {
            next_root += 1;
        }
        if next_root == n {
            break;
        }
        colour[next_root] = first;
        queue.push_back(next_root);
    }
    Ok(colour)
}

#[cfg(test)]
mod tests {
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::constructions::random_maximal_outerplanar;

    fn check(g: &Graph, k: usize) {
        let c = circumference_colour(g, k, &Caps::default()).unwrap();
        let cert = audit(g, &c).unwrap();
        assert!(cert.k <= circumference_palette(k) && cert.clustering <= k);
    }

    #[test]
    fn palette_sizes() {
        assert_eq!(circumference_palette(2), 3);
        assert_eq!(circumference_palette(6), 7);
        assert_eq!(circumference_palette(8), 9);
    }

    #[test]
    fn forests_and_cycles() {
        let c = circumference_colour(&Graph::path(12), 2, &Caps::default()).unwrap();
        assert!(audit(&Graph::path(12), &c).unwrap().clustering <= 1);
        for k in 3..=12 {
            check(&Graph::cycle(k), k);
        }
        assert!(matches!(
            circumference_colour(&Graph::cycle(7), 6, &Caps::default()),
            Err(StructuralError::LongCycle(c)) if c.len() == 7
        ));
    }

    #[test]
    fn outerplanar_hexagon_fans() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let cell = random_maximal_outerplanar(6, &mut rng);
        let mut g = cell.clone();
        for _ in 0..4 {
            let offset = g.n() - 1;
            let mut bigger = g.disjoint_union(&cell);
            bigger.add_edge(offset, offset + 1).unwrap();
            g = bigger;
        }
        check(&g, 6);
    }

    #[test]
    fn wheels_and_complete_graphs() {
        let mut wheel = Graph::cycle(7);
        let hub = wheel.add_vertex();
        for v in 0..7 {
            wheel.add_edge(hub, v).unwrap();
        }
        check(&wheel, 8);
        check(&Graph::complete(5), 5);
        check(&Graph::complete_bipartite(2, 9), 4);
    }
}
