use super::{check_cap, Caps, OracleError};
use crate::graph::{blocks_and_cutvertices, Graph};

/// A longest cycle, listed from its least vertex; `None` for forests.
pub fn longest_cycle(g: &Graph, caps: &Caps) -> Result<Option<Vec<usize>>, OracleError> {
    check_cap("longest cycle search", g.n(), caps.circumference)?;
    let mut best: Vec<usize> = Vec::new();
    for block in blocks_and_cutvertices(g).blocks {
        if block.len() < 3 || block.len() <= best.len() {
            continue;
        }
        let mut allowed = vec![false; g.n()];
        for &v in &block {
            allowed[v] = true;
        }
        for &s in &block {
            let mut remaining = block.iter().filter(|&&v| v > s).count();
            if remaining < best.len() {
                break;
            }
            let mut on_path = vec![false; g.n()];
            on_path[s] = true;
            let mut path = vec![s];
            extend(
                g,
                s,
                &allowed,
                &mut on_path,
                &mut path,
                &mut remaining,
                &mut best,
            );
        }
    }
    Ok((!best.is_empty()).then_some(best))
}

fn extend(
    g: &Graph,
    start: usize,
    allowed: &[bool],
    on_path: &mut [bool],
    path: &mut Vec<usize>,
    remaining: &mut usize,
    best: &mut Vec<usize>,
) {
    let last = path[path.len() - 1];
    if path.len() >= 3 && path.len() > best.len() && g.has_edge(last, start) {
        *best = path.clone();
    }
    if path.len() + *remaining <= best.len() {
        return;
    }
    for u in g.neighbours(last) {
        if u > start && allowed[u] && !on_path[u] {
            on_path[u] = true;
            path.push(u);
            *remaining -= 1;
            extend(g, start, allowed, on_path, path, remaining, best);
            *remaining += 1;
            path.pop();
            on_path[u] = false;
        }
    }
}

/// Length of a longest cycle, and 2 for forests.
pub fn circumference(g: &Graph, caps: &Caps) -> Result<usize, OracleError> {
    Ok(longest_cycle(g, caps)?.map_or(2, |c| c.len()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        let caps = Caps::default();
        assert_eq!(circumference(&Graph::path(9), &caps), Ok(2));
        assert_eq!(circumference(&Graph::cycle(7), &caps), Ok(7));
        assert_eq!(circumference(&Graph::complete(6), &caps), Ok(6));
        assert_eq!(
            circumference(&Graph::complete_bipartite(2, 5), &caps),
            Ok(4)
        );
        assert_eq!(circumference(&Graph::grid(3, 3), &caps), Ok(8));
    }

    #[test]
    fn cycle_is_real() {
        let g = Graph::grid(3, 4);
        let c = longest_cycle(&g, &Caps::default()).unwrap().unwrap();
        assert_eq!(c.len(), 12);
        for i in 0..c.len() {
            assert!(g.has_edge(c[i], c[(i + 1) % c.len()]));
        }
    }
}
