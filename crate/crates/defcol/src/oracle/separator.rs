use super::{check_cap, Caps, OracleError};
use crate::graph::Graph;

/// Whether every component of `g - separator` has at most `n/2` vertices.
pub fn is_balanced_separator(g: &Graph, separator: &[usize]) -> bool {
    let mut alive = vec![true; g.n()];
    for &v in separator {
        alive[v] = false;
    }
    g.components_within(&alive)
        .iter()
        .all(|c| 2 * c.len() <= g.n())
}

/// A smallest balanced separator, the lexicographically first among those of least size.
pub fn min_balanced_separator(g: &Graph, caps: &Caps) -> Result<Vec<usize>, OracleError> {
    check_cap("balanced separator search", g.n(), caps.separator)?;
    let n = g.n();
    for size in 0..=n {
        let mut pick: Vec<usize> = (0..size).collect();
        loop {
            if is_balanced_separator(g, &pick) {
                return Ok(pick);
            }
            // Next combination in lexicographic order.
            let mut i = size;
            while i > 0 && pick[i - 1] == n - size + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            pick[i - 1] += 1;
            for j in i..size {
                pick[j] = pick[j - 1] + 1;
            }
        }
    }
    Ok((0..n).collect())
}
