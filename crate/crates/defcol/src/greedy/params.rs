use num_integer::binomial;
use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};

type Q = Ratio<i64>;

/// Light-edge threshold for graphs with no `K*_{s,t}` subgraph, given `mad = delta` and
/// topological density `nabla`. Such graphs are `s`-choosable with defect `ell - s + 1`.
pub fn oow_light_bound(s: i64, t: i64, delta: Q, nabla: Q) -> i64 {
    let value = match s {
        i64::MIN..=1 => return t - 1,
        2 => (delta - 2) * nabla * t / 2 + delta,
        _ => {
            let floor_nabla = nabla.floor().to_integer();
            let pairs = binomial(floor_nabla, s - 1);
            (delta - s) * (Q::from(pairs * (t - 1)) + nabla / 2) + delta
        }
    };
    value.floor().to_integer()
}

/// `k = floor(m / 2) + 1` and `d = ceil(m^2 / (4k - 2m) + m / 2)` for maximum average
/// degree `m > 0`.
pub fn mad_defect_params(m: Q) -> (i64, i64) {
    let k = (m / 2).floor().to_integer() + 1;
    let d = (m * m / (Q::from(4 * k) - m * 2) + m / 2)
        .ceil()
        .to_integer();
    (k, d)
}

/// Whether `1/k + 1/d <= 2/m`, exactly.
pub fn mad_params_hold(m: Q, k: i64, d: i64) -> bool {
    if k <= 0 || d <= 0 || m <= Q::zero() {
        return false;
    }
    Q::new(1, k) + Q::new(1, d) <= Q::from(2) / m
}

/// `ell = 2kg + 8k^2 + 2k + 1`: graphs of minimum degree at least `2k + 1` and
/// `g`-thickness at most `k` have an `(ell - 1)`-light edge.
pub fn thickness_light_bound(g: i64, k: i64) -> i64 {
    2 * k * g + 8 * k * k + 2 * k + 1
}

/// The three conditions under which minimum degree `delta` and `g`-thickness `k` force an
/// `(ell - 1)`-light edge, evaluated in integers.
pub fn light_edge_conditions(g: i64, k: i64, delta: i64, ell: i64) -> bool {
    let (g, k, delta, ell) = (g as i128, k as i128, delta as i128, ell as i128);
    let range = 6 * k >= delta && delta > 2 * k;
    let linear = (delta - 2 * k) * ell > 4 * k * delta;
    let quadratic = (delta - 2 * k) * ell * ell
        - ((4 * k - 1) * delta + 2 * k * (g - 1)) * ell
        - 4 * k * (g - 1) * delta
        > 0;
    range && linear && quadratic
}

/// Colours and defect the light-edge engine achieves for `g`-thickness `k`: it runs with
/// degree bound `2k` and light-edge threshold `ell - 1`, so the defect is `ell - 1 - 2k`.
/// The looser figure `ell - 1` is the usual headline defect.
pub fn thickness_defect_params(g: i64, k: i64) -> (i64, i64) {
    let ell = thickness_light_bound(g, k);
    (2 * k + 1, ell - 1 - 2 * k)
}

/// `floor` of a ratio as `usize`, saturating at zero.
pub(crate) fn floor_usize(q: Q) -> usize {
    q.floor().to_integer().max(0).to_usize().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oow_cases() {
        assert_eq!(oow_light_bound(1, 7, Q::from(3), Q::from(5)), 6);
        assert_eq!(oow_light_bound(2, 5, Q::from(2), Q::zero()), 2);
        assert_eq!(oow_light_bound(3, 2, Q::from(6), Q::from(4)), 30);
    }

    #[test]
    fn mad_table() {
        for (m, k, d) in [(4, 3, 6), (2, 2, 2), (6, 4, 12)] {
            assert_eq!(mad_defect_params(Q::from(m)), (k, d));
            assert!(mad_params_hold(Q::from(m), k, d));
        }
    }

    #[test]
    fn thickness_table() {
        assert_eq!(thickness_light_bound(0, 1), 11);
        assert_eq!(thickness_light_bound(0, 2), 37);
        for g in 1..=10 {
            for k in 1..=5 {
                assert!(light_edge_conditions(
                    g,
                    k,
                    2 * k + 1,
                    thickness_light_bound(g, k)
                ));
            }
        }
        // At g = 0 the linear condition needs ell > 8k^2 + 4k, one short of 8k^2 + 2k + 1.
        for k in 1..=5 {
            assert!(!light_edge_conditions(
                0,
                k,
                2 * k + 1,
                thickness_light_bound(0, k)
            ));
            assert!(light_edge_conditions(
                0,
                k,
                2 * k + 1,
                8 * k * k + 4 * k + 1
            ));
        }
    }
}
