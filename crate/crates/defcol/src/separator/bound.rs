use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};

use super::SeparatorError;

pub(crate) type Q = Ratio<i128>;

/// Declared separator guarantee: every subgraph on `n` vertices has a balanced separator
/// of at most `c * n^(1 - beta)` vertices. `c` is stored squared so that the common
/// `beta = 1/2` case is checked in exact arithmetic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SeparatorBound {
    c_squared: Ratio<i64>,
    beta: Ratio<i64>,
}

/// Relative slack for the floating-point checks used when `beta != 1/2`.
const FLOAT_SLACK: f64 = 1e-12;

impl SeparatorBound {
    pub fn new(c_squared: Ratio<i64>, beta: Ratio<i64>) -> Result<Self, SeparatorError> {
        if c_squared <= Ratio::zero() {
            return Err(SeparatorError::Bound(format!(
                "c^2 = {c_squared} must be positive"
            )));
        }
        if beta <= Ratio::zero() || beta >= Ratio::from_integer(1) {
            return Err(SeparatorError::Bound(format!(
                "beta = {beta} must lie strictly between 0 and 1"
            )));
        }
        Ok(SeparatorBound { c_squared, beta })
    }

    /// Square-root separators, `beta = 1/2`.
    pub fn square_root(c_squared: Ratio<i64>) -> Result<Self, SeparatorError> {
        Self::new(c_squared, Ratio::new(1, 2))
    }

    pub fn c_squared(&self) -> Ratio<i64> {
        self.c_squared
    }

    pub fn beta(&self) -> Ratio<i64> {
        self.beta
    }

    pub fn is_square_root(&self) -> bool {
        self.beta == Ratio::new(1, 2)
    }

    pub fn c(&self) -> f64 {
        to_f64(self.c_squared).sqrt()
    }

    fn beta_f64(&self) -> f64 {
        to_f64(self.beta)
    }

    /// `c * n^(1 - beta)` as a float, for reports.
    pub fn separator_limit(&self, n: usize) -> f64 {
        self.c() * (n as f64).powf(1.0 - self.beta_f64())
    }

    /// Whether `size <= c * n^(1 - beta)`.
    pub fn admits(&self, size: usize, n: usize) -> bool {
        if self.is_square_root() {
            let c2 = widen(self.c_squared);
            let s = size as i128;
            Q::from_integer(s * s) <= c2 * Q::from_integer(n as i128)
        } else {
            size as f64 <= self.separator_limit(n) * (1.0 + FLOAT_SLACK)
        }
    }

    /// The fragmentation bound `c 2^beta n / ((2^beta - 1) p^beta)`.
    pub fn fragment_limit(&self, n: usize, p: usize) -> f64 {
        let two_beta = 2f64.powf(self.beta_f64());
        self.c() * two_beta * n as f64 / ((two_beta - 1.0) * (p as f64).powf(self.beta_f64()))
    }

    /// Whether a fragmentation separator of `size` vertices obeys `fragment_limit(n, p)`.
    pub fn admits_fragment(&self, size: usize, n: usize, p: usize) -> bool {
        if self.is_square_root() {
            // size^2 (3 - 2 sqrt 2) p <= 2 c^2 n^2.
            let s2p = Q::from_integer((size as i128).pow(2) * p as i128);
            let rhs = Q::from_integer(2 * (n as i128).pow(2)) * widen(self.c_squared);
            sqrt2_combination_nonneg(rhs - s2p * 3, s2p * 2)
        } else {
            size as f64 <= self.fragment_limit(n, p) * (1.0 + FLOAT_SLACK)
        }
    }

    /// Component size `ceil(2 (c / (eps (2^beta - 1)))^(1/beta))` reached by a separator of
    /// at most `eps * n` vertices.
    pub fn component_limit(&self, eps: Ratio<i64>) -> Result<usize, SeparatorError> {
        if eps <= Ratio::zero() {
            return Err(SeparatorError::Epsilon);
        }
        let value = if self.is_square_root() {
            // (sqrt 2 - 1)^-2 = 3 + 2 sqrt 2.
            let e = widen(eps);
            ceil_three_plus_two_sqrt2(widen(self.c_squared) * 2 / (e * e))
        } else {
            let inner = self.c() / (to_f64(eps) * (2f64.powf(self.beta_f64()) - 1.0));
            (2.0 * inner.powf(1.0 / self.beta_f64()) * (1.0 - FLOAT_SLACK)).ceil() as i128
        };
        Ok(usize::try_from(value.max(1)).unwrap_or(usize::MAX))
    }

    /// Island size `ceil(2 (c (k + 1) / (alpha (2^beta - 1)))^(1/beta))`.
    pub fn island_limit(&self, k: usize, alpha: Ratio<i64>) -> Result<usize, SeparatorError> {
        self.component_limit(alpha / Ratio::from_integer(k as i64 + 1))
    }
}

pub(crate) fn widen(x: Ratio<i64>) -> Q {
    Q::new(*x.numer() as i128, *x.denom() as i128)
}

pub(crate) fn to_f64<T: ToPrimitive + Clone + num_integer::Integer>(x: Ratio<T>) -> f64 {
    x.numer().to_f64().unwrap_or(f64::NAN) / x.denom().to_f64().unwrap_or(f64::NAN)
}

/// Whether `a + b sqrt 2 >= 0`.
pub(crate) fn sqrt2_combination_nonneg(a: Q, b: Q) -> bool {
    let zero = Q::zero();
    match (a >= zero, b >= zero) {
        (true, true) => true,
        (false, false) => false,
        (true, false) => a * a >= b * b * 2,
        (false, true) => b * b * 2 >= a * a,
    }
}

/// `ceil(q (3 + 2 sqrt 2))` for `q >= 0`.
pub(crate) fn ceil_three_plus_two_sqrt2(q: Q) -> i128 {
    let at_least = |m: i128| sqrt2_combination_nonneg(Q::from_integer(m) - q * 3, -q * 2);
    let mut m = (to_f64(q) * (3.0 + 2.0 * std::f64::consts::SQRT_2)).ceil() as i128;
    while at_least(m - 1) {
        m -= 1;
    }
    while !at_least(m) {
        m += 1;
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(a: i64, b: i64) -> Ratio<i64> {
        Ratio::new(a, b)
    }

    #[test]
    fn exact_ceilings() {
        // 6250 (3 + 2 sqrt 2) = 36427.67...
        assert_eq!(ceil_three_plus_two_sqrt2(Q::from_integer(6250)), 36428);
        assert_eq!(ceil_three_plus_two_sqrt2(Q::from_integer(0)), 0);
        assert_eq!(ceil_three_plus_two_sqrt2(Q::from_integer(1)), 6);
    }

    #[test]
    fn component_limit_matches_the_closed_form() {
        let planar = SeparatorBound::square_root(r(4, 1)).unwrap();
        // 2 * 4 / 0.01 * (3 + 2 sqrt 2) = 4662.7...
        assert_eq!(planar.component_limit(r(1, 10)).unwrap(), 4663);
        let float = (2.0 * (2.0 / (0.1 * (2f64.sqrt() - 1.0))).powi(2)).ceil() as usize;
        assert_eq!(planar.component_limit(r(1, 10)).unwrap(), float);
        assert!(planar.component_limit(r(0, 1)).is_err());
    }

    #[test]
    fn admits_is_exact_at_the_boundary() {
        let b = SeparatorBound::square_root(r(8, 1)).unwrap();
        assert!(b.admits(20, 50));
        assert!(!b.admits(21, 55));
        let other = SeparatorBound::new(r(1, 1), r(3, 10)).unwrap();
        assert!(other.admits(1, 1));
        assert!(!other.admits(2, 2));
    }

    #[test]
    fn fragment_check_agrees_with_floats() {
        let b = SeparatorBound::square_root(r(2, 1)).unwrap();
        for n in [10, 100, 1000] {
            for p in [1, 4, 9, 30] {
                let limit = b.fragment_limit(n, p);
                let s = limit.floor() as usize;
                assert!(b.admits_fragment(s, n, p));
                assert!(!b.admits_fragment(s + 1, n, p));
            }
        }
    }

    #[test]
    fn rejects_bad_declarations() {
        assert!(SeparatorBound::new(r(0, 1), r(1, 2)).is_err());
        assert!(SeparatorBound::new(r(1, 1), r(1, 1)).is_err());
    }
}
