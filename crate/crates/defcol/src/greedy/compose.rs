use num_rational::Ratio;
use num_traits::Zero;

use super::params::floor_usize;
use super::{lovasz_defective, GreedyError};
use crate::colouring::{audit, product_colouring, Colouring};
use crate::graph::Graph;

type Q = Ratio<i64>;

/// Promise of a bounded-degree engine: graphs of maximum degree `Δ` get at most
/// `floor(Δ / x + y)` colours with clustering at most `alpha * Δ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Contract {
    pub x: Q,
    pub y: Q,
    pub alpha: Q,
}

impl Contract {
    pub fn colours(&self, max_degree: usize) -> usize {
        floor_usize(Q::from(max_degree as i64) / self.x + self.y)
    }

    pub fn clustering(&self, max_degree: usize) -> usize {
        floor_usize(self.alpha * Q::from(max_degree.max(1) as i64))
    }

    /// Checks a colouring of `g` against the promise at maximum degree `at`.
    pub fn check(&self, g: &Graph, colouring: &Colouring, at: usize) -> Result<(), GreedyError> {
        let cert = audit(g, colouring)?;
        if cert.k > self.colours(at) || cert.clustering > self.clustering(at) {
            return Err(GreedyError::Contract(format!(
                "{} colours with clustering {} at degree {at}, promised {} and {}",
                cert.k,
                cert.clustering,
                self.colours(at),
                self.clustering(at)
            )));
        }
        Ok(())
    }
}

pub trait MaxDegreeEngine {
    fn contract(&self) -> Contract;
    fn colour(&self, g: &Graph) -> Result<Colouring, GreedyError>;
}

/// `d = ceil((2 / eps)(xy - 1)) - 1` (at least 0) and `c = max(alpha d, 2 alpha d / eps)`,
/// with `d` read as 1 in `c` so that singleton classes fit.
pub fn epsilon_parameters(contract: &Contract, eps: Q) -> (usize, Q) {
    let raw = (Q::from(2) / eps * (contract.x * contract.y - 1))
        .ceil()
        .to_integer()
        - 1;
    let d = raw.max(0);
    let ad = contract.alpha * d.max(1);
    let c = if ad * 2 / eps > ad { ad * 2 / eps } else { ad };
    (d as usize, c)
}

/// A bounded-degree engine whose clustering no longer grows with the degree, at the
/// price of a factor `1 + eps` on the leading term of the colour count.
#[derive(Debug, Clone)]
pub struct EpsilonComposed<E> {
    pub base: E,
    pub eps: Q,
}

pub fn epsilon_compose<E: MaxDegreeEngine>(base: E, eps: Q) -> EpsilonComposed<E> {
    EpsilonComposed { base, eps }
}

impl<E: MaxDegreeEngine> EpsilonComposed<E> {
    /// Parameters `(d, c)`: Lovász defect for the split and the clustering bound.
    pub fn parameters(&self) -> (usize, Q) {
        epsilon_parameters(&self.base.contract(), self.eps)
    }

    /// Colour bound `floor((1 + eps) Δ / x + y)`.
    pub fn colour_bound(&self, max_degree: usize) -> usize {
        let k = self.base.contract();
        floor_usize((Q::from(1) + self.eps) * Q::from(max_degree as i64) / k.x + k.y)
    }

    /// Colours `g`; the flag is true when the Lovász split was used.
    pub fn colour(&self, g: &Graph) -> Result<(Colouring, bool), GreedyError> {
        if self.eps <= Q::zero() {
            return Err(GreedyError::Contract("epsilon must be positive".into()));
        }
        let contract = self.base.contract();
        let delta = g.max_degree();
        let (d, c) = self.parameters();
        if contract.alpha * Q::from(delta as i64) <= c {
            let colouring = self.base.colour(g)?;
            contract.check(g, &colouring, delta)?;
            return Ok((colouring, false));
        }
        let split = lovasz_defective(g, d);
        let mut inner = Vec::new();
        for members in split.colouring.classes().values() {
            let sub = g.induced_subgraph(members);
            let colouring = self.base.colour(&sub.graph)?;
            contract.check(&sub.graph, &colouring, d)?;
            inner.push(colouring);
        }
        let colouring = product_colouring(&split.colouring, &inner)?;
        let cert = audit(g, &colouring)?;
        if cert.k > self.colour_bound(delta) || Q::from(cert.clustering as i64) > c {
            return Err(GreedyError::Audit(format!(
                "{} colours with clustering {} against bounds {} and {c}",
                cert.k,
                cert.clustering,
                self.colour_bound(delta)
            )));
        }
        Ok((colouring, true))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Proper greedy colouring: at most `Δ + 1` colours with clustering 1.
    struct Greedy;

    impl MaxDegreeEngine for Greedy {
        fn contract(&self) -> Contract {
            Contract {
                x: Q::from(1),
                y: Q::from(2),
                alpha: Q::from(1),
            }
        }

        fn colour(&self, g: &Graph) -> Result<Colouring, GreedyError> {
            let mut colour = vec![usize::MAX; g.n()];
            for v in g.vertices() {
                colour[v] = (0..)
                    .find(|&c| g.neighbours(v).all(|u| colour[u] != c))
                    .unwrap_or(0);
            }
            Ok(Colouring(colour))
        }
    }

    #[test]
    fn parameters() {
        let k = Contract {
            x: Q::from(3),
            y: Q::from(2),
            alpha: Q::from(24),
        };
        assert_eq!(epsilon_parameters(&k, Q::from(1)), (9, Q::from(432)));
        assert_eq!(epsilon_parameters(&k, Q::from(4)), (2, Q::from(48)));
    }

    #[test]
    fn split_path_respects_bounds() {
        let composed = epsilon_compose(Greedy, Q::from(2));
        assert_eq!(composed.parameters().0, 0);
        let g = Graph::complete(6);
        let (c, split) = composed.colour(&g).unwrap();
        assert!(split);
        let cert = audit(&g, &c).unwrap();
        assert!(cert.k <= composed.colour_bound(5));
        assert_eq!(cert.clustering, 1);
        let (_, split) = composed.colour(&Graph::new(3)).unwrap();
        assert!(!split);
    }
}
