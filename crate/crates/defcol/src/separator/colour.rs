use num_rational::Ratio;

use super::island::density_holds;
use super::{separator_island, SeparatorError, SeparatorOracle};
use crate::colouring::{audit, respects_lists, Colouring, ListAssignment};
use crate::graph::Graph;
use crate::greedy::check_lists;

/// Colouring produced by an island loop.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IslandRun {
    pub colouring: Colouring,
    /// Islands in extraction order.
    pub islands: Vec<Vec<usize>>,
    /// Vertices left for the colour-counting branch, if any.
    pub remainder: Vec<usize>,
    /// Clustering guaranteed by the construction.
    pub clustering_bound: usize,
}

/// Shared loop: extract `k`-islands while more than `small` vertices remain, colour the
/// remainder by least-used list colour, then colour islands in reverse order avoiding the
/// colours of their already coloured neighbours.
/// Colouring, islands in extraction order, and the colour-counted remainder.
type LoopParts = (Colouring, Vec<Vec<usize>>, Vec<usize>);

struct Loop<'a, O: ?Sized> {
    oracle: &'a O,
    k: usize,
    alpha: Ratio<i64>,
    small: usize,
}

impl<O: SeparatorOracle + ?Sized> Loop<'_, O> {
    fn run(
        &self,
        g: &Graph,
        lists: &ListAssignment,
        hypothesis: impl Fn(&Graph) -> Result<(), SeparatorError>,
    ) -> Result<LoopParts, SeparatorError> {
        check_lists(g.n(), lists, self.k + 1)?;
        let mut alive = vec![true; g.n()];
        let mut remaining: Vec<usize> = g.vertices().collect();
        let mut islands = Vec::new();
        while remaining.len() > self.small {
            let sub = g.induced_subgraph(&remaining);
            hypothesis(&sub.graph)?;
            let found = separator_island(&sub.graph, self.oracle, self.k, self.alpha)?;
            let island: Vec<usize> = found.island.iter().map(|&v| sub.host[v]).collect();
            for &v in &island {
                alive[v] = false;
            }
            remaining.retain(|&v| alive[v]);
            islands.push(island);
        }

        let mut colour = vec![usize::MAX; g.n()];
        let mut used = std::collections::BTreeMap::<usize, usize>::new();
        for &v in &remaining {
            let c = *lists
                .list(v)
                .iter()
                .min_by_key(|&&c| (used.get(&c).copied().unwrap_or(0), c))
                .expect("lists are non-empty");
            colour[v] = c;
            *used.entry(c).or_default() += 1;
        }
        let mut inside = vec![false; g.n()];
        for island in islands.iter().rev() {
            island.iter().for_each(|&v| inside[v] = true);
            for &v in island {
                colour[v] = lists
                    .list(v)
                    .iter()
                    .copied()
                    .find(|&c| g.neighbours(v).all(|u| inside[u] || colour[u] != c))
                    .ok_or_else(|| {
                        SeparatorError::Audit(format!(
                            "island vertex {v} sees every list colour outside"
                        ))
                    })?;
            }
            island.iter().for_each(|&v| inside[v] = false);
        }
        Ok((Colouring(colour), islands, remaining))
    }
}

fn finish(
    g: &Graph,
    lists: &ListAssignment,
    parts: LoopParts,
    bound: usize,
) -> Result<IslandRun, SeparatorError> {
    let (colouring, islands, remainder) = parts;
    let cert = audit(g, &colouring)?;
    if cert.clustering > bound || !respects_lists(&colouring, lists) {
        return Err(SeparatorError::Audit(format!(
            "clustering {} against bound {bound}",
            cert.clustering
        )));
    }
    Ok(IslandRun {
        colouring,
        islands,
        remainder,
        clustering_bound: bound,
    })
}

/// `(k + 1)`-list colouring by separator islands, for graphs whose subgraphs all have fewer
/// than `(k + 1 - alpha) n` edges.
pub fn separator_island_colour<O: SeparatorOracle + ?Sized>(
    g: &Graph,
    lists: &ListAssignment,
    k: usize,
    alpha: Ratio<i64>,
    oracle: &O,
) -> Result<IslandRun, SeparatorError> {
    let bound = oracle.bound().island_limit(k, alpha)?;
    let parts = Loop {
        oracle,
        k,
        alpha,
        small: 0,
    }
    .run(g, lists, |_| Ok(()))?;
    finish(g, lists, parts, bound)
}

/// Clustering `1500 (g + 2)` for 4-list colourings of graphs of Euler genus `g`.
pub fn surface_clustering_bound(genus: usize) -> usize {
    1500 * (genus + 2)
}

/// 4-list colouring of a graph of Euler genus at most `genus` with clustering at most
/// `1500 (genus + 2)`.
///
/// The oracle must declare `beta = 1/2` and `c^2 <= 4 (2 genus + 3)`. At most `6000 genus`
/// vertices go to the colour-counting branch; the rest leave as 3-islands with
/// `alpha = 1999/2000`. Every subgraph met must have fewer than `3 (n + genus)` edges.
pub fn surface_four_colour<O: SeparatorOracle + ?Sized>(
    g: &Graph,
    lists: &ListAssignment,
    genus: usize,
    oracle: &O,
) -> Result<IslandRun, SeparatorError> {
    let declared = oracle.bound();
    let allowed = Ratio::from_integer(4 * (2 * genus as i64 + 3));
    if !declared.is_square_root() || declared.c_squared() > allowed {
        return Err(SeparatorError::OracleMismatch(format!(
            "need beta = 1/2 and c^2 <= {allowed}, oracle declares c^2 = {}, beta = {}",
            declared.c_squared(),
            declared.beta()
        )));
    }
    let euler = |h: &Graph| {
        if h.n() == 0 || h.m() < 3 * (h.n() + genus) {
            Ok(())
        } else {
            Err(SeparatorError::GenusHypothesis {
                edges: h.m(),
                vertices: h.n(),
                genus,
            })
        }
    };
    euler(g)?;
    let alpha = Ratio::new(1999, 2000);
    let parts = Loop {
        oracle,
        k: 3,
        alpha,
        small: 6000 * genus,
    }
    .run(g, lists, euler)?;
    finish(g, lists, parts, surface_clustering_bound(genus))
}

/// Parameters of the island loop for embedded graphs of girth at least 4 or 5.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GirthPlan {
    pub girth: usize,
    /// Island parameter; lists have `k + 1` colours.
    pub k: usize,
    /// Edge density: subgraphs have fewer than `density (n + genus)` edges.
    pub density: Ratio<i64>,
    pub alpha: Ratio<i64>,
    /// Vertex count at or below which the colour-counting branch takes over, per unit genus.
    pub small_per_genus: usize,
}

impl GirthPlan {
    /// Girth 4: 3 lists, density 2. Girth at least 5: 2 lists, density 5/3. Below 4: none.
    pub fn for_girth(girth: usize) -> Option<Self> {
        match girth {
            4 => Some(GirthPlan {
                girth,
                k: 2,
                density: Ratio::from_integer(2),
                alpha: Ratio::new(1, 2),
                small_per_genus: 4,
            }),
            5.. => Some(GirthPlan {
                girth: 5,
                k: 1,
                density: Ratio::new(5, 3),
                alpha: Ratio::new(1, 6),
                small_per_genus: 10,
            }),
            _ => None,
        }
    }

    /// `max(island limit, ceil(small / (k + 1)))`.
    pub fn clustering_bound<O: SeparatorOracle + ?Sized>(
        &self,
        genus: usize,
        oracle: &O,
    ) -> Result<usize, SeparatorError> {
        let island = oracle.bound().island_limit(self.k, self.alpha)?;
        Ok(island.max((self.small_per_genus * genus).div_ceil(self.k + 1)))
    }
}

/// List colouring of an embedded graph of Euler genus at most `genus` and girth at least
/// `plan.girth`, with clustering `plan.clustering_bound`.
pub fn surface_girth_colour<O: SeparatorOracle + ?Sized>(
    g: &Graph,
    lists: &ListAssignment,
    genus: usize,
    plan: GirthPlan,
    oracle: &O,
) -> Result<IslandRun, SeparatorError> {
    if let Some(girth) = g.girth().filter(|&girth| girth < plan.girth) {
        return Err(SeparatorError::GirthHypothesis {
            girth,
            need: plan.girth,
        });
    }
    let sparse = |h: &Graph| {
        if h.n() == 0
            || Ratio::from_integer(h.m() as i64)
                < plan.density * Ratio::from_integer((h.n() + genus) as i64)
        {
            Ok(())
        } else {
            Err(SeparatorError::GenusHypothesis {
                edges: h.m(),
                vertices: h.n(),
                genus,
            })
        }
    };
    sparse(g)?;
    let bound = plan.clustering_bound(genus, oracle)?;
    let parts = Loop {
        oracle,
        k: plan.k,
        alpha: plan.alpha,
        small: plan.small_per_genus * genus,
    }
    .run(g, lists, sparse)?;
    finish(g, lists, parts, bound)
}

/// The clustering `ceil(2 (5 t^(3/2) / (sqrt 2 - 1))^2) = ceil(50 t^3 (3 + 2 sqrt 2))`.
pub fn minor_clustering_bound(t: usize) -> usize {
    let q = super::bound::Q::from_integer(50 * (t as i128).pow(3));
    super::bound::ceil_three_plus_two_sqrt2(q) as usize
}

/// Island size guaranteed with `k = t - 2`, `alpha = 1` and `c = t^(3/2)`.
pub fn minor_island_bound(t: usize) -> usize {
    let q = super::bound::Q::from_integer(2 * (t as i128).pow(3) * (t as i128 - 1).pow(2));
    super::bound::ceil_three_plus_two_sqrt2(q) as usize
}

/// `(t - 1)`-list colouring of a `K_t`-minor-free graph, `3 <= t <= 9`.
///
/// Islands use `k = t - 2` and `alpha = 1`; every subgraph met must have fewer than
/// `(t - 2) n` edges. The oracle must declare `beta = 1/2` and `c^2 <= t^3`. The result is
/// audited against `max(minor_clustering_bound(t), minor_island_bound(t))`.
pub fn minor_free_colour<O: SeparatorOracle + ?Sized>(
    g: &Graph,
    lists: &ListAssignment,
    t: usize,
    oracle: &O,
) -> Result<IslandRun, SeparatorError> {
    if !(3..=9).contains(&t) {
        return Err(SeparatorError::Unsupported(format!(
            "t = {t}, need 3 <= t <= 9"
        )));
    }
    let declared = oracle.bound();
    let allowed = Ratio::from_integer((t as i64).pow(3));
    if !declared.is_square_root() || declared.c_squared() > allowed {
        return Err(SeparatorError::OracleMismatch(format!(
            "need beta = 1/2 and c^2 <= {allowed}, oracle declares c^2 = {}, beta = {}",
            declared.c_squared(),
            declared.beta()
        )));
    }
    let k = t - 2;
    let alpha = Ratio::from_integer(1);
    let minor = |h: &Graph| {
        if density_holds(h.m(), h.n(), k, alpha) {
            Ok(())
        } else {
            Err(SeparatorError::MinorHypothesis {
                t,
                edges: h.m(),
                vertices: h.n(),
            })
        }
    };
    let parts = Loop {
        oracle,
        k,
        alpha,
        small: 0,
    }
    .run(g, lists, minor)?;
    finish(
        g,
        lists,
        parts,
        minor_clustering_bound(t).max(minor_island_bound(t)),
    )
}

#[cfg(test)]
mod tests {
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::constructions::{random_triangulation, standard_cluster};
    use crate::oracle::{min_colours_clustering, Caps};
    use crate::separator::{BfsLevelOracle, CentroidOracle, ExactOracle, SeparatorBound};

    #[test]
    fn minor_bounds() {
        assert_eq!(minor_clustering_bound(5), 36428);
        assert_eq!(
            minor_clustering_bound(3),
            ((50.0 * 27.0) * (3.0 + 2.0 * 2f64.sqrt())).ceil() as usize
        );
        assert!((3..=6).all(|t| minor_island_bound(t) <= minor_clustering_bound(t)));
        assert!((7..=9).all(|t| minor_island_bound(t) > minor_clustering_bound(t)));
    }

    #[test]
    fn forest_with_two_lists() {
        let g = Graph::path(300);
        let run = minor_free_colour(
            &g,
            &ListAssignment::uniform(300, 2),
            3,
            &CentroidOracle::default(),
        )
        .unwrap();
        assert!(audit(&g, &run.colouring).unwrap().clustering <= minor_clustering_bound(3));
        assert!(run.remainder.is_empty());
    }

    #[test]
    fn standard_example_needs_four() {
        let g = standard_cluster(3, 2);
        let oracle =
            BfsLevelOracle::new(SeparatorBound::square_root(Ratio::from_integer(125)).unwrap());
        let run = minor_free_colour(&g, &ListAssignment::uniform(g.n(), 4), 5, &oracle).unwrap();
        assert!(audit(&g, &run.colouring).unwrap().clustering <= 36428);
        assert_eq!(min_colours_clustering(&g, 2, &Caps::default()), Ok(4));
    }

    #[test]
    fn minor_density_violation() {
        let err = minor_free_colour(
            &Graph::complete(7),
            &ListAssignment::uniform(7, 4),
            5,
            &CentroidOracle::default(),
        );
        assert!(
            matches!(err, Err(SeparatorError::MinorHypothesis { .. })),
            "{err:?}"
        );
        let exact =
            ExactOracle::new(SeparatorBound::square_root(Ratio::from_integer(125)).unwrap());
        let err = minor_free_colour(
            &Graph::complete(7),
            &ListAssignment::uniform(7, 4),
            5,
            &exact,
        )
        .unwrap_err();
        assert!(matches!(
            err,
            SeparatorError::MinorHypothesis {
                t: 5,
                edges: 21,
                vertices: 7
            }
        ));
    }

    #[test]
    fn planar_surface_colouring() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let t = random_triangulation(300, 600, &mut rng);
        let oracle =
            BfsLevelOracle::new(SeparatorBound::square_root(Ratio::from_integer(12)).unwrap());
        let run =
            surface_four_colour(t.graph(), &ListAssignment::uniform(300, 4), 0, &oracle).unwrap();
        let cert = audit(t.graph(), &run.colouring).unwrap();
        assert!(cert.clustering <= 3000);
        assert!(run.islands.iter().all(|i| i.len() <= 3000));
        let empty = surface_four_colour(&Graph::new(0), &ListAssignment::uniform(0, 4), 0, &oracle)
            .unwrap();
        assert!(empty.colouring.is_empty());
    }

    #[test]
    fn surface_rejects_dense_graphs_and_loose_oracles() {
        let oracle =
            ExactOracle::new(SeparatorBound::square_root(Ratio::from_integer(12)).unwrap());
        let err = surface_four_colour(
            &Graph::complete(8),
            &ListAssignment::uniform(8, 4),
            0,
            &oracle,
        )
        .unwrap_err();
        assert!(matches!(
            err,
            SeparatorError::GenusHypothesis {
                edges: 28,
                vertices: 8,
                genus: 0
            }
        ));
        let loose = ExactOracle::new(SeparatorBound::square_root(Ratio::from_integer(13)).unwrap());
        assert!(matches!(
            surface_four_colour(&Graph::path(3), &ListAssignment::uniform(3, 4), 0, &loose),
            Err(SeparatorError::OracleMismatch(_))
        ));
    }

    #[test]
    fn small_branch_on_a_torus_budget() {
        let g = Graph::grid(10, 10);
        let oracle =
            ExactOracle::new(SeparatorBound::square_root(Ratio::from_integer(20)).unwrap());
        let run = surface_four_colour(&g, &ListAssignment::uniform(100, 4), 1, &oracle).unwrap();
        assert_eq!(run.remainder.len(), 100);
        assert!(audit(&g, &run.colouring).unwrap().clustering <= 25);
    }

    #[test]
    fn girth_plans() {
        let g = Graph::grid(12, 12);
        let plan = GirthPlan::for_girth(4).unwrap();
        let oracle = BfsLevelOracle::planar();
        let run =
            surface_girth_colour(&g, &ListAssignment::uniform(144, 3), 0, plan, &oracle).unwrap();
        assert!(
            audit(&g, &run.colouring).unwrap().clustering
                <= plan.clustering_bound(0, &oracle).unwrap()
        );
        assert!(GirthPlan::for_girth(3).is_none());
        let five = GirthPlan::for_girth(5).unwrap();
        assert!(matches!(
            surface_girth_colour(&g, &ListAssignment::uniform(144, 2), 0, five, &oracle),
            Err(SeparatorError::GirthHypothesis { girth: 4, need: 5 })
        ));
    }
}
