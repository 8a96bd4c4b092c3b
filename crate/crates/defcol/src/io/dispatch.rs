//! Named constructions, engines, oracle questions and parameter formulas, shared by the
//! command line and the manifest runner.

use std::cell::RefCell;
use std::collections::{BTreeMap, BTreeSet};
use std::str::FromStr;

use num_rational::Ratio;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::RunError;
use crate::colouring::{Colouring, ListAssignment};
use crate::constructions as build;
use crate::graph::Graph;
use crate::greedy;
use crate::oracle::{self, Caps};
use crate::planar;
use crate::separator::{self, BfsLevelOracle, GirthPlan};
use crate::structural::{self, Defect2Engine, SegmentLength};

type Q = Ratio<i64>;

/// Default seed for ad-hoc runs; reports always print the seed used.
pub const DEFAULT_SEED: u64 = 0;

/// `key = value` parameters. Every key must be read by the consumer, so that misspelt
/// names are reported instead of silently ignored.
#[derive(Debug, Default)]
pub struct Params {
    values: BTreeMap<String, String>,
    read: RefCell<BTreeSet<String>>,
}

impl Params {
    pub fn new(values: BTreeMap<String, String>) -> Self {
        Params {
            values,
            read: RefCell::default(),
        }
    }

    /// From `--key value` or `key=value` tokens.
    pub fn from_args<S: AsRef<str>>(args: &[S]) -> Result<Self, RunError> {
        let mut values = BTreeMap::new();
        let mut tokens = args.iter().map(AsRef::as_ref);
        while let Some(token) = tokens.next() {
            let (key, value) = if let Some((k, v)) = token.split_once('=') {
                (k.trim_start_matches("--").to_string(), v.to_string())
            } else if let Some(key) = token.strip_prefix("--") {
                let value = tokens
                    .next()
                    .ok_or_else(|| RunError::Usage(format!("--{key} needs a value")))?;
                (key.to_string(), value.to_string())
            } else {
                return Err(RunError::Usage(format!(
                    "expected --key value, found {token:?}"
                )));
            };
            if values.insert(key.clone(), value).is_some() {
                return Err(RunError::Usage(format!("parameter {key} given twice")));
            }
        }
        Ok(Params::new(values))
    }

    pub fn values(&self) -> &BTreeMap<String, String> {
        &self.values
    }

    fn raw(&self, key: &str) -> Option<&str> {
        self.read.borrow_mut().insert(key.to_string());
        self.values.get(key).map(String::as_str)
    }

    pub fn get<T: FromStr>(&self, key: &str) -> Result<T, RunError> {
        let raw = self
            .raw(key)
            .ok_or_else(|| RunError::Usage(format!("missing parameter --{key}")))?;
        raw.parse()
            .map_err(|_| RunError::Usage(format!("cannot parse --{key} {raw:?}")))
    }

    pub fn get_or<T: FromStr>(&self, key: &str, default: T) -> Result<T, RunError> {
        match self.raw(key) {
            None => Ok(default),
            Some(_) => self.get(key),
        }
    }

    /// A rational given as `a`, `a/b` or a finite decimal.
    pub fn rational(&self, key: &str) -> Result<Q, RunError> {
        let raw = self
            .raw(key)
            .ok_or_else(|| RunError::Usage(format!("missing parameter --{key}")))?;
        parse_rational(raw)
            .ok_or_else(|| RunError::Usage(format!("cannot parse --{key} {raw:?} as a rational")))
    }

    /// Errors on keys nobody read.
    pub fn finish(&self) -> Result<(), RunError> {
        let read = self.read.borrow();
        match self.values.keys().find(|k| !read.contains(*k)) {
            Some(key) => Err(RunError::Usage(format!("unknown parameter --{key}"))),
            None => Ok(()),
        }
    }
}

pub fn parse_rational(raw: &str) -> Option<Q> {
    if let Some((whole, frac)) = raw.split_once('.') {
        if frac.is_empty() || frac.len() > 12 || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let negative = whole.starts_with('-');
        let whole: i64 = if whole.is_empty() || whole == "-" {
            0
        } else {
            whole.parse().ok()?
        };
        let scale = 10i64.pow(frac.len() as u32);
        let part = Q::new(frac.parse().ok()?, scale);
        let magnitude = Q::from(whole.abs()) + part;
        return Some(if negative { -magnitude } else { magnitude });
    }
    Q::from_str(raw).ok()
}

/// A graph, with a rotation system when the construction provides an embedding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub graph: Graph,
    pub rotation: Option<Vec<Vec<usize>>>,
}

impl From<Graph> for Instance {
    fn from(graph: Graph) -> Self {
        Instance {
            graph,
            rotation: None,
        }
    }
}

pub const CONSTRUCTIONS: &[&str] = &[
    "path",
    "cycle",
    "complete",
    "complete-bipartite",
    "grid",
    "standard-defect",
    "standard-cluster",
    "kst-star",
    "outerplanar-gadget",
    "fig4",
    "kkn",
    "hex",
    "random-outerplanar",
    "random-triangulation",
    "random-plane",
    "random-bounded-degree",
    "random-subcubic",
    "random-connected",
    "gnp",
    "high-girth",
];

/// Builds a named construction; random ones draw from ChaCha8 seeded with `seed`.
pub fn generate(name: &str, params: &Params, seed: u64) -> Result<Instance, RunError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = || params.get::<usize>("n");
    let instance: Instance = match name {
        "path" => Graph::path(n()?).into(),
        "cycle" => Graph::cycle(n()?).into(),
        "complete" => Graph::complete(n()?).into(),
        "complete-bipartite" => {
            Graph::complete_bipartite(params.get("s")?, params.get("t")?).into()
        }
        "grid" => Graph::grid(params.get("rows")?, params.get("cols")?).into(),
        "standard-defect" => build::standard_defect(params.get("h")?, params.get("d")?).into(),
        "standard-cluster" => build::standard_cluster(params.get("h")?, params.get("c")?).into(),
        "kst-star" => build::kst_star(params.get("s")?, params.get("t")?).into(),
        "outerplanar-gadget" => build::outerplanar_gadget().into(),
        "fig4" => build::fig4_search(
            params.get_or("max-n", 8)?,
            params.get_or("budget", 200_000)?,
        )
        .ok_or_else(|| RunError::Usage("no gadget found within the search limits".into()))?
        .into(),
        "kkn" => build::kkn_gadget(params.get("s")?, params.get("d")?)?
            .0
            .into(),
        "hex" => {
            let grid = build::hex_grid(params.get("k")?);
            Instance {
                graph: grid.graph().clone(),
                rotation: Some(grid.triangulation.rotation().to_vec()),
            }
        }
        "random-outerplanar" => build::random_maximal_outerplanar(n()?, &mut rng).into(),
        "random-triangulation" => {
            let size = n()?;
            let t = build::random_triangulation(size, params.get_or("flips", size)?, &mut rng);
            Instance {
                graph: t.graph().clone(),
                rotation: Some(t.rotation().to_vec()),
            }
        }
        "random-plane" => {
            let keep = params.get_or("keep", 0.7)?;
            let (graph, rotation) = build::random_plane_graph(n()?, keep, &mut rng);
            Instance {
                graph,
                rotation: Some(rotation),
            }
        }
        "random-bounded-degree" => {
            let size = n()?;
            build::random_bounded_degree(
                size,
                params.get("delta")?,
                params.get_or("attempts", 4 * size)?,
                &mut rng,
            )
            .into()
        }
        "random-subcubic" => build::random_subcubic(n()?, &mut rng).into(),
        "random-connected" => {
            build::random_connected(n()?, params.get_or("extra", 0)?, &mut rng).into()
        }
        "gnp" => build::gnp(n()?, params.get("p")?, &mut rng).into(),
        "high-girth" => build::high_girth_regular(
            params.get("r")?,
            params.get("girth")?,
            params.get_or("swaps", 10_000)?,
            params.get_or("max-n", 200)?,
            &mut rng,
        )?
        .into(),
        other => {
            return Err(RunError::Usage(format!(
                "unknown construction {other:?}; known: {}",
                CONSTRUCTIONS.join(", ")
            )))
        }
    };
    params.finish()?;
    Ok(instance)
}

/// An engine's colouring and the bounds it promises, as report lines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EngineRun {
    pub colouring: Colouring,
    pub notes: Vec<(String, String)>,
}

pub const ENGINES: &[&str] = &[
    "lovasz",
    "outerplanar",
    "poh",
    "genus-three",
    "light-edge",
    "islands",
    "tree-peel",
    "thickness-peel",
    "defect2",
    "epsilon",
    "surface-four",
    "surface-girth",
    "minor-free",
    "immersion",
    "vdhw",
    "circumference",
];

fn note(key: &str, value: impl ToString) -> (String, String) {
    (key.to_string(), value.to_string())
}

/// Runs a named engine on `instance`. List engines use the lists `{0, ..., size - 1}`.
pub fn colour(
    engine: &str,
    instance: &Instance,
    params: &Params,
    seed: u64,
) -> Result<EngineRun, RunError> {
    let g = &instance.graph;
    let n = g.n();
    let delta = g.max_degree();
    let mut notes = Vec::new();
    let colouring = match engine {
        "lovasz" => {
            let d: usize = params.get("d")?;
            let run = greedy::lovasz_defective(g, d);
            notes.extend([
                note("bound.colours", run.palette),
                note("bound.defect", d),
                note("iterations", run.iterations),
            ]);
            run.colouring
        }
        "outerplanar" => {
            notes.extend([note("bound.colours", 2), note("bound.defect", 2)]);
            planar::outerplanar_two_colour(g)?
        }
        "poh" => {
            let rotation = instance.rotation.as_ref().ok_or_else(|| {
                RunError::Usage(
                    "poh needs a rotation system: use --rotation or an embedded construction"
                        .into(),
                )
            })?;
            notes.push(note("bound.colours", 3));
            planar::poh_from_rotation(g, rotation)?
        }
        "genus-three" => {
            let genus: usize = params.get("genus")?;
            notes.extend([
                note("bound.colours", 3),
                note("bound.defect", planar::genus_defect(genus)),
            ]);
            planar::genus_three_colour(g, genus)?
        }
        "light-edge" => {
            let (k, ell): (usize, usize) = (params.get("k")?, params.get("ell")?);
            notes.extend([
                note("bound.colours", k + 1),
                note("bound.defect", ell.max(k) - k),
            ]);
            greedy::light_edge_colour(g, &ListAssignment::uniform(n, k + 1), k, ell)?
        }
        "islands" => {
            let k: usize = params.get("k")?;
            notes.push(note("bound.colours", k + 1));
            greedy::island_colour(
                g,
                &ListAssignment::uniform(n, k + 1),
                k,
                greedy::degeneracy_islands,
            )?
            .colouring
        }
        "tree-peel" => {
            let radius: usize = params.get("radius")?;
            notes.push(note("bound.colours", radius.max(1)));
            greedy::tree_subgraph_peel(g, params.get("order")?, radius)?
        }
        "thickness-peel" => {
            let k: usize = params.get("k")?;
            notes.push(note("bound.colours", 6 * k + 1));
            greedy::thickness_peel(
                g,
                &ListAssignment::uniform(n, 6 * k + 1),
                k,
                params.get("genus")?,
            )?
        }
        "defect2" => {
            let length = match params.get_or("segment", "8".to_string())?.as_str() {
                "8" => SegmentLength::Standard,
                "2" => SegmentLength::Short,
                other => {
                    return Err(RunError::Usage(format!(
                        "--segment is 8 or 2 (times the maximum degree), not {other}"
                    )))
                }
            };
            let split = greedy::lovasz_defective(g, 2);
            let out = structural::defect2_to_cluster(g, &split.colouring, length, seed)?;
            notes.extend([
                note("bound.colours", split.palette + 1),
                note("bound.clustering", length.clustering_bound(delta)),
                note("segments", out.segments.len()),
                note("resamples", out.resamples),
                note("reseeds", out.reseeds),
                note("seed", seed),
            ]);
            out.colouring
        }
        "epsilon" => {
            let composed = greedy::epsilon_compose(Defect2Engine { seed }, params.rational("eps")?);
            let (d, c) = composed.parameters();
            let (colouring, split) = composed.colour(g)?;
            notes.extend([
                note("bound.colours", composed.colour_bound(delta)),
                note("bound.clustering", c),
                note("split_defect", d),
                note("split_used", split),
                note("seed", seed),
            ]);
            colouring
        }
        "surface-four" => {
            let genus: usize = params.get_or("genus", 0)?;
            notes.extend([
                note("bound.colours", 4),
                note(
                    "bound.clustering",
                    separator::surface_clustering_bound(genus),
                ),
            ]);
            let oracle = BfsLevelOracle::planar();
            separator::surface_four_colour(g, &ListAssignment::uniform(n, 4), genus, &oracle)?
                .colouring
        }
        "surface-girth" => {
            let (genus, girth): (usize, usize) = (params.get_or("genus", 0)?, params.get("girth")?);
            let plan = GirthPlan::for_girth(girth)
                .ok_or_else(|| RunError::Usage("--girth must be at least 4".into()))?;
            let oracle = BfsLevelOracle::planar();
            let run = separator::surface_girth_colour(
                g,
                &ListAssignment::uniform(n, plan.k + 1),
                genus,
                plan,
                &oracle,
            )?;
            notes.extend([
                note("bound.colours", plan.k + 1),
                note("bound.clustering", run.clustering_bound),
            ]);
            run.colouring
        }
        "minor-free" => {
            let t: usize = params.get("t")?;
            let oracle = BfsLevelOracle::planar();
            let run = separator::minor_free_colour(
                g,
                &ListAssignment::uniform(n, t.saturating_sub(1)),
                t,
                &oracle,
            )?;
            notes.extend([
                note("bound.colours", t - 1),
                note("bound.clustering", run.clustering_bound),
            ]);
            run.colouring
        }
        "immersion" => {
            let t: usize = params.get("t")?;
            notes.extend([
                note("bound.colours", 2),
                note("bound.defect", (t.max(1) - 1).pow(3).saturating_sub(1)),
            ]);
            structural::immersion_two_colour(g, t)?
        }
        "vdhw" => {
            let t: usize = params.get("t")?;
            let out = structural::vdhw_colour(g, t)?;
            notes.push(note("parts", out.parts.len()));
            match params.get_or("variant", "defective".to_string())?.as_str() {
                "defective" => {
                    notes.extend([note("bound.colours", t - 1), note("bound.defect", t - 2)]);
                    out.defective
                }
                "clustered" => {
                    notes.extend([
                        note("bound.colours", 2 * t - 2),
                        note("bound.clustering", (t - 2).div_ceil(2)),
                    ]);
                    out.clustered
                }
                other => {
                    return Err(RunError::Usage(format!(
                        "--variant is defective or clustered, not {other}"
                    )))
                }
            }
        }
        "circumference" => {
            let k: usize = params.get("k")?;
            notes.extend([
                note("bound.colours", structural::circumference_palette(k)),
                note("bound.clustering", k),
            ]);
            structural::circumference_colour(g, k, &Caps::default())?
        }
        other => {
            return Err(RunError::Usage(format!(
                "unknown engine {other:?}; known: {}",
                ENGINES.join(", ")
            )))
        }
    };
    params.finish()?;
    Ok(EngineRun { colouring, notes })
}

pub const QUESTIONS: &[&str] = &[
    "min-colours-defect",
    "min-colours-clustering",
    "circumference",
    "tree-depth",
    "connected-tree-depth",
    "treewidth",
    "min-balanced-separator",
    "nabla",
    "has-complete-minor",
];

/// Exact answers by exhaustive search; refusals above the default caps are errors.
pub fn ask(question: &str, g: &Graph, params: &Params) -> Result<Vec<(String, String)>, RunError> {
    let caps = Caps::default();
    let answer = match question {
        "min-colours-defect" => oracle::min_colours_defect(g, params.get("d")?, &caps)?.to_string(),
        "min-colours-clustering" => {
            oracle::min_colours_clustering(g, params.get("c")?, &caps)?.to_string()
        }
        "circumference" => oracle::circumference(g, &caps)?.to_string(),
        "tree-depth" => oracle::tree_depth(g, &caps)?.to_string(),
        "connected-tree-depth" => oracle::connected_tree_depth(g, &caps)?.to_string(),
        "treewidth" => oracle::treewidth_exact(g, &caps)?.to_string(),
        "min-balanced-separator" => {
            let separator = oracle::min_balanced_separator(g, &caps)?;
            format!("{} {separator:?}", separator.len())
        }
        "nabla" => oracle::nabla_exact(g, &caps)?.to_string(),
        "has-complete-minor" => {
            oracle::has_minor(g, &Graph::complete(params.get("t")?), &caps)?.to_string()
        }
        other => {
            return Err(RunError::Usage(format!(
                "unknown question {other:?}; known: {}",
                QUESTIONS.join(", ")
            )))
        }
    };
    params.finish()?;
    Ok(vec![note("question", question), note("answer", answer)])
}

pub const FORMULAS: &[&str] = &[
    "lovasz",
    "oow-light",
    "mad-defect",
    "thickness-light",
    "thickness-defect",
    "c-t",
    "minor-island",
    "surface-clustering",
    "circumference-palette",
];

/// Closed-form calculators.
pub fn formula(name: &str, params: &Params) -> Result<Vec<(String, String)>, RunError> {
    let lines = match name {
        "lovasz" => {
            let (delta, d): (usize, usize) = (params.get("delta")?, params.get("d")?);
            vec![note("k", delta / (d + 1) + 1)]
        }
        "oow-light" => {
            let ell = greedy::oow_light_bound(
                params.get("s")?,
                params.get("t")?,
                params.rational("delta")?,
                params.rational("nabla")?,
            );
            vec![note("ell", ell)]
        }
        "mad-defect" => {
            let m = params.rational("m")?;
            let (k, d) = greedy::mad_defect_params(m);
            vec![
                note("k", k),
                note("d", d),
                note("holds", greedy::mad_params_hold(m, k, d)),
            ]
        }
        "thickness-light" => vec![note(
            "ell",
            greedy::thickness_light_bound(params.get("g")?, params.get("k")?),
        )],
        "thickness-defect" => {
            let (colours, defect) =
                greedy::thickness_defect_params(params.get("g")?, params.get("k")?);
            vec![note("colours", colours), note("defect", defect)]
        }
        "c-t" => vec![note(
            "c",
            separator::minor_clustering_bound(params.get("t")?),
        )],
        "minor-island" => vec![note(
            "size",
            separator::minor_island_bound(params.get("t")?),
        )],
        "surface-clustering" => vec![note(
            "c",
            separator::surface_clustering_bound(params.get("g")?),
        )],
        "circumference-palette" => vec![note(
            "colours",
            structural::circumference_palette(params.get("k")?),
        )],
        other => {
            return Err(RunError::Usage(format!(
                "unknown formula {other:?}; known: {}",
                FORMULAS.join(", ")
            )))
        }
    };
    params.finish()?;
    Ok(lines)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colouring::audit;

    fn params(args: &[&str]) -> Params {
        Params::from_args(args).unwrap()
    }

    #[test]
    fn lovasz_formula() {
        assert_eq!(
            formula("lovasz", &params(&["--delta", "10", "--d", "2"])).unwrap(),
            vec![note("k", 4)]
        );
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("5/2"), Some(Q::new(5, 2)));
        assert_eq!(parse_rational("2.25"), Some(Q::new(9, 4)));
        assert_eq!(parse_rational("-0.5"), Some(Q::new(-1, 2)));
        assert_eq!(parse_rational("x"), None);
    }

    #[test]
    fn unknown_and_unused_parameters() {
        assert!(matches!(
            generate("path", &params(&["--n", "3", "--m", "2"]), 0),
            Err(RunError::Usage(_))
        ));
        assert!(matches!(
            generate("moebius", &params(&[]), 0),
            Err(RunError::Usage(_))
        ));
        assert!(matches!(
            colour("magic", &Graph::path(2).into(), &params(&[]), 0),
            Err(RunError::Usage(_))
        ));
        assert!(matches!(
            Params::from_args(&["--n"]),
            Err(RunError::Usage(_))
        ));
    }

    #[test]
    fn every_construction_and_engine_name_dispatches() {
        let small: BTreeMap<&str, Vec<&str>> = [
            ("path", vec!["--n", "5"]),
            ("cycle", vec!["--n", "5"]),
            ("complete", vec!["--n", "4"]),
            ("complete-bipartite", vec!["--s", "2", "--t", "3"]),
            ("grid", vec!["--rows", "3", "--cols", "3"]),
            ("standard-defect", vec!["--h", "2", "--d", "1"]),
            ("standard-cluster", vec!["--h", "2", "--c", "2"]),
            ("kst-star", vec!["--s", "1", "--t", "3"]),
            ("outerplanar-gadget", vec![]),
            ("fig4", vec![]),
            ("kkn", vec!["--s", "1", "--d", "0"]),
            ("hex", vec!["--k", "2"]),
            ("random-outerplanar", vec!["--n", "8"]),
            ("random-triangulation", vec!["--n", "10"]),
            ("random-plane", vec!["--n", "10"]),
            ("random-bounded-degree", vec!["--n", "10", "--delta", "3"]),
            ("random-subcubic", vec!["--n", "10"]),
            ("random-connected", vec!["--n", "10", "--extra", "3"]),
            ("gnp", vec!["--n", "10", "--p", "0.3"]),
            (
                "high-girth",
                vec!["--r", "3", "--girth", "4", "--max-n", "30"],
            ),
        ]
        .into_iter()
        .collect();
        assert_eq!(small.len(), CONSTRUCTIONS.len());
        for name in CONSTRUCTIONS {
            generate(name, &params(&small[name]), 1).unwrap_or_else(|e| panic!("{name}: {e}"));
        }
        let plane = generate("random-triangulation", &params(&["--n", "30"]), 4).unwrap();
        let engine_args: BTreeMap<&str, Vec<&str>> = [
            ("lovasz", vec!["--d", "1"]),
            ("outerplanar", vec![]),
            ("poh", vec![]),
            ("genus-three", vec!["--genus", "0"]),
            ("light-edge", vec!["--k", "5", "--ell", "5"]),
            ("islands", vec!["--k", "5"]),
            ("tree-peel", vec!["--order", "40", "--radius", "1"]),
            ("thickness-peel", vec!["--k", "1", "--genus", "0"]),
            ("defect2", vec![]),
            ("epsilon", vec!["--eps", "1/2"]),
            ("surface-four", vec![]),
            ("surface-girth", vec!["--girth", "4"]),
            ("minor-free", vec!["--t", "5"]),
            ("immersion", vec!["--t", "30"]),
            ("vdhw", vec!["--t", "5"]),
            ("circumference", vec!["--k", "30"]),
        ]
        .into_iter()
        .collect();
        assert_eq!(engine_args.len(), ENGINES.len());
        for name in ENGINES {
            let instance = match *name {
                "outerplanar" => {
                    generate("random-outerplanar", &params(&["--n", "20"]), 2).unwrap()
                }
                "surface-girth" => Graph::grid(5, 5).into(),
                _ => plane.clone(),
            };
            let run = colour(name, &instance, &params(&engine_args[name]), 3)
                .unwrap_or_else(|e| panic!("{name}: {e}"));
            audit(&instance.graph, &run.colouring).unwrap();
        }
    }

    #[test]
    fn oracle_questions() {
        let gadget = build::outerplanar_gadget();
        let lines = ask("min-colours-defect", &gadget, &params(&["--d", "0"])).unwrap();
        assert_eq!(lines[1], note("answer", 3));
        assert!(matches!(
            ask("treewidth", &Graph::path(200), &params(&[])),
            Err(RunError::Oracle(_))
        ));
    }
}
