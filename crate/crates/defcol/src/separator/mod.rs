//! Separator-driven island colouring: fragmentation by balanced separators, island
//! extraction from sparsity, and the island loops for surfaces and minor-closed classes.

mod bound;
mod colour;
mod fragment;
mod island;
mod oracles;

pub use bound::SeparatorBound;
pub use colour::{
    minor_clustering_bound, minor_free_colour, minor_island_bound, separator_island_colour,
    surface_clustering_bound, surface_four_colour, surface_girth_colour, GirthPlan, IslandRun,
};
pub use fragment::{fragment, fragment_epsilon, Fragmentation};
pub use island::{separator_island, SeparatorIsland};
pub use oracles::{BfsLevelOracle, CentroidOracle, ExactOracle, SeparatorOracle};

use thiserror::Error;

use crate::colouring::ColouringError;
use crate::greedy::GreedyError;
use crate::oracle::OracleError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeparatorError {
    #[error("invalid separator bound: {0}")]
    Bound(String),
    #[error("epsilon must be positive")]
    Epsilon,
    #[error("target component size must be at least 1")]
    TargetSize,
    #[error("oracle returned vertex {vertex} of a subgraph with {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("oracle separator {separator:?} leaves a component of {largest} vertices in the subgraph on {vertices:?}")]
    Unbalanced {
        vertices: Vec<usize>,
        separator: Vec<usize>,
        largest: usize,
    },
    #[error("oracle separator {separator:?} of the subgraph on {vertices:?} exceeds the declared limit {limit}")]
    Oversized {
        vertices: Vec<usize>,
        separator: Vec<usize>,
        limit: String,
    },
    #[error("fragmentation removed {size} vertices, limit {limit}")]
    FragmentBound { size: usize, limit: String },
    #[error("separator heuristic failed on {n} vertices: {reason}")]
    Heuristic { n: usize, reason: String },
    #[error("density hypothesis violated: {edges} edges on {vertices} vertices, need fewer than {limit}")]
    Density {
        edges: usize,
        vertices: usize,
        limit: String,
    },
    #[error("no fragment component is sparse enough")]
    NoSparseComponent,
    #[error("peeling emptied the island")]
    EmptyIsland,
    #[error("island of {size} vertices exceeds the limit {limit}")]
    IslandSize { size: usize, limit: usize },
    #[error(
        "genus hypothesis violated: {edges} edges on {vertices} vertices for Euler genus {genus}"
    )]
    GenusHypothesis {
        edges: usize,
        vertices: usize,
        genus: usize,
    },
    #[error("girth hypothesis violated: girth {girth}, need at least {need}")]
    GirthHypothesis { girth: usize, need: usize },
    #[error("K_{t}-minor-free hypothesis violated: {edges} edges on {vertices} vertices")]
    MinorHypothesis {
        t: usize,
        edges: usize,
        vertices: usize,
    },
    #[error("oracle declaration does not fit: {0}")]
    OracleMismatch(String),
    #[error("unsupported parameters: {0}")]
    Unsupported(String),
    #[error("engine output failed its audit: {0}")]
    Audit(String),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Greedy(#[from] GreedyError),
    #[error(transparent)]
    Colouring(#[from] ColouringError),
}
