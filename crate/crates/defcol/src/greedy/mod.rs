//! Greedy colouring frameworks: light-edge induction, island peeling, Lovász local
//! search, degree peeling, and the closed-form parameters that feed them.

mod compose;
mod island;
mod light;
mod lovasz;
mod params;
mod peel;

pub use compose::{
    epsilon_compose, epsilon_parameters, Contract, EpsilonComposed, MaxDegreeEngine,
};
pub use island::{degeneracy_islands, island_colour, IslandColouring};
pub use light::light_edge_colour;
pub use lovasz::{lovasz_defective, LovaszRun};
pub use params::{
    light_edge_conditions, mad_defect_params, mad_params_hold, oow_light_bound,
    thickness_defect_params, thickness_light_bound,
};
pub use peel::{thickness_peel, tree_subgraph_peel};

use thiserror::Error;

use crate::colouring::{ColouringError, ListAssignment};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GreedyError {
    #[error("vertex {vertex} has a list of {size} colours, {need} needed")]
    ListTooSmall {
        vertex: usize,
        size: usize,
        need: usize,
    },
    #[error("list assignment covers {got} vertices but the graph has {n}")]
    ListLength { got: usize, n: usize },
    #[error("light-edge hypothesis violated: subgraph on {vertices:?} has minimum degree above {k} and no {ell}-light edge")]
    NoLightEdge {
        k: usize,
        ell: usize,
        vertices: Vec<usize>,
        edges: Vec<(usize, usize)>,
    },
    #[error("empty island returned while {alive} vertices remain")]
    EmptyIsland { alive: usize },
    #[error("vertex {vertex} is not available for an island")]
    IslandOutside { vertex: usize },
    #[error("not a {k}-island: vertex {vertex} has {outside} neighbours outside it")]
    NotAnIsland {
        k: usize,
        vertex: usize,
        outside: usize,
    },
    #[error("tree subgraph hypothesis violated: vertex {vertex} keeps {degree} neighbours in the last layer, limit {limit}")]
    TreeHypothesis {
        vertex: usize,
        degree: usize,
        limit: usize,
    },
    #[error("thickness hypothesis violated: {remaining} vertices remain and none has degree at most {limit}")]
    ThicknessHypothesis { remaining: usize, limit: usize },
    #[error("base engine broke its contract: {0}")]
    Contract(String),
    #[error("engine output failed its audit: {0}")]
    Audit(String),
    #[error(transparent)]
    Colouring(#[from] ColouringError),
}

pub(crate) fn check_lists(
    n: usize,
    lists: &ListAssignment,
    need: usize,
) -> Result<(), GreedyError> {
    if lists.len() != n {
        return Err(GreedyError::ListLength {
            got: lists.len(),
            n,
        });
    }
    match (0..n).find(|&v| lists.list(v).len() < need) {
        Some(vertex) => Err(GreedyError::ListTooSmall {
            vertex,
            size: lists.list(vertex).len(),
            need,
        }),
        None => Ok(()),
    }
}
