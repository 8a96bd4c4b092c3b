//! Decomposition-driven colourings: cut trees and tree-partitions for immersion-free
//! graphs, connected-part decompositions for minor-free graphs, the circumference
//! recursion and the defect-to-clustering conversion.

mod circumference;
mod gomory_hu;
mod immersion;
mod lll;
mod minimal;
mod vdhw;

pub use circumference::{circumference_colour, circumference_palette};
pub use gomory_hu::{gomory_hu, GomoryHuTree};
pub use immersion::{
    immersion_tpartition, immersion_two_colour, tpartition_two_colour, ImmersionCertificate,
};
pub use lll::{defect2_to_cluster, ClusterConversion, Defect2Engine, SegmentLength};
pub use minimal::{minimal_connected_subgraph, MinimalConnected};
pub use vdhw::{vdhw_colour, MinorWitness, VdhwColouring};

use thiserror::Error;

use crate::colouring::ColouringError;
use crate::graph::GraphError;
use crate::oracle::OracleError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructuralError {
    #[error("the graph is disconnected")]
    Disconnected,
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("K_t immersion found: branch vertices {:?}", .0.branch)]
    Immersion(Box<ImmersionCertificate>),
    #[error("tree edge {tree_edge:?} is crossed by {crossing} edges, limit {limit}")]
    Adhesion {
        tree_edge: (usize, usize),
        crossing: usize,
        limit: usize,
    },
    #[error("terminals {0:?} do not lie in one component")]
    TerminalsSplit(Vec<usize>),
    #[error("K_t minor found with {} branch sets", .0.branch_sets.len())]
    Minor(MinorWitness),
    #[error("circumference hypothesis violated by the cycle {0:?}")]
    LongCycle(Vec<usize>),
    #[error("input colouring has defect {defect}, at most 2 allowed")]
    DefectTooLarge { defect: usize },
    #[error("resampling did not converge after {reseeds} reseeds and {resamples} resamples")]
    RetryBudget { reseeds: usize, resamples: usize },
    #[error("internal invariant broken: {0}")]
    Internal(String),
    #[error("engine output failed its audit: {0}")]
    Audit(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Colouring(#[from] ColouringError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}
