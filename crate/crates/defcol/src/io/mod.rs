//! Graph and colouring files, key-value reports, experiment manifests and the named
//! dispatch tables behind the `defcol` binary.

pub mod dispatch;
mod formats;
mod manifest;
mod report;

pub use dispatch::{ask, colour, formula, generate, EngineRun, Instance, Params};
pub use formats::{
    read_colouring, read_graph, read_rotation, write_colouring, write_dot, write_graph,
    write_rotation, GraphFormat, ParsedGraph,
};
pub use manifest::{run_manifest, Expectations, ExperimentManifest, GraphSource, ManifestRun};
pub use report::{parse_report, write_report};

use thiserror::Error;

use crate::colouring::ColouringError;
use crate::constructions::ConstructionError;
use crate::graph::GraphError;
use crate::greedy::GreedyError;
use crate::oracle::OracleError;
use crate::planar::PlanarError;
use crate::separator::SeparatorError;
use crate::structural::StructuralError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IoError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: loop at vertex {vertex}")]
    Loop { line: usize, vertex: usize },
    #[error("colouring file misses vertices {0:?}")]
    MissingColours(Vec<usize>),
    #[error("unknown graph format {0:?}; known: edge-list, graph6, dimacs")]
    UnknownFormat(String),
}

/// Everything a command can fail with.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RunError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("manifest: {0}")]
    Manifest(String),
    #[error("{0}")]
    File(String),
    #[error(transparent)]
    Io(#[from] IoError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Colouring(#[from] ColouringError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error(transparent)]
    Greedy(#[from] GreedyError),
    #[error(transparent)]
    Planar(#[from] PlanarError),
    #[error(transparent)]
    Separator(#[from] SeparatorError),
    #[error(transparent)]
    Structural(#[from] StructuralError),
}

/// Process exit status for a failed command.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    /// A hypothesis of the engine was violated and the error carries the evidence.
    Witness,
    /// An exhaustive search refused an input above its cap.
    CapRefusal,
    Other,
}

impl Outcome {
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Witness => 2,
            Outcome::CapRefusal => 3,
            Outcome::Other => 1,
        }
    }
}

fn greedy_outcome(e: &GreedyError) -> Outcome {
    match e {
        GreedyError::NoLightEdge { .. }
        | GreedyError::TreeHypothesis { .. }
        | GreedyError::ThicknessHypothesis { .. } => Outcome::Witness,
        _ => Outcome::Other,
    }
}

fn oracle_outcome(e: &OracleError) -> Outcome {
    match e {
        OracleError::CapExceeded { .. } => Outcome::CapRefusal,
        _ => Outcome::Other,
    }
}

impl RunError {
    pub fn outcome(&self) -> Outcome {
        match self {
            RunError::Oracle(e) => oracle_outcome(e),
            RunError::Construction(ConstructionError::CapExceeded { .. }) => Outcome::CapRefusal,
            RunError::Greedy(e) => greedy_outcome(e),
            RunError::Planar(
                PlanarError::Outerplanarity { .. } | PlanarError::GenusHypothesis { .. },
            ) => Outcome::Witness,
            RunError::Separator(e) => match e {
                SeparatorError::Density { .. }
                | SeparatorError::GenusHypothesis { .. }
                | SeparatorError::GirthHypothesis { .. }
                | SeparatorError::MinorHypothesis { .. } => Outcome::Witness,
                SeparatorError::Oracle(inner) => oracle_outcome(inner),
                SeparatorError::Greedy(inner) => greedy_outcome(inner),
                _ => Outcome::Other,
            },
            RunError::Structural(e) => match e {
                StructuralError::Immersion(_)
                | StructuralError::Minor(_)
                | StructuralError::LongCycle(_)
                | StructuralError::Adhesion { .. }
                | StructuralError::DefectTooLarge { .. } => Outcome::Witness,
                StructuralError::Oracle(inner) => oracle_outcome(inner),
                _ => Outcome::Other,
            },
            _ => Outcome::Other,
        }
    }
}
