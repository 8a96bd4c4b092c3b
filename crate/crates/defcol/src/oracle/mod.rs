//! Exhaustive ground truth for small instances. Every oracle refuses above its cap.

mod colour_search;
mod cycles;
mod minor;
mod nabla;
mod separator;
mod treedepth;

pub use colour_search::{
    colourable, list_colourable_with_defect, min_colours_clustering, min_colours_defect, Limit,
};
pub use cycles::{circumference, longest_cycle};
pub use minor::{embed, has_minor, has_topological_minor, is_subgraph, treewidth_upper_bound};
pub use nabla::nabla_exact;
pub use separator::{is_balanced_separator, min_balanced_separator};
pub use treedepth::{connected_tree_depth, tree_depth, treewidth_exact};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{what} refused: {size} exceeds the cap of {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("list assignment covers {got} vertices but the graph has {n}")]
    ListLength { got: usize, n: usize },
}

/// Size limits for the exhaustive searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Vertex limit for colouring searches (at most 64).
    pub colouring: usize,
    /// Vertex limit for the pattern graph of a minor test.
    pub minor_pattern: usize,
    /// Vertex limit for the host graph of a minor test.
    pub minor_host: usize,
    pub tree_depth: usize,
    pub circumference: usize,
    pub separator: usize,
    pub nabla: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            colouring: 24,
            minor_pattern: 8,
            minor_host: 40,
            tree_depth: 16,
            circumference: 60,
            separator: 25,
            nabla: 10,
        }
    }
}

impl Caps {
    /// Default caps with the colouring limit raised.
    pub fn colouring(limit: usize) -> Self {
        Caps {
            colouring: limit.min(64),
            ..Caps::default()
        }
    }
}

pub(crate) fn check_cap(what: &'static str, size: usize, cap: usize) -> Result<(), OracleError> {
    if size > cap {
        Err(OracleError::CapExceeded { what, size, cap })
    } else {
        Ok(())
    }
}
