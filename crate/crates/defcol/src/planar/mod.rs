//! Engines that need a plane embedding: outerplanar layering, the path-component
//! three-colouring of triangulations, the genus recursion and the Hex crossing extractor.

mod gale;
mod genus;
mod outerplanar;
mod poh;

pub use crate::constructions::fig4_search;
pub use gale::{gale_extract, GaleWitness};
pub use genus::{genus_defect, genus_three_colour};
pub use outerplanar::outerplanar_two_colour;
pub use poh::{poh_from_rotation, poh_three_colour};

use thiserror::Error;

use crate::colouring::ColouringError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlanarError {
    #[error("outerplanarity hypothesis violated: layer {layer} of the BFS from {root} holds the non-path component {vertices:?}")]
    Outerplanarity {
        root: usize,
        layer: usize,
        vertices: Vec<usize>,
    },
    #[error("genus hypothesis violated: {high} vertices of degree above {defect} exceed the bound for Euler genus {genus}")]
    GenusHypothesis {
        high: usize,
        defect: usize,
        genus: usize,
    },
    #[error("invalid embedding: {0}")]
    Embedding(String),
    #[error("invalid boundary arcs: {0}")]
    Arcs(String),
    #[error("engine output failed its audit: {0}")]
    Audit(String),
    #[error(transparent)]
    Colouring(#[from] ColouringError),
}
