//! Extremal graphs used as lower-bound witnesses, plus seeded random generators.

mod gadgets;
mod hex;
mod random;
mod standard;

pub use gadgets::{
    cliques_of_size, every_colouring_has_rainbow_clique, fig4_search, gk_circumference_gadget,
    kkn_gadget, outerplanar_gadget, standard_thickness_witness, thickness_gadgets, xkc_family,
    ThicknessWitness, XkcRecipe,
};
pub use hex::{hex_grid, HexGrid};
pub use random::{
    gnp, high_girth_regular, random_bounded_degree, random_connected, random_maximal_outerplanar,
    random_plane_graph, random_subcubic, random_triangulation,
};
pub use standard::{
    closure_of_tree, complete_tree_parents, depths, kst_star, standard_cluster, standard_defect,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("{what} refused: {size} vertices exceeds the cap of {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("recipe builds a level {got} member, not level {expected}")]
    RecipeLevel { expected: usize, got: usize },
    #[error("{what}: gave up after a budget of {budget}")]
    RetryBudget { what: &'static str, budget: usize },
}

pub(crate) fn check_cap(
    what: &'static str,
    size: usize,
    cap: usize,
) -> Result<(), ConstructionError> {
    if size > cap {
        Err(ConstructionError::CapExceeded { what, size, cap })
    } else {
        Ok(())
    }
}
