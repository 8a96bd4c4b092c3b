//! Defective and clustered graph colouring: engines that return audited colourings or
//! a witness that their hypothesis fails, exact oracles for small graphs, and the
//! constructions that certify lower bounds.
//!
//! Every engine output passes through [`audit`], which computes the colour count,
//! defect (largest same-coloured degree) and clustering (largest monochromatic
//! component) exactly.
//!
//! Modules:
//! - [`graph`], [`colouring`], [`flow`]: simple graphs, certificates, unit max-flow.
//! - [`oracle`]: exhaustive searches with explicit size caps.
//! - [`constructions`]: standard examples, gadgets, seeded random families.
//! - [`greedy`], [`planar`], [`separator`], [`structural`]: the colouring engines.
//! - [`io`]: file formats, reports, manifests, the dispatch behind the `defcol` binary.
//!
//! Examples (each also runs as a test):
//! - `examples/quickstart.rs`: Lovász local search and its certificate.
//! - `examples/planar_paths.rs`: path-forest 3-colourings of triangulations, outerplanar
//!   2-colourings.
//! - `examples/lower_bounds.rs`: standard examples checked by the exact oracle.
//! - `examples/islands.rs`: separator islands on planar and `K_5`-minor-free graphs.
//! - `examples/decompositions.rs`: cut trees, immersion partitions, minor witnesses,
//!   circumference.
//! - `examples/defect_to_cluster.rs`: independent transversals by resampling.
//! - `examples/files_and_manifests.rs`: graph6, DIMACS and edge lists, reports,
//!   manifests.

pub mod colouring;
pub mod constructions;
pub mod flow;
pub mod graph;
pub mod greedy;
pub mod io;
pub mod oracle;
pub mod planar;
pub mod separator;
pub mod structural;

pub use colouring::{audit, Certificate, Colouring, ListAssignment};
pub use graph::{Graph, GraphError};
