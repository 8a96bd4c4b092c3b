// Separator-driven island colouring: 4-list colourings of planar graphs with bounded
// clustering, and the `K_5`-minor-free variant.

use defcol::constructions::random_plane_graph;
use defcol::separator::{
    minor_clustering_bound, minor_free_colour, surface_clustering_bound, surface_four_colour,
    BfsLevelOracle,
};
use defcol::{audit, ListAssignment};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (g, _rotation) = random_plane_graph(200, 0.8, &mut rng);
    let lists = ListAssignment::uniform(g.n(), 4);
    let oracle = BfsLevelOracle::planar();

    let run = surface_four_colour(&g, &lists, 0, &oracle)?;
    let cert = audit(&g, &run.colouring)?;
    println!(
        "planar, 4 lists: clustering {} within {}",
        cert.clustering,
        surface_clustering_bound(0)
    );
    assert!(cert.clustering <= surface_clustering_bound(0));

    let run = minor_free_colour(&g, &lists, 5, &oracle)?;
    let cert = audit(&g, &run.colouring)?;
    println!(
        "K5-minor-free, 4 lists: {} islands, clustering {}",
        run.islands.len(),
        cert.clustering
    );
    assert!(cert.clustering <= minor_clustering_bound(5));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("island example runs");
}
