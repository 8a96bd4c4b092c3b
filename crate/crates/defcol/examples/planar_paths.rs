// Plane triangulations three-coloured so that every colour class is a union of paths,
// and outerplanar graphs two-coloured with defect 2.

use defcol::audit;
use defcol::constructions::{random_maximal_outerplanar, random_triangulation};
use defcol::planar::{outerplanar_two_colour, poh_three_colour};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let triangulation = random_triangulation(120, 200, &mut rng);
    let colouring = poh_three_colour(&triangulation)?;
    let cert = audit(triangulation.graph(), &colouring)?;
    println!(
        "triangulation on 120 vertices: {} colours, all paths {}",
        cert.k, cert.all_paths
    );
    assert!(cert.k <= 3 && cert.all_paths);

    let outerplanar = random_maximal_outerplanar(60, &mut rng);
    let cert = audit(&outerplanar, &outerplanar_two_colour(&outerplanar)?)?;
    println!(
        "outerplanar on 60 vertices: {} colours, defect {}",
        cert.k, cert.defect
    );
    assert!(cert.k <= 2 && cert.defect <= 2 && cert.all_paths);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("planar example runs");
}
