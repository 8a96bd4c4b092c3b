// Cut trees, immersion tree-partitions, minor-free part decompositions and the
// circumference recursion.

use defcol::constructions::{random_connected, random_plane_graph, random_subcubic};
use defcol::oracle::Caps;
use defcol::structural::{
    circumference_colour, circumference_palette, gomory_hu, immersion_two_colour, vdhw_colour,
    StructuralError,
};
use defcol::{audit, Graph};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let g = random_connected(20, 25, &mut rng);
    let tree = gomory_hu(&g)?;
    println!(
        "cut tree: min cut between 0 and 19 is {}",
        tree.min_cut(0, 19)
    );

    let cubic = random_subcubic(60, &mut rng);
    let cert = audit(&cubic, &immersion_two_colour(&cubic, 5)?)?;
    println!("subcubic, no K5 immersion: defect {} below 64", cert.defect);
    assert!(cert.defect < 64);

    let (plane, _) = random_plane_graph(80, 0.8, &mut rng);
    let parts = vdhw_colour(&plane, 5)?;
    let defective = audit(&plane, &parts.defective)?;
    let clustered = audit(&plane, &parts.clustered)?;
    println!(
        "planar via {} parts: defect {}, clustering {}",
        parts.parts.len(),
        defective.defect,
        clustered.clustering
    );

    match vdhw_colour(&Graph::complete(5), 5) {
        Err(StructuralError::Minor(witness)) => println!(
            "K5 yields a verified minor witness: {}",
            witness.verify(&Graph::complete(5))
        ),
        other => return Err(format!("expected a minor witness, got {other:?}").into()),
    }

    let wheel = {
        let mut w = Graph::cycle(6);
        let hub = w.add_vertex();
        for v in 0..6 {
            w.add_edge(hub, v)?;
        }
        w
    };
    let colouring = circumference_colour(&wheel, 7, &Caps::default())?;
    let cert = audit(&wheel, &colouring)?;
    println!(
        "wheel with circumference 7: {} colours of {}, clustering {}",
        cert.k,
        circumference_palette(7),
        cert.clustering
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("decomposition example runs");
}
