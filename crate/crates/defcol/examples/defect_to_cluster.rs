// A defect-2 colouring turned into a clustered one with a single extra colour, by an
// independent transversal of long monochromatic segments.

use defcol::greedy::{lovasz_defective, MaxDegreeEngine};
use defcol::structural::{defect2_to_cluster, Defect2Engine, SegmentLength};
use defcol::{audit, Colouring, Graph};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let cycle = Graph::cycle(300);
    let halves = Colouring((0..300).map(|v| usize::from(v >= 150)).collect());
    let out = defect2_to_cluster(&cycle, &halves, SegmentLength::Standard, 1)?;
    let cert = audit(&cycle, &out.colouring)?;
    println!(
        "long cycle: {} segments, {} colours, clustering {}",
        out.segments.len(),
        cert.k,
        cert.clustering
    );
    assert!(cert.k == 3 && cert.clustering <= 48);

    let grid = Graph::grid(15, 15);
    let split = lovasz_defective(&grid, 2);
    let out = defect2_to_cluster(&grid, &split.colouring, SegmentLength::Short, 2)?;
    println!(
        "grid: clustering {} with short segments",
        audit(&grid, &out.colouring)?.clustering
    );

    let engine = Defect2Engine { seed: 3 };
    let colouring = engine.colour(&grid)?;
    engine
        .contract()
        .check(&grid, &colouring, grid.max_degree())?;
    println!("engine contract holds at degree {}", grid.max_degree());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("conversion example runs");
}
