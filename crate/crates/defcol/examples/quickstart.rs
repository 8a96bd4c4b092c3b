// Colour a bounded-degree graph with Lovász's local search and read its certificate.

use defcol::greedy::lovasz_defective;
use defcol::{audit, Graph};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let grid = Graph::grid(6, 6);
    let run = lovasz_defective(&grid, 1);
    let cert = audit(&grid, &run.colouring)?;
    println!(
        "grid 6x6, max degree {}: {} colours, defect {}",
        grid.max_degree(),
        cert.k,
        cert.defect
    );
    assert!(cert.k <= run.palette && cert.defect <= 1);

    let wheel = Graph::from_edges(
        6,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 0),
            (5, 0),
            (5, 1),
            (5, 2),
            (5, 3),
            (5, 4),
        ],
    )?;
    let run = lovasz_defective(&wheel, 2);
    let cert = audit(&wheel, &run.colouring)?;
    println!(
        "wheel: {} colours, defect {}, clustering {}",
        cert.k, cert.defect, cert.clustering
    );
    assert!(cert.defect <= 2);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("quickstart runs");
}
