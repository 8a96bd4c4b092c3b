// The standard examples against the exact colouring oracle: `S(h, d)` needs `h + 1`
// colours for defect `d`, and its clustered sibling needs `h + 1` for clustering `c`.

use defcol::constructions::{standard_cluster, standard_defect};
use defcol::oracle::{min_colours_clustering, min_colours_defect, Caps};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let caps = Caps::default();
    for h in 1..=3 {
        let g = standard_defect(h, 1);
        let colours = min_colours_defect(&g, 1, &caps)?;
        println!(
            "S({h}, 1): {} vertices, {colours} colours for defect 1",
            g.n()
        );
        assert_eq!(colours, h + 1);
    }
    let g = standard_cluster(2, 2);
    let colours = min_colours_clustering(&g, 2, &caps)?;
    println!("clustered S(2, 2): {colours} colours for clustering 2");
    assert_eq!(colours, 3);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("lower bound example runs");
}
