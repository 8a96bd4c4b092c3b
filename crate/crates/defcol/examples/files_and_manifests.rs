// Graph files in three formats, colouring reports and a reproducible manifest run.

use std::path::Path;

use defcol::io::{
    read_graph, run_manifest, write_graph, write_report, ExperimentManifest, GraphFormat,
};
use defcol::{audit, Colouring, Graph};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let petersen = Graph::from_edges(
        10,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 0),
            (0, 5),
            (1, 6),
            (2, 7),
            (3, 8),
            (4, 9),
            (5, 7),
            (7, 9),
            (9, 6),
            (6, 8),
            (8, 5),
        ],
    )?;
    for format in GraphFormat::ALL {
        let text = write_graph(&petersen, format);
        assert_eq!(read_graph(&text, format)?.graph, petersen);
        println!("{}: {}", format.name(), text.lines().next().unwrap_or(""));
    }

    let colouring = Colouring(vec![0, 1, 0, 1, 2, 1, 2, 2, 0, 0]);
    print!(
        "{}",
        write_report(&petersen, &audit(&petersen, &colouring)?, &[])
    );

    let manifest = ExperimentManifest::from_toml(
        r#"
engine = "outerplanar"
seed = 1
[graph]
generator = "random-outerplanar"
params = { n = 40 }
[expect]
colours = 2
defect = 2
all_paths = true
"#,
    )?;
    let run = run_manifest(&manifest, Path::new("."))?;
    assert!(run.violations.is_empty());
    assert_eq!(run, run_manifest(&manifest, Path::new("."))?);
    print!("{}", run.report);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("file example runs");
}
