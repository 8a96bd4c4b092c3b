mod quickstart {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/quickstart.rs"
    ));
}
mod planar_paths {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/planar_paths.rs"
    ));
}
mod lower_bounds {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/lower_bounds.rs"
    ));
}
mod islands {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/islands.rs"));
}
mod decompositions {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/decompositions.rs"
    ));
}
mod defect_to_cluster {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/defect_to_cluster.rs"
    ));
}
mod files_and_manifests {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/files_and_manifests.rs"
    ));
}

#[test]
fn quickstart_runs() {
    quickstart::run_example().expect("quickstart example");
}

#[test]
fn planar_paths_runs() {
    planar_paths::run_example().expect("planar example");
}

#[test]
fn lower_bounds_runs() {
    lower_bounds::run_example().expect("lower bound example");
}

#[test]
fn islands_runs() {
    islands::run_example().expect("island example");
}

#[test]
fn decompositions_runs() {
    decompositions::run_example().expect("decomposition example");
}

#[test]
fn defect_to_cluster_runs() {
    defect_to_cluster::run_example().expect("conversion example");
}

#[test]
fn files_and_manifests_runs() {
    files_and_manifests::run_example().expect("file example");
}
