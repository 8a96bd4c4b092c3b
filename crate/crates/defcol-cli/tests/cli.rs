use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn defcol(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_defcol"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .expect("stdin is piped")
        .write_all(stdin.as_bytes())
        .expect("stdin accepts input");
    child.wait_with_output().expect("binary finishes")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    dir.join(name)
}

#[test]
fn lovasz_formula() {
    let out = defcol(&["params", "lovasz", "--delta", "10", "--d", "2"], "");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "k: 4\n");
}

#[test]
fn generated_standard_example_pipes_into_lovasz() {
    let graph = defcol(&["gen", "standard-defect", "--h", "2", "--d", "2"], "");
    assert_eq!(graph.status.code(), Some(0));
    let report = defcol(&["colour", "lovasz", "--d", "2"], &stdout(&graph));
    assert_eq!(report.status.code(), Some(0));
    let text = stdout(&report);
    let defect: usize = text
        .lines()
        .find_map(|l| l.strip_prefix("defect: "))
        .unwrap()
        .parse()
        .unwrap();
    assert!(defect <= 2);
}

#[test]
fn gadget_needs_three_colours_for_defect_one() {
    let graph = defcol(&["gen", "outerplanar-gadget", "--format", "graph6"], "");
    let out = defcol(
        &["oracle", "min-colours-defect", "--d", "1"],
        &stdout(&graph),
    );
    assert_eq!(stdout(&out), "question: min-colours-defect\nanswer: 3\n");
}

#[test]
fn exit_codes_for_witnesses_refusals_and_usage() {
    let k5 = stdout(&defcol(&["gen", "complete", "--n", "5"], ""));
    assert_eq!(
        defcol(&["colour", "vdhw", "--t", "5"], &k5).status.code(),
        Some(2)
    );
    let long_path = stdout(&defcol(&["gen", "path", "--n", "200"], ""));
    assert_eq!(
        defcol(&["oracle", "treewidth"], &long_path).status.code(),
        Some(3)
    );
    assert_eq!(
        defcol(&["colour", "no-such-engine"], &k5).status.code(),
        Some(1)
    );
    assert_eq!(
        defcol(&["gen", "path", "--n", "3", "--typo", "1"], "")
            .status
            .code(),
        Some(1)
    );
    assert_eq!(defcol(&["no-such-command"], "").status.code(), Some(1));
}

#[test]
fn verify_reads_colouring_files() {
    let graph = scratch("verify.col");
    std::fs::write(&graph, "p edge 3 2\ne 1 2\ne 2 3\n").unwrap();
    let colouring = scratch("verify.txt");
    std::fs::write(&colouring, "# alternate\n0 0\n1 1\n2 0\n").unwrap();
    let out = defcol(
        &[
            "verify",
            graph.to_str().unwrap(),
            colouring.to_str().unwrap(),
        ],
        "",
    );
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("defect: 0\n"));
}

#[test]
fn poh_with_a_rotation_file() {
    let rotation = scratch("tri.rot");
    let graph = defcol(
        &[
            "gen",
            "random-triangulation",
            "--n",
            "40",
            "--seed",
            "5",
            "--rotation-out",
            rotation.to_str().unwrap(),
        ],
        "",
    );
    let out = defcol(
        &["colour", "poh", "--rotation", rotation.to_str().unwrap()],
        &stdout(&graph),
    );
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert!(stdout(&out).contains("all_paths: true\n"));
}

#[test]
fn manifests_are_byte_reproducible() {
    let manifest = scratch("defect2.toml");
    std::fs::write(
        &manifest,
        "engine = \"defect2\"\nseed = 11\n[graph]\ngenerator = \"random-bounded-degree\"\nparams = { n = 80, delta = 6 }\n[expect]\nclustering = 144\n",
    )
    .unwrap();
    let first = defcol(&["run", manifest.to_str().unwrap()], "");
    let second = defcol(&["run", manifest.to_str().unwrap()], "");
    assert_eq!(
        first.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&first.stderr)
    );
    assert_eq!(first.stdout, second.stdout);
    assert!(stdout(&first).contains("expectations: met\n"));
}

#[test]
fn seeded_generation_is_reproducible() {
    let args = [
        "gen", "gnp", "--n", "30", "--p", "0.2", "--seed", "9", "--format", "dimacs",
    ];
    assert_eq!(defcol(&args, "").stdout, defcol(&args, "").stdout);
}
