use std::fmt::Write as _;

use crate::colouring::Certificate;
use crate::graph::Graph;

/// Key-value text for an audited colouring: graph size, the certificate summary, one
/// `class.<colour>` line per colour class, then `extra` in the given order.
pub fn write_report(g: &Graph, cert: &Certificate, extra: &[(String, String)]) -> String {
    let mut out = String::new();
    let mut line = |key: &str, value: &dyn std::fmt::Display| {
        writeln!(out, "{key}: {value}").expect("writing to a String")
    };
    line("vertices", &g.n());
    line("edges", &g.m());
    line("colours", &cert.k);
    line("defect", &cert.defect);
    line("clustering", &cert.clustering);
    line("all_paths", &cert.all_paths);
    for (colour, size) in &cert.class_sizes {
        line(&format!("class.{colour}"), size);
    }
    for (key, value) in extra {
        line(key, value);
    }
    out
}

/// Pairs `key: value` lines back up, skipping blanks; for reading reports in tests and tools.
pub fn parse_report(text: &str) -> Vec<(String, String)> {
    text.lines()
        .filter_map(|l| l.split_once(": "))
        .map(|(k, v)| (k.to_string(), v.to_string()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colouring::{audit, Colouring};

    #[test]
    fn proper_colouring_reports_defect_zero() {
        let g = Graph::cycle(4);
        let cert = audit(&g, &Colouring(vec![0, 1, 0, 1])).unwrap();
        let text = write_report(&g, &cert, &[("engine".into(), "manual".into())]);
        assert_eq!(
            text,
            "vertices: 4\nedges: 4\ncolours: 2\ndefect: 0\nclustering: 1\nall_paths: true\nclass.0: 2\nclass.1: 2\nengine: manual\n"
        );
        assert!(parse_report(&text).contains(&("defect".into(), "0".into())));
    }
}
