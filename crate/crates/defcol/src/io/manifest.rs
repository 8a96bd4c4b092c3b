use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::dispatch::{colour, generate, Instance, Params};
use super::formats::{read_graph, read_rotation, GraphFormat};
use super::report::write_report;
use super::RunError;
use crate::colouring::audit;

/// A reproducible run: the same manifest always yields the same report bytes.
///
/// ```toml
/// engine = "lovasz"
/// seed = 7
/// [params]
/// d = 2
/// [graph]
/// generator = "standard-defect"
/// params = { h = 2, d = 2 }
/// [expect]
/// defect = 2
/// ```
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentManifest {
    pub engine: String,
    pub seed: u64,
    pub graph: GraphSource,
    #[serde(default)]
    pub params: BTreeMap<String, toml::Value>,
    #[serde(default)]
    pub expect: Expectations,
}

/// Either a named construction with its parameters, or a file (with an optional rotation
/// file for embedded engines). Relative paths resolve against the manifest's directory.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphSource {
    pub generator: Option<String>,
    pub file: Option<PathBuf>,
    pub format: Option<String>,
    pub rotation: Option<PathBuf>,
    #[serde(default)]
    pub params: BTreeMap<String, toml::Value>,
}

/// Upper bounds on the audited figures, and the exact `all_paths` flag when given.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expectations {
    pub colours: Option<usize>,
    pub defect: Option<usize>,
    pub clustering: Option<usize>,
    pub all_paths: Option<bool>,
}

/// The report and the expectations it broke, if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ManifestRun {
    pub report: String,
    pub violations: Vec<String>,
}

impl ExperimentManifest {
    pub fn from_toml(text: &str) -> Result<Self, RunError> {
        toml::from_str(text).map_err(|e| RunError::Manifest(e.to_string()))
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("manifests serialise")
    }
}

fn to_params(values: &BTreeMap<String, toml::Value>) -> Result<Params, RunError> {
    let mut out = BTreeMap::new();
    for (key, value) in values {
        let text = match value {
            toml::Value::String(s) => s.clone(),
            toml::Value::Integer(i) => i.to_string(),
            toml::Value::Float(f) => f.to_string(),
            toml::Value::Boolean(b) => b.to_string(),
            other => {
                return Err(RunError::Manifest(format!(
                    "parameter {key} has unsupported value {other}"
                )))
            }
        };
        out.insert(key.clone(), text);
    }
    Ok(Params::new(out))
}

fn read_file(path: &Path) -> Result<String, RunError> {
    std::fs::read_to_string(path).map_err(|e| RunError::File(format!("{}: {e}", path.display())))
}

fn load(source: &GraphSource, seed: u64, base: &Path) -> Result<(Instance, String), RunError> {
    match (&source.generator, &source.file) {
        (Some(name), None) => Ok((
            generate(name, &to_params(&source.params)?, seed)?,
            format!("generator {name}"),
        )),
        (None, Some(file)) => {
            if !source.params.is_empty() {
                return Err(RunError::Manifest(
                    "graph parameters only apply to generators".into(),
                ));
            }
            let path = base.join(file);
            let text = read_file(&path)?;
            let format = match &source.format {
                Some(name) => name.parse()?,
                None => GraphFormat::from_path(&path),
            };
            let parsed = read_graph(&text, format)?;
            let rotation = match &source.rotation {
                Some(r) => Some(read_rotation(&read_file(&base.join(r))?, parsed.graph.n())?),
                None => None,
            };
            Ok((
                Instance {
                    graph: parsed.graph,
                    rotation,
                },
                format!("file {}", file.display()),
            ))
        }
        _ => Err(RunError::Manifest(
            "the graph needs exactly one of `generator` and `file`".into(),
        )),
    }
}

/// Runs the manifest. Paths resolve against `base`.
pub fn run_manifest(manifest: &ExperimentManifest, base: &Path) -> Result<ManifestRun, RunError> {
    let (instance, source) = load(&manifest.graph, manifest.seed, base)?;
    let run = colour(
        &manifest.engine,
        &instance,
        &to_params(&manifest.params)?,
        manifest.seed,
    )?;
    let cert = audit(&instance.graph, &run.colouring)?;
    let mut violations = Vec::new();
    let mut check = |name: &str, limit: Option<usize>, actual: usize| {
        if let Some(limit) = limit.filter(|&l| actual > l) {
            violations.push(format!("{name} {actual} exceeds {limit}"));
        }
    };
    check("colours", manifest.expect.colours, cert.k);
    check("defect", manifest.expect.defect, cert.defect);
    check("clustering", manifest.expect.clustering, cert.clustering);
    if let Some(flag) = manifest.expect.all_paths.filter(|&f| f != cert.all_paths) {
        violations.push(format!("all_paths is {}, expected {flag}", cert.all_paths));
    }
    let mut extra = vec![
        ("engine".to_string(), manifest.engine.clone()),
        ("source".to_string(), source),
        ("seed".to_string(), manifest.seed.to_string()),
    ];
    extra.extend(run.notes.into_iter().filter(|(k, _)| k != "seed"));
    extra.push((
        "expectations".to_string(),
        if violations.is_empty() {
            "met".into()
        } else {
            violations.join("; ")
        },
    ));
    Ok(ManifestRun {
        report: write_report(&instance.graph, &cert, &extra),
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const LOVASZ: &str = r#"
engine = "lovasz"
seed = 7
[params]
d = 2
[graph]
generator = "random-bounded-degree"
params = { n = 60, delta = 8 }
[expect]
colours = 3
defect = 2
"#;

    #[test]
    fn identical_manifests_give_identical_bytes() {
        let manifest = ExperimentManifest::from_toml(LOVASZ).unwrap();
        let first = run_manifest(&manifest, Path::new(".")).unwrap();
        let second = run_manifest(
            &ExperimentManifest::from_toml(&manifest.to_toml()).unwrap(),
            Path::new("."),
        )
        .unwrap();
        assert_eq!(first, second);
        assert!(first.violations.is_empty(), "{:?}", first.violations);
        assert!(first.report.contains("seed: 7\n"));
    }

    #[test]
    fn broken_expectations_are_listed() {
        let text = LOVASZ.replace("defect = 2", "defect = 0");
        let run = run_manifest(
            &ExperimentManifest::from_toml(&text).unwrap(),
            Path::new("."),
        )
        .unwrap();
        assert_eq!(run.violations.len(), 1);
        assert!(run.violations[0].starts_with("defect"));
    }

    #[test]
    fn seed_is_required_and_fields_are_checked() {
        assert!(ExperimentManifest::from_toml(&LOVASZ.replace("seed = 7", "")).is_err());
        assert!(
            ExperimentManifest::from_toml(&LOVASZ.replace("seed = 7", "seed = 7\ncolour = 1"))
                .is_err()
        );
    }
}
