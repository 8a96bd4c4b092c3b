//! `defcol`: generate graphs, run colouring engines, audit colourings, ask exact oracles,
//! evaluate closed-form parameters and replay experiment manifests.
//!
//! Exit status: 0 on success, 2 when a hypothesis violation is reported with its witness,
//! 3 when an exact oracle refuses an input above its cap, 1 otherwise.

use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use defcol::audit;
use defcol::io::{
    self, dispatch, read_colouring, read_graph, read_rotation, write_colouring, write_dot,
    write_graph, write_report, write_rotation, ExperimentManifest, GraphFormat, Instance, Params,
    RunError,
};

#[derive(Parser)]
#[command(
    name = "defcol",
    version,
    about = "Defective and clustered graph colouring"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a construction: gen <construction> [--key value]... [--seed N] [--format F] [--rotation-out PATH]
    Gen {
        construction: String,
        #[arg(trailing_var_arg = true, allow_hyphen_values = true)]
        args: Vec<String>,
    },
    /// Colour a graph and print its report: colour <engine> [--key value]... [GRAPH]
    ///
    /// Reserved options: --seed, --input-format, --rotation PATH, --dot PATH, --colouring-out PATH.
    /// The graph is read from GRAPH or standard input.
    Colour {
        engine: String,
        #[arg(trailing_var_arg = true, allow_hyphen_values = true)]
        args: Vec<String>,
    },
    /// Audit a colouring file (`vertex colour` lines) against a graph.
    Verify {
        graph: PathBuf,
        colouring: PathBuf,
        #[arg(long)]
        input_format: Option<String>,
    },
    /// Exact answer by exhaustive search: oracle <question> [--key value]... [GRAPH]
    Oracle {
        question: String,
        #[arg(trailing_var_arg = true, allow_hyphen_values = true)]
        args: Vec<String>,
    },
    /// Closed-form parameter calculators: params <formula> [--key value]...
    Params {
        formula: String,
        #[arg(trailing_var_arg = true, allow_hyphen_values = true)]
        args: Vec<String>,
    },
    /// Replay a TOML experiment manifest; exits 1 if an expectation fails.
    Run { manifest: PathBuf },
    /// List constructions, engines, oracle questions and formulas.
    List,
}

/// Tokens after the subcommand name: parameters, reserved options and an optional
/// trailing graph path.
struct Split {
    params: Vec<String>,
    reserved: Vec<(String, String)>,
    graph: Option<String>,
}

fn split_args(args: &[String], reserved: &[&str]) -> Result<Split, RunError> {
    let mut out = Split {
        params: Vec::new(),
        reserved: Vec::new(),
        graph: None,
    };
    let mut i = 0;
    while i < args.len() {
        let token = &args[i];
        let Some(body) = token.strip_prefix("--") else {
            if i + 1 == args.len() {
                out.graph = Some(token.clone());
                break;
            }
            return Err(RunError::Usage(format!("unexpected argument {token:?}")));
        };
        let (key, value) = match body.split_once('=') {
            Some((k, v)) => (k.to_string(), v.to_string()),
            None => {
                i += 1;
                let value = args
                    .get(i)
                    .ok_or_else(|| RunError::Usage(format!("{token} needs a value")))?;
                (body.to_string(), value.clone())
            }
        };
        if reserved.contains(&key.as_str()) {
            out.reserved.push((key, value));
        } else {
            out.params.extend([format!("--{key}"), value]);
        }
        i += 1;
    }
    Ok(out)
}

impl Split {
    fn option(&self, key: &str) -> Option<&str> {
        self.reserved
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    fn seed(&self) -> Result<u64, RunError> {
        self.option("seed").map_or(Ok(dispatch::DEFAULT_SEED), |s| {
            s.parse()
                .map_err(|_| RunError::Usage(format!("bad seed {s:?}")))
        })
    }
}

fn read_file(path: &Path) -> Result<String, RunError> {
    std::fs::read_to_string(path).map_err(|e| RunError::File(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<(), RunError> {
    std::fs::write(path, text).map_err(|e| RunError::File(format!("{}: {e}", path.display())))
}

/// Reads a graph from a path or `-`/nothing for standard input, warning about duplicates.
fn load_graph(source: Option<&str>, format: Option<&str>) -> Result<defcol::Graph, RunError> {
    let (text, by_path) = match source {
        None | Some("-") => {
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| RunError::File(format!("stdin: {e}")))?;
            (text, None)
        }
        Some(path) => (
            read_file(Path::new(path))?,
            Some(GraphFormat::from_path(Path::new(path))),
        ),
    };
    let format = match format {
        Some(name) => name.parse()?,
        None => by_path
            .filter(|f| *f != GraphFormat::EdgeList)
            .unwrap_or_else(|| GraphFormat::sniff(&text)),
    };
    let parsed = read_graph(&text, format)?;
    if parsed.duplicates > 0 {
        eprintln!("warning: collapsed {} duplicate edges", parsed.duplicates);
    }
    Ok(parsed.graph)
}

fn lines(pairs: &[(String, String)]) -> String {
    pairs.iter().map(|(k, v)| format!("{k}: {v}\n")).collect()
}

fn execute(command: Command) -> Result<String, RunError> {
    match command {
        Command::Gen { construction, args } => {
            let split = split_args(&args, &["seed", "format", "rotation-out"])?;
            if let Some(extra) = &split.graph {
                return Err(RunError::Usage(format!("unexpected argument {extra:?}")));
            }
            let instance = io::generate(
                &construction,
                &Params::from_args(&split.params)?,
                split.seed()?,
            )?;
            if let Some(path) = split.option("rotation-out") {
                let rotation = instance.rotation.as_ref().ok_or_else(|| {
                    RunError::Usage(format!("{construction} has no embedding to write"))
                })?;
                write_file(Path::new(path), &write_rotation(rotation))?;
            }
            Ok(match split.option("format").unwrap_or("edge-list") {
                "dot" => write_dot(&instance.graph, None),
                name => write_graph(&instance.graph, name.parse()?),
            })
        }
        Command::Colour { engine, args } => {
            let split = split_args(
                &args,
                &["seed", "input-format", "rotation", "dot", "colouring-out"],
            )?;
            let graph = load_graph(split.graph.as_deref(), split.option("input-format"))?;
            let rotation = match split.option("rotation") {
                Some(path) => Some(read_rotation(&read_file(Path::new(path))?, graph.n())?),
                None => None,
            };
            let seed = split.seed()?;
            let instance = Instance { graph, rotation };
            let run = io::colour(&engine, &instance, &Params::from_args(&split.params)?, seed)?;
            let cert = audit(&instance.graph, &run.colouring)?;
            if let Some(path) = split.option("dot") {
                write_file(
                    Path::new(path),
                    &write_dot(&instance.graph, Some(&run.colouring)),
                )?;
            }
            if let Some(path) = split.option("colouring-out") {
                write_file(Path::new(path), &write_colouring(&run.colouring))?;
            }
            let mut extra = vec![
                ("engine".to_string(), engine),
                ("seed".to_string(), seed.to_string()),
            ];
            extra.extend(run.notes.into_iter().filter(|(k, _)| k != "seed"));
            Ok(write_report(&instance.graph, &cert, &extra))
        }
        Command::Verify {
            graph,
            colouring,
            input_format,
        } => {
            let path = graph.to_string_lossy().into_owned();
            let g = load_graph(Some(&path), input_format.as_deref())?;
            let colouring = read_colouring(&read_file(&colouring)?, g.n())?;
            let cert = audit(&g, &colouring)?;
            Ok(write_report(&g, &cert, &[]))
        }
        Command::Oracle { question, args } => {
            let split = split_args(&args, &["input-format"])?;
            let graph = load_graph(split.graph.as_deref(), split.option("input-format"))?;
            Ok(lines(&io::ask(
                &question,
                &graph,
                &Params::from_args(&split.params)?,
            )?))
        }
        Command::Params { formula, args } => {
            let split = split_args(&args, &[])?;
            if let Some(extra) = &split.graph {
                return Err(RunError::Usage(format!("unexpected argument {extra:?}")));
            }
            Ok(lines(&io::formula(
                &formula,
                &Params::from_args(&split.params)?,
            )?))
        }
        Command::Run { manifest } => {
            let parsed = ExperimentManifest::from_toml(&read_file(&manifest)?)?;
            let base = manifest.parent().unwrap_or(Path::new("."));
            let run = io::run_manifest(&parsed, base)?;
            if run.violations.is_empty() {
                Ok(run.report)
            } else {
                print!("{}", run.report);
                Err(RunError::Manifest(format!(
                    "expectations failed: {}",
                    run.violations.join("; ")
                )))
            }
        }
        Command::List => Ok(lines(&[
            ("constructions".into(), dispatch::CONSTRUCTIONS.join(" ")),
            ("engines".into(), dispatch::ENGINES.join(" ")),
            ("questions".into(), dispatch::QUESTIONS.join(" ")),
            ("formulas".into(), dispatch::FORMULAS.join(" ")),
        ])),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match execute(cli.command) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.outcome().exit_code() as u8)
        }
    }
}
