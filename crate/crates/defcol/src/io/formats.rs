use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use super::IoError;
use crate::colouring::Colouring;
use crate::graph::Graph;

/// Graph serialisations understood by [`read_graph`] and [`write_graph`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GraphFormat {
    /// Whitespace separated 0-indexed `u v` pairs; a line with a single integer declares
    /// the vertex count, `#` starts a comment.
    EdgeList,
    /// The 6-bit graph6 encoding, with or without the `>>graph6<<` header.
    Graph6,
    /// DIMACS `.col`: `p edge n m`, then 1-indexed `e u v` lines; `c` lines are comments.
    Dimacs,
}

impl GraphFormat {
    pub const ALL: [GraphFormat; 3] = [
        GraphFormat::EdgeList,
        GraphFormat::Graph6,
        GraphFormat::Dimacs,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GraphFormat::EdgeList => "edge-list",
            GraphFormat::Graph6 => "graph6",
            GraphFormat::Dimacs => "dimacs",
        }
    }

    /// By extension: `.g6`/`.graph6`, `.col`/`.dimacs`, anything else is an edge list.
    pub fn from_path(path: &Path) -> GraphFormat {
        match path.extension().and_then(|e| e.to_str()) {
            Some("g6" | "graph6") => GraphFormat::Graph6,
            Some("col" | "dimacs") => GraphFormat::Dimacs,
            _ => GraphFormat::EdgeList,
        }
    }

    /// Guesses from content: DIMACS if a `p` line appears, graph6 if the first data line is
    /// a single token of printable graph6 bytes that is not a number.
    pub fn sniff(text: &str) -> GraphFormat {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        if text.lines().any(|l| l.trim_start().starts_with("p ")) {
            return GraphFormat::Dimacs;
        }
        match lines.next() {
            Some(line) if line.starts_with(">>graph6<<") => GraphFormat::Graph6,
            Some(line)
                if !line.contains(char::is_whitespace)
                    && line.parse::<usize>().is_err()
                    && line.bytes().all(|b| (63..=126).contains(&b)) =>
            {
                GraphFormat::Graph6
            }
            _ => GraphFormat::EdgeList,
        }
    }
}

impl FromStr for GraphFormat {
    type Err = IoError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "edge-list" | "edges" | "el" => Ok(GraphFormat::EdgeList),
            "graph6" | "g6" => Ok(GraphFormat::Graph6),
            "dimacs" | "col" => Ok(GraphFormat::Dimacs),
            other => Err(IoError::UnknownFormat(other.to_string())),
        }
    }
}

/// A parsed graph and the number of repeated edges that were collapsed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedGraph {
    pub graph: Graph,
    pub duplicates: usize,
}

pub fn read_graph(text: &str, format: GraphFormat) -> Result<ParsedGraph, IoError> {
    match format {
        GraphFormat::EdgeList => read_edge_list(text),
        GraphFormat::Graph6 => read_graph6(text),
        GraphFormat::Dimacs => read_dimacs(text),
    }
}

pub fn write_graph(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::EdgeList => write_edge_list(g),
        GraphFormat::Graph6 => write_graph6(g),
        GraphFormat::Dimacs => write_dimacs(g),
    }
}

fn parse_number(token: &str, line: usize) -> Result<usize, IoError> {
    token.parse().map_err(|_| IoError::Parse {
        line,
        message: format!("expected a vertex number, found {token:?}"),
    })
}

/// Builds the graph, rejecting loops and counting duplicates. Edges carry their line.
fn assemble(n: usize, edges: &[(usize, usize, usize)]) -> Result<ParsedGraph, IoError> {
    let mut graph = Graph::new(n);
    let mut duplicates = 0;
    for &(u, v, line) in edges {
        if u == v {
            return Err(IoError::Loop { line, vertex: u });
        }
        if u >= n || v >= n {
            return Err(IoError::Parse {
                line,
                message: format!("edge {u}-{v} leaves the {n} declared vertices"),
            });
        }
        if !graph.add_edge(u, v).expect("endpoints checked") {
            duplicates += 1;
        }
    }
    Ok(ParsedGraph { graph, duplicates })
}

fn read_edge_list(text: &str) -> Result<ParsedGraph, IoError> {
    let mut declared = 0;
    let mut edges = Vec::new();
    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let data = raw.split('#').next().unwrap_or("").trim();
        let tokens: Vec<&str> = data.split_whitespace().collect();
        match tokens.as_slice() {
            [] => {}
            [count] => declared = declared.max(parse_number(count, line)?),
            [u, v] => edges.push((parse_number(u, line)?, parse_number(v, line)?, line)),
            _ => {
                return Err(IoError::Parse {
                    line,
                    message: format!("expected `u v`, found {data:?}"),
                })
            }
        }
    }
    let n = edges
        .iter()
        .map(|&(u, v, _)| u.max(v) + 1)
        .max()
        .unwrap_or(0)
        .max(declared);
    assemble(n, &edges)
}

fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").expect("writing to a String");
    }
    out
}

fn read_dimacs(text: &str) -> Result<ParsedGraph, IoError> {
    let mut n = None;
    let mut edges = Vec::new();
    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let tokens: Vec<&str> = raw.split_whitespace().collect();
        match tokens.as_slice() {
            [] | ["c", ..] => {}
            ["p", _kind, count, _m] => n = Some(parse_number(count, line)?),
            ["e", u, v] => {
                let (u, v) = (parse_number(u, line)?, parse_number(v, line)?);
                if u == 0 || v == 0 {
                    return Err(IoError::Parse {
                        line,
                        message: "DIMACS vertices are numbered from 1".into(),
                    });
                }
                if n.is_none() {
                    return Err(IoError::Parse {
                        line,
                        message: "edge before the `p` line".into(),
                    });
                }
                edges.push((u - 1, v - 1, line));
            }
            _ => {
                return Err(IoError::Parse {
                    line,
                    message: format!("unrecognised DIMACS line {:?}", raw.trim()),
                })
            }
        }
    }
    let n = n.ok_or_else(|| IoError::Parse {
        line: text.lines().count().max(1),
        message: "missing `p edge n m` line".into(),
    })?;
    assemble(n, &edges)
}

fn write_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).expect("writing to a String");
    }
    out
}

fn read_graph6(text: &str) -> Result<ParsedGraph, IoError> {
    let (line, data) = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .find(|(_, l)| !l.is_empty())
        .ok_or(IoError::Parse {
            line: 1,
            message: "empty graph6 input".into(),
        })?;
    let data = data.strip_prefix(">>graph6<<").unwrap_or(data).as_bytes();
    let bad = |message: String| IoError::Parse { line, message };
    if let Some(&b) = data.iter().find(|b| !(63..=126).contains(*b)) {
        return Err(bad(format!("byte {b} is outside the graph6 range")));
    }
    let values: Vec<usize> = data.iter().map(|&b| usize::from(b - 63)).collect();
    let (n, body) = match values.as_slice() {
        [63, 63, rest @ ..] if rest.len() >= 6 => (
            rest[..6].iter().fold(0, |acc, &x| (acc << 6) | x),
            &rest[6..],
        ),
        [63, rest @ ..] if rest.len() >= 3 => (
            rest[..3].iter().fold(0, |acc, &x| (acc << 6) | x),
            &rest[3..],
        ),
        [first, rest @ ..] if *first < 63 => (*first, rest),
        _ => return Err(bad("truncated graph6 size field".into())),
    };
    let bits = n * n.saturating_sub(1) / 2;
    if body.len() != bits.div_ceil(6) {
        return Err(bad(format!(
            "{} data bytes for {n} vertices, expected {}",
            body.len(),
            bits.div_ceil(6)
        )));
    }
    let mut edges = Vec::new();
    let mut index = 0;
    for v in 1..n {
        for u in 0..v {
            if body[index / 6] >> (5 - index % 6) & 1 == 1 {
                edges.push((u, v, line));
            }
            index += 1;
        }
    }
    assemble(n, &edges)
}

fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut values: Vec<u8> = match n {
        0..=62 => vec![n as u8],
        63..=258_047 => [63]
            .into_iter()
            .chain((0..3).rev().map(|i| ((n >> (6 * i)) & 63) as u8))
            .collect(),
        _ => [63, 63]
            .into_iter()
            .chain((0..6).rev().map(|i| ((n >> (6 * i)) & 63) as u8))
            .collect(),
    };
    let mut bits = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for v in 1..n {
        for u in 0..v {
            bits.push(u8::from(g.has_edge(u, v)));
        }
    }
    values.extend(bits.chunks(6).map(|chunk| {
        chunk
            .iter()
            .enumerate()
            .fold(0, |acc, (i, &b)| acc | (b << (5 - i)))
    }));
    let mut out: String = values.into_iter().map(|x| char::from(x + 63)).collect();
    out.push('\n');
    out
}

/// Reads `vertex colour` lines for a graph on `n` vertices; `#` starts a comment. Every
/// vertex must appear exactly once.
pub fn read_colouring(text: &str, n: usize) -> Result<Colouring, IoError> {
    let mut colour = vec![None; n];
    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let data = raw.split('#').next().unwrap_or("").trim();
        let tokens: Vec<&str> = data.split_whitespace().collect();
        match tokens.as_slice() {
            [] => {}
            [v, c] => {
                let v = parse_number(v, line)?;
                let c: usize = c.parse().map_err(|_| IoError::Parse {
                    line,
                    message: format!("bad colour {c:?}"),
                })?;
                let slot = colour.get_mut(v).ok_or_else(|| IoError::Parse {
                    line,
                    message: format!("vertex {v} out of range for {n} vertices"),
                })?;
                if slot.replace(c).is_some() {
                    return Err(IoError::Parse {
                        line,
                        message: format!("vertex {v} coloured twice"),
                    });
                }
            }
            _ => {
                return Err(IoError::Parse {
                    line,
                    message: format!("expected `vertex colour`, found {data:?}"),
                })
            }
        }
    }
    let missing: Vec<usize> = (0..n).filter(|&v| colour[v].is_none()).collect();
    if !missing.is_empty() {
        return Err(IoError::MissingColours(missing));
    }
    Ok(Colouring(
        colour.into_iter().map(|c| c.expect("checked")).collect(),
    ))
}

pub fn write_colouring(colouring: &Colouring) -> String {
    colouring
        .0
        .iter()
        .enumerate()
        .fold(String::new(), |mut out, (v, c)| {
            writeln!(out, "{v} {c}").expect("writing to a String");
            out
        })
}

/// Rotation system as `vertex: n1 n2 ...` lines, neighbours in cyclic order.
pub fn write_rotation(rotation: &[Vec<usize>]) -> String {
    rotation
        .iter()
        .enumerate()
        .fold(String::new(), |mut out, (v, order)| {
            let order: Vec<String> = order.iter().map(usize::to_string).collect();
            writeln!(out, "{v}: {}", order.join(" ")).expect("writing to a String");
            out
        })
}

/// Reads [`write_rotation`] output for a graph on `n` vertices; missing vertices get an
/// empty rotation.
pub fn read_rotation(text: &str, n: usize) -> Result<Vec<Vec<usize>>, IoError> {
    let mut rotation = vec![Vec::new(); n];
    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let data = raw.split('#').next().unwrap_or("").trim();
        if data.is_empty() {
            continue;
        }
        let (vertex, order) = data.split_once(':').ok_or_else(|| IoError::Parse {
            line,
            message: "expected `vertex: neighbours`".into(),
        })?;
        let vertex = parse_number(vertex.trim(), line)?;
        let slot = rotation.get_mut(vertex).ok_or_else(|| IoError::Parse {
            line,
            message: format!("vertex {vertex} out of range for {n} vertices"),
        })?;
        *slot = order
            .split_whitespace()
            .map(|t| parse_number(t, line))
            .collect::<Result<_, _>>()?;
    }
    Ok(rotation)
}

const DOT_PALETTE: [&str; 12] = [
    "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#ffff33", "#a65628", "#f781bf",
    "#999999", "#66c2a5", "#fc8d62", "#8da0cb",
];

/// Graphviz DOT; with a colouring, vertices carry `colour` and a fill from a fixed palette
/// that cycles after twelve colours.
pub fn write_dot(g: &Graph, colouring: Option<&Colouring>) -> String {
    let mut out = String::from("graph G {\n");
    for v in g.vertices() {
        match colouring {
            Some(c) => {
                let colour = c.colour(v);
                let fill = DOT_PALETTE[colour % DOT_PALETTE.len()];
                writeln!(
                    out,
                    "  {v} [colour={colour}, style=filled, fillcolor=\"{fill}\"];"
                )
            }
            None => writeln!(out, "  {v};"),
        }
        .expect("writing to a String");
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").expect("writing to a String");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_path() {
        let parsed = read_graph("0 1\n1 2", GraphFormat::EdgeList).unwrap();
        assert_eq!(parsed.graph, Graph::path(3));
        assert_eq!(parsed.duplicates, 0);
    }

    #[test]
    fn graph6_known_strings() {
        assert_eq!(write_graph(&Graph::cycle(5), GraphFormat::Graph6), "Dhc\n");
        assert_eq!(
            write_graph(&Graph::complete(4), GraphFormat::Graph6),
            "C~\n"
        );
        let parsed = read_graph(">>graph6<<Dhc", GraphFormat::Graph6).unwrap();
        assert_eq!((parsed.graph.n(), parsed.graph.m()), (5, 5));
        assert_eq!(parsed.graph, Graph::cycle(5));
    }

    #[test]
    fn graph6_large_size_field() {
        let g = Graph::path(70);
        let text = write_graph(&g, GraphFormat::Graph6);
        assert!(text.starts_with("~?@E"));
        assert_eq!(read_graph(&text, GraphFormat::Graph6).unwrap().graph, g);
    }

    #[test]
    fn dimacs_triangle_with_duplicates() {
        let text = "c triangle\np edge 3 4\ne 1 2\ne 2 3\ne 3 1\ne 2 1\n";
        let parsed = read_graph(text, GraphFormat::Dimacs).unwrap();
        assert_eq!(parsed.graph, Graph::complete(3));
        assert_eq!(parsed.duplicates, 1);
        assert_eq!(
            read_graph(
                &write_graph(&Graph::complete(3), GraphFormat::Dimacs),
                GraphFormat::Dimacs
            )
            .unwrap()
            .graph,
            Graph::complete(3)
        );
    }

    #[test]
    fn malformed_lines_report_their_number() {
        assert_eq!(
            read_graph("0 1\n1 x\n", GraphFormat::EdgeList),
            Err(IoError::Parse {
                line: 2,
                message: "expected a vertex number, found \"x\"".into()
            })
        );
        assert_eq!(
            read_graph("0 1\n\n2 2\n", GraphFormat::EdgeList),
            Err(IoError::Loop { line: 3, vertex: 2 })
        );
        assert!(matches!(
            read_graph("p edge 2 1\ne 0 1\n", GraphFormat::Dimacs),
            Err(IoError::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn isolated_vertices_survive_edge_lists() {
        let g = Graph::new(4);
        assert_eq!(
            read_graph(
                &write_graph(&g, GraphFormat::EdgeList),
                GraphFormat::EdgeList
            )
            .unwrap()
            .graph,
            g
        );
    }

    #[test]
    fn sniffing() {
        assert_eq!(GraphFormat::sniff("Dhc\n"), GraphFormat::Graph6);
        assert_eq!(
            GraphFormat::sniff("p edge 3 3\ne 1 2\n"),
            GraphFormat::Dimacs
        );
        assert_eq!(GraphFormat::sniff("3\n0 1\n"), GraphFormat::EdgeList);
    }

    #[test]
    fn colouring_files() {
        let c = Colouring(vec![0, 1, 0]);
        assert_eq!(read_colouring(&write_colouring(&c), 3).unwrap(), c);
        assert_eq!(
            read_colouring("# comment\n0 0\n2 0\n", 3),
            Err(IoError::MissingColours(vec![1]))
        );
    }

    #[test]
    fn rotation_files() {
        let rotation = vec![vec![1, 2], vec![2, 0], vec![0, 1]];
        assert_eq!(
            read_rotation(&write_rotation(&rotation), 3).unwrap(),
            rotation
        );
    }

    #[test]
    fn dot_has_colour_attributes() {
        let dot = write_dot(&Graph::path(2), Some(&Colouring(vec![0, 1])));
        assert!(dot.contains("0 [colour=0") && dot.contains("0 -- 1;"));
    }
}
