//! Edgelist and DIMACS readers and writers.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    /// One whitespace-separated pair per line; `#` and `%` start comments.
    /// A line with a single token declares an isolated vertex, extra
    /// columns (weights, timestamps) are ignored.
    #[default]
    Edgelist,
    /// `p edge n m` header, `e u v` edges, `c` comments.
    Dimacs,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "edgelist" | "edges" | "txt" => Ok(Format::Edgelist),
            "dimacs" | "clq" | "col" => Ok(Format::Dimacs),
            _ => Err(Error::UnknownFormat(s.to_owned())),
        }
    }
}

impl Format {
    /// Guess from the file extension, defaulting to edgelist.
    pub fn from_path(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some("clq" | "col" | "dimacs") => Format::Dimacs,
            _ => Format::Edgelist,
        }
    }
}

pub fn load_graph(path: impl AsRef<Path>, format: Format) -> Result<Graph> {
    let text = fs::read_to_string(path)?;
    parse_graph(&text, format)
}

pub fn parse_graph(text: &str, format: Format) -> Result<Graph> {
    match format {
        Format::Edgelist => parse_edgelist(text),
        Format::Dimacs => parse_dimacs(text),
    }
}

pub fn parse_edgelist(text: &str) -> Result<Graph> {
    let mut builder = GraphBuilder::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') || line.starts_with('%') {
            continue;
        }
        let mut tokens = line.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty());
        match (tokens.next(), tokens.next()) {
            (Some(a), Some(b)) => builder.add_edge(a, b),
            (Some(a), None) => {
                builder.add_vertex(a);
            }
            _ => unreachable!("line is non-empty"),
        }
    }
    Ok(builder.build())
}

pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        let parse_err = |message: &str| Error::Parse { line: line_no, message: message.to_owned() };
        let mut tokens = line.split_whitespace();
        match tokens.next() {
            None | Some("c") => {}
            Some("p") => {
                if n.is_some() {
                    return Err(parse_err("second problem line"));
                }
                let _kind = tokens.next().ok_or_else(|| parse_err("missing problem kind"))?;
                let count = tokens
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| parse_err("missing or invalid vertex count"))?;
                n = Some(count);
            }
            Some("e") => {
                let count = n.ok_or_else(|| parse_err("edge before problem line"))?;
                let mut endpoint = || -> Result<usize> {
                    let v: usize = tokens
                        .next()
                        .and_then(|t| t.parse().ok())
                        .ok_or_else(|| parse_err("expected two vertex numbers"))?;
                    if v == 0 || v > count {
                        return Err(parse_err(&format!("vertex {v} outside 1..={count}")));
                    }
                    Ok(v - 1)
                };
                let u = endpoint()?;
                let v = endpoint()?;
                edges.push((u, v));
            }
            Some(other) => return Err(parse_err(&format!("unknown line type '{other}'"))),
        }
    }
    let n = n.ok_or(Error::Parse { line: 0, message: "missing problem line".into() })?;
    let labels = (1..=n).map(|i| i.to_string().into()).collect();
    Graph::from_labeled_edges(labels, edges)
}

pub fn write_graph(g: &Graph, format: Format) -> String {
    match format {
        Format::Edgelist => write_edgelist(g),
        Format::Dimacs => write_dimacs(g),
    }
}

/// Edges as label pairs; isolated vertices on their own line.
pub fn write_edgelist(g: &Graph) -> String {
    let mut out = String::new();
    for v in g.vertices().filter(|&v| g.degree(v) == 0) {
        let _ = writeln!(out, "{}", g.label(v));
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{} {}", g.label(u), g.label(v));
    }
    out
}

/// DIMACS numbers vertices `1..=n` by internal id, so labels are lost.
pub fn write_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_lines_make_a_path() {
        let g = parse_edgelist("1 2\n2 3").unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (3, 2));
        assert!(g.has_edge(0, 1) && g.has_edge(1, 2));
    }

    #[test]
    fn duplicates_and_loops_dropped() {
        let g = parse_edgelist("1 2\n1 2\n3 3\n").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.degree(g.find_label("3").unwrap()), 0);
    }

    #[test]
    fn comments_and_extra_columns() {
        let g = parse_edgelist("% header\n# more\na b 0.5\nb c 1 17\n\nd\n").unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(&**g.label(0), "a");
    }

    #[test]
    fn dimacs_basic() {
        let g = parse_dimacs("c test\np edge 4 2\ne 1 2\ne 3 4\n").unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (4, 2));
        assert_eq!(&**g.label(3), "4");
    }

    #[test]
    fn dimacs_errors_carry_line_numbers() {
        let err = parse_dimacs("p edge 3 1\ne 1 x\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = parse_dimacs("p edge 3 1\ne 1 4\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        assert!(matches!(parse_dimacs("e 1 2\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_dimacs("c nothing\n"), Err(Error::Parse { .. })));
    }

    #[test]
    fn unknown_format() {
        assert!(matches!("graphml".parse::<Format>(), Err(Error::UnknownFormat(_))));
        assert_eq!("DIMACS".parse::<Format>().unwrap(), Format::Dimacs);
    }

    #[test]
    fn round_trips() {
        let g = parse_edgelist("1 2\n2 3\n5\n3 1\n").unwrap();
        for format in [Format::Edgelist, Format::Dimacs] {
            let back = parse_graph(&write_graph(&g, format), format).unwrap();
            assert_eq!(back.vertex_count(), g.vertex_count());
            assert_eq!(back.edge_count(), g.edge_count());
        }
        assert_eq!(parse_edgelist(&write_edgelist(&g)).unwrap(), g);
    }
}
