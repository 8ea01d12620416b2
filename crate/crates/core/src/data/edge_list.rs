//! Whitespace-separated edge lists: one `u v [w]` per line, `#` comments.
//!
//! Vertex labels are arbitrary non-negative integers; they are renumbered
//! densely in ascending label order. Repeated edges are merged by summing
//! their weights. The weight defaults to 1.

use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::objectives::WeightedGraph;

pub fn parse_edge_list(path: &Path) -> Result<WeightedGraph> {
    let file = File::open(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    read_edge_list(BufReader::new(file)).map_err(|e| match e {
        Error::Io { source, .. } => Error::Io {
            path: path.to_path_buf(),
            source,
        },
        other => other,
    })
}

pub fn parse_edge_list_str(text: &str) -> Result<WeightedGraph> {
    read_edge_list(text.as_bytes())
}

pub fn read_edge_list<R: BufRead>(reader: R) -> Result<WeightedGraph> {
    let mut raw = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line_no = idx + 1;
        let line = line.map_err(|source| Error::Io {
            path: Default::default(),
            source,
        })?;
        let body = line.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = body.split_whitespace().collect();
        if fields.len() != 2 && fields.len() != 3 {
            return Err(parse_err(
                line_no,
                format!("expected 'u v [w]', found {} fields", fields.len()),
            ));
        }
        let label = |s: &str| {
            s.parse::<u64>()
                .map_err(|_| parse_err(line_no, format!("invalid vertex id '{s}'")))
        };
        let u = label(fields[0])?;
        let v = label(fields[1])?;
        let w = match fields.get(2) {
            Some(s) => s
                .parse::<f64>()
                .map_err(|_| parse_err(line_no, format!("invalid weight '{s}'")))?,
            None => 1.0,
        };
        if u == v {
            return Err(parse_err(line_no, format!("self-loop on vertex {u}")));
        }
        if !(w.is_finite() && w >= 0.0) {
            return Err(parse_err(
                line_no,
                format!("weight {w} must be finite and non-negative"),
            ));
        }
        raw.push((u, v, w));
    }

    let mut labels: Vec<u64> = raw.iter().flat_map(|&(u, v, _)| [u, v]).collect();
    labels.sort_unstable();
    labels.dedup();
    let dense = |l: u64| labels.binary_search(&l).expect("label collected above");
    WeightedGraph::from_edges(
        labels.len(),
        raw.iter().map(|&(u, v, w)| (dense(u), dense(v), w)),
    )
}

fn parse_err(line: usize, message: String) -> Error {
    Error::Parse { line, message }
}

/// Writes each edge once as `u v w`. Parsing the output reproduces the graph
/// exactly when every vertex has at least one edge.
pub fn write_edge_list<W: Write>(graph: &WeightedGraph, mut out: W) -> io::Result<()> {
    for (u, v, w) in graph.edges() {
        writeln!(out, "{u} {v} {w}")?;
    }
    Ok(())
}
