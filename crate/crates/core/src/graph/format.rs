use std::io::{self, Write};
use std::path::Path;

use super::{Graph, GraphError};

fn parse_err(line: usize, message: impl Into<String>) -> GraphError {
    GraphError::Parse { line, message: message.into() }
}

/// Parse a PACE `.gr` document: `p tw n m`, then one 1-indexed `u v` edge
/// per line; `c` lines are comments.
pub fn parse_gr(text: &str) -> Result<Graph, GraphError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('c') {
            continue;
        }
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        if fields[0] == "p" {
            if header.is_some() {
                return Err(parse_err(line, "second header"));
            }
            if fields.len() != 4 || fields[1] != "tw" {
                return Err(parse_err(line, "expected `p tw <n> <m>`"));
            }
            let n = fields[2].parse().map_err(|_| parse_err(line, "bad vertex count"))?;
            let m = fields[3].parse().map_err(|_| parse_err(line, "bad edge count"))?;
            header = Some((n, m));
            edges.reserve(m);
            continue;
        }
        let Some((n, _)) = header else {
            return Err(parse_err(line, "edge before header"));
        };
        if fields.len() != 2 {
            return Err(parse_err(line, "expected `<u> <v>`"));
        }
        let mut ends = [0usize; 2];
        for (slot, f) in ends.iter_mut().zip(&fields) {
            let v: usize = f.parse().map_err(|_| parse_err(line, format!("bad vertex `{f}`")))?;
            if v == 0 || v > n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            *slot = v - 1;
        }
        edges.push((ends[0], ends[1]));
    }
    let (n, m) = header.ok_or_else(|| parse_err(0, "missing header"))?;
    if edges.len() != m {
        return Err(parse_err(0, format!("header announces {m} edges, found {}", edges.len())));
    }
    Graph::from_edges(n, &edges)
}

pub fn read_gr(path: impl AsRef<Path>) -> Result<Graph, GraphError> {
    parse_gr(&std::fs::read_to_string(path)?)
}

pub fn write_gr(g: &Graph, mut out: impl Write) -> io::Result<()> {
    writeln!(out, "p tw {} {}", g.n(), g.m())?;
    for (u, v) in g.edges() {
        writeln!(out, "{} {}", u + 1, v + 1)?;
    }
    Ok(())
}
