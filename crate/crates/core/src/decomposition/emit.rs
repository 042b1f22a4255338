use std::fmt::Write as _;
use std::io::{self, BufWriter, Seek, Write};
use std::path::Path;

use super::{DecompositionError, TdIterator};
use crate::graph::{Graph, Vertex};

/// A whole decomposition held in memory, nodes in order of first arrival.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TreeDecomposition {
    pub n: usize,
    pub bags: Vec<Vec<Vertex>>,
    /// Tree edges as `(parent, child)` node indices.
    pub edges: Vec<(usize, usize)>,
    /// Depth of the deepest node; the root has depth 0.
    pub height: usize,
}

impl TreeDecomposition {
    pub fn max_bag(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn width(&self) -> isize {
        self.max_bag() as isize - 1
    }

    /// The `.td` document.
    pub fn to_td_string(&self) -> String {
        let mut s = String::new();
        writeln!(s, "s td {} {} {}", self.bags.len(), self.max_bag(), self.n).unwrap();
        for (i, bag) in self.bags.iter().enumerate() {
            write!(s, "b {}", i + 1).unwrap();
            for v in bag {
                write!(s, " {}", v + 1).unwrap();
            }
            s.push('\n');
        }
        for (a, b) in &self.edges {
            writeln!(s, "{} {}", a + 1, b + 1).unwrap();
        }
        s
    }
}

/// Run the iterator to the end and keep every bag.
pub fn collect_td(g: &Graph, k: usize) -> Result<TreeDecomposition, DecompositionError> {
    let mut it = TdIterator::new(g, k)?;
    let mut td = TreeDecomposition { n: g.n(), ..Default::default() };
    while it.next()? {
        let visit = it.show().expect("visit after a successful step");
        if visit.first {
            td.bags.push(it.bag());
            if let Some(p) = visit.parent {
                td.edges.push((p, visit.node));
            }
            td.height = td.height.max(visit.depth);
        }
    }
    Ok(td)
}

/// Counts reported by [`emit_td`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TdSummary {
    pub bags: usize,
    pub max_bag: usize,
    pub height: usize,
}

/// Drive a fresh iterator to completion and write the `.td` document.
/// Bags and edges are spooled to an anonymous temporary file because the
/// header needs their counts; nothing reaches `sink` if the run fails.
pub fn emit_td(it: &mut TdIterator<'_>, mut sink: impl Write) -> Result<TdSummary, DecompositionError> {
    let mut bags = BufWriter::new(tempfile::tempfile()?);
    let mut edges = BufWriter::new(tempfile::tempfile()?);
    let mut summary = TdSummary::default();
    while it.next()? {
        let visit = it.show().expect("visit after a successful step");
        if !visit.first {
            continue;
        }
        let bag = it.bag();
        summary.bags += 1;
        summary.max_bag = summary.max_bag.max(bag.len());
        summary.height = summary.height.max(visit.depth);
        write!(bags, "b {}", visit.node + 1)?;
        for v in &bag {
            write!(bags, " {}", v + 1)?;
        }
        writeln!(bags)?;
        if let Some(p) = visit.parent {
            writeln!(edges, "{} {}", p + 1, visit.node + 1)?;
        }
    }
    writeln!(sink, "s td {} {} {}", summary.bags, summary.max_bag, it.graph().n())?;
    for spool in [bags, edges] {
        let mut file = spool.into_inner().map_err(io::IntoInnerError::into_error)?;
        file.rewind()?;
        io::copy(&mut file, &mut sink)?;
    }
    sink.flush()?;
    Ok(summary)
}

/// Write the decomposition of `g` to `path` atomically: the file appears
/// only once the whole run has succeeded.
pub fn write_td(g: &Graph, k: usize, path: impl AsRef<Path>) -> Result<TdSummary, DecompositionError> {
    let path = path.as_ref();
    let dir = path.parent().filter(|d| !d.as_os_str().is_empty()).unwrap_or(Path::new("."));
    let mut it = TdIterator::new(g, k)?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    let summary = emit_td(&mut it, BufWriter::new(tmp.as_file_mut()))?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(summary)
}
