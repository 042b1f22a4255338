//! Vertex-disjoint s-t paths stored in O(n) bits.
//!
//! A family of paths is kept as a 2-bit numbering along every path, a sparse
//! set of boundary vertices and their colours. Everything else is recovered
//! on demand by rerunning a fixed flow routine inside small regions. New
//! paths come from a residual search over the split graph, and each round
//! is followed by a sweep that makes the family chordless and free of
//! extended deadlocks.

mod augment;
mod chordless;
mod engine;
mod region;
mod residual;
mod scheme;
mod sweep;
mod work;

pub use augment::{augment, AugmentingPath};
pub use chordless::{find_chordless_path, PathNumbering};
pub use engine::{add_path, max_disjoint_paths, st_separator, GoodPathsWitness, PathsEngine};
pub use region::region_paths;
pub use residual::{residual_view, SplitGraph};
pub use scheme::{scheme_from_single_path, PathDataScheme};
pub use work::{Residual, WorkingFamily};

use thiserror::Error;

use crate::graph::{neighbors, GraphView, Vertex};
use crate::succinct::BitVec;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PathsError {
    #[error("source and sink are the same vertex {0}")]
    SameTerminals(Vertex),
    #[error("vertex {vertex} outside 0..{n}")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("region flow routed {found} of {wanted} boundary paths")]
    RegionFlow { found: usize, wanted: usize },
    #[error("vertex {0} is on no stored path")]
    NotOnPath(Vertex),
    #[error("s-t vertex connectivity exceeds {0}")]
    ConnectivityExceeds(usize),
    #[error("path sweep stalled without a reroutable cycle")]
    SweepStalled,
}

/// Region and stride constant `max(2, ceil(k log2 k))`.
pub fn stride(k: usize) -> usize {
    let k = k as f64;
    ((k * k.log2()).ceil() as usize).max(2)
}

/// A view with its two terminals and an optional set of vertices that paths
/// may not use.
pub struct Terminals<'g, V: ?Sized> {
    pub view: &'g V,
    pub s: Vertex,
    pub t: Vertex,
    pub removed: Option<&'g BitVec>,
}

impl<V: ?Sized> Clone for Terminals<'_, V> {
    fn clone(&self) -> Self {
        *self
    }
}

impl<V: ?Sized> Copy for Terminals<'_, V> {}

impl<'g, V: GraphView + ?Sized> Terminals<'g, V> {
    pub fn new(view: &'g V, s: Vertex, t: Vertex) -> Result<Self, PathsError> {
        let n = view.order();
        for v in [s, t] {
            if v >= n {
                return Err(PathsError::VertexOutOfRange { vertex: v, n });
            }
        }
        if s == t {
            return Err(PathsError::SameTerminals(s));
        }
        Ok(Terminals { view, s, t, removed: None })
    }

    pub fn with_removed(mut self, removed: &'g BitVec) -> Self {
        self.removed = Some(removed);
        self
    }

    pub fn n(&self) -> usize {
        self.view.order()
    }

    /// May `v` be an internal path vertex?
    pub fn usable(&self, v: Vertex) -> bool {
        v != self.s && v != self.t && !self.removed.is_some_and(|r| r.get(v))
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.view.degree(v)
    }

    /// The `j`-th neighbour, walking the list for restricted vertices.
    pub fn nth(&self, v: Vertex, j: usize) -> Vertex {
        if self.view.is_restricted(v) {
            neighbors(self.view, v).nth(j).expect("neighbour index in range")
        } else {
            self.view.head(v, j)
        }
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        neighbors(self.view, v)
    }

    pub fn direct_edge(&self) -> bool {
        self.neighbors(self.s).any(|w| w == self.t)
    }
}
