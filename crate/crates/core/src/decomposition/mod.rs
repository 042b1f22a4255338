//! Streamed balanced binary tree decompositions.
//!
//! The iterator recurses on balanced separators: a node of the tree holds a
//! subgraph, a set X of vertices that must stay together with the parent,
//! and a balanced X-separator S. Its bag is `X ∪ S`; its children are the
//! subgraphs induced by the components of `G - S` (packed into two groups)
//! together with S. Subgraphs small enough become leaves holding all their
//! vertices. Only the records on the current root-to-node chain exist at
//! any time, and subgraphs are kept on a [`MinimalStack`](crate::graph::MinimalStack).

mod components;
mod emit;
mod iter;

pub use components::{component_extremes, Component, ComponentFinder};
pub use emit::{collect_td, emit_td, write_td, TreeDecomposition};
pub use iter::{TdIterator, Visit};

use thiserror::Error;

use crate::graph::{GraphView, StackError};
use crate::separators::SeparatorError;
use crate::succinct::BitVec;

#[derive(Debug, Error)]
pub enum DecompositionError {
    #[error("treewidth of G is larger than {0}")]
    TreewidthExceeded(usize),
    #[error("width parameter must be at least 1")]
    ZeroWidth,
    #[error(transparent)]
    Separator(#[from] SeparatorError),
    #[error(transparent)]
    Stack(#[from] StackError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Subgraphs of at most this many vertices become leaves.
pub fn leaf_limit(k: usize) -> usize {
    8 * k + 6
}

/// True if some subgraph has minimum degree above `k`, which rules out
/// treewidth `k`. Peels vertices of degree at most `k` in repeated passes
/// over a removed bit per vertex.
pub fn has_dense_core<V: GraphView + ?Sized>(view: &V, k: usize) -> bool {
    let n = view.order();
    let mut gone = BitVec::new(n);
    let _bits = crate::budget::Tracked::new("decomposition.core", gone.size_in_bits());
    let mut left = n;
    loop {
        let before = left;
        for v in 0..n {
            if gone.get(v) {
                continue;
            }
            let alive = crate::graph::neighbors(view, v).filter(|&w| !gone.get(w)).take(k + 1).count();
            if alive <= k {
                gone.set(v);
                left -= 1;
            }
        }
        if left == 0 {
            return false;
        }
        if left == before {
            return true;
        }
    }
}
