//! Brute-force reference implementations for cross-checking `spantd`.
//!
//! Nothing here shares code with the main crate: the graph type, the `.gr`
//! reader, max-flow, treewidth and problem solvers are all written plainly
//! for clarity over speed.

pub mod flow;
pub mod gen;
pub mod goodness;
pub mod graph;
pub mod solve;
pub mod td;
pub mod traversal;
pub mod treewidth;

pub use graph::{OracleError, OracleGraph};
