//! Space-instrumented graph algorithms for graphs of small treewidth.
//!
//! The crate computes vertex-disjoint s-t paths, balanced separators and a
//! streamed balanced binary tree decomposition, and runs dynamic programs
//! over that stream. Every long-lived structure reports its size to the
//! [`budget`] ledger so the space behaviour can be measured.

pub mod budget;
pub mod decomposition;
pub mod graph;
pub mod paths;
pub mod separators;
pub mod solvers;
pub mod succinct;
pub mod traversal;
