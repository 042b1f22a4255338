//! Space-efficient traversals and the descendant-count vertex set.

mod bfs;
mod compute_r;
mod dfs;

pub use bfs::{bfs, reachable};
pub use compute_r::compute_r;
pub use dfs::{dfs, dfs_forest, dfs_restricted, Dfs, DfsEvent, DfsStats, RestrictedDfsStats, Successors, Undirected};
