//! Dynamic programs over the streamed tree decomposition.
//!
//! Every node gets a table over the assignments of its bag. Tables exist only
//! for the nodes on the current root-to-node chain: a node's table is built
//! on arrival and the child's table is merged into it when the tour returns.
//! Witnesses are read off by following the links a merge records; the
//! tables below a window of `window_depth(n)` levels are not kept, so each
//! frontier node of a window has its subtree recomputed when the descent
//! reaches it.

mod leaf;
mod problem;
mod table;
mod walk;

pub use leaf::{needs_refinement, LeafTree, DIRECT_LEAF_ENTRIES};
pub use problem::{Problem, Witness};
pub use table::{table_merge, DpTable, Link, INFEASIBLE, MAX_TABLE_ENTRIES};

use thiserror::Error;

use crate::decomposition::{DecompositionError, TdIterator};
use crate::graph::Graph;

#[derive(Debug, Error)]
pub enum SolveError {
    #[error(transparent)]
    Decomposition(#[from] DecompositionError),
    #[error("a table over {bag} vertices with {states} states each is too large")]
    TableTooLarge { bag: usize, states: usize },
    #[error("colouring needs at least one colour")]
    NoColours,
    #[error("internal check failed: {0}")]
    Check(String),
}

/// Tables alive at once, counted as they are built and dropped.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TableCount {
    live: usize,
    peak: usize,
}

impl TableCount {
    pub fn add(&mut self, tables: usize) {
        self.live += tables;
        self.peak = self.peak.max(self.live);
    }

    pub fn remove(&mut self, tables: usize) {
        self.live -= tables;
    }

    pub fn live(&self) -> usize {
        self.live
    }

    pub fn peak(&self) -> usize {
        self.peak
    }
}

/// Levels of the decomposition tree whose tables a window keeps:
/// `max(1, ceil(log2 log2 n))`.
pub fn window_depth(n: usize) -> usize {
    let log = (n.max(2) as f64).log2();
    (log.log2().ceil() as usize).max(1)
}

/// Tables a witness search may hold at once on a tree of this height:
/// `height + ceil(log2 n / l) * (l + 1)` with `l = window_depth(n)`.
pub fn set_table_bound(n: usize, height: usize) -> usize {
    let window = window_depth(n);
    let log = (n.max(2) as f64).log2().ceil() as usize;
    height + log.div_ceil(window) * (window + 1)
}

/// Counters of one solver run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SolveStats {
    /// Most tables alive at once.
    pub peak_tables: usize,
    /// Height of the decomposition tree.
    pub height: usize,
    /// Nodes of the decomposition tree.
    pub nodes: usize,
    /// Leaves solved through their own elimination tree.
    pub refined_leaves: usize,
    /// Most tables a refined leaf held at once, beyond the chain.
    pub leaf_tables: usize,
    /// Window depth used for witnesses; 0 for a value-only run.
    pub window_depth: usize,
    /// Subtrees recomputed to continue a witness descent.
    pub rebuilds: usize,
}

/// Optimum of `problem` on `g`: smallest cover or dominating set, largest
/// independent set or cut, and 1 or 0 for whether a proper colouring exists.
pub fn solve_size(g: &Graph, k: usize, problem: Problem) -> Result<(i64, SolveStats), SolveError> {
    problem.check()?;
    problem.warn_beyond_threshold(g.n(), k, false);
    let mut it = TdIterator::new(g, k)?;
    let mut stats = SolveStats::default();
    let mut count = TableCount::default();
    it.next()?;
    let root = walk::subtree(&mut it, problem, &walk::Scope::whole(), &mut count, &mut stats)?;
    stats.height = it.max_depth();
    stats.nodes = it.node_count();
    stats.peak_tables = count.peak();
    debug_assert!(
        stats.peak_tables <= stats.height + 1 + stats.leaf_tables,
        "{} tables alive on a tree of height {}",
        stats.peak_tables,
        stats.height
    );
    let value = root.table().best(problem).map_or(problem.infeasible_value(), |(_, cost)| problem.value_of(cost));
    Ok((value, stats))
}

/// An optimal witness of `problem` on `g` with its value. For colouring
/// without a proper colouring the witness is [`Witness::None`]. The witness
/// is checked against `g` before it is returned.
pub fn solve_set(g: &Graph, k: usize, problem: Problem) -> Result<(i64, Witness, SolveStats), SolveError> {
    problem.check()?;
    problem.warn_beyond_threshold(g.n(), k, true);
    let mut stats = SolveStats { window_depth: window_depth(g.n()), ..SolveStats::default() };
    let mut count = TableCount::default();
    let mut it = TdIterator::new(g, k)?;
    it.next()?;
    let scope = walk::Scope::window(Vec::new(), None, stats.window_depth);
    let window = walk::subtree(&mut it, problem, &scope, &mut count, &mut stats)?;
    stats.height = it.max_depth();
    stats.nodes = it.node_count();
    drop(it);
    let Some((entry, cost)) = window.table().best(problem) else {
        stats.peak_tables = count.peak();
        return Ok((problem.infeasible_value(), Witness::None, stats));
    };
    let value = problem.value_of(cost);
    let mut witness = walk::Assignment::new(g.n());
    let mut jobs = Vec::new();
    walk::descend(window, entry, problem, &mut witness, &mut jobs, &mut count, &mut stats)?;
    while let Some(job) = jobs.pop() {
        stats.rebuilds += 1;
        let (mut it, parent_bag) = walk::navigate(g, k, &job.address)?;
        let scope = walk::Scope::window(job.address.clone(), parent_bag, stats.window_depth);
        let window = walk::subtree(&mut it, problem, &scope, &mut count, &mut stats)?;
        drop(it);
        if window.table().vertices() != job.vertices.as_slice() {
            return Err(SolveError::Check(format!("recomputed node at {:?} has a different bag", job.address)));
        }
        walk::descend(window, job.entry, problem, &mut witness, &mut jobs, &mut count, &mut stats)?;
    }
    stats.peak_tables = count.peak();
    debug_assert!(
        stats.peak_tables <= set_table_bound(g.n(), stats.height) + stats.leaf_tables,
        "{} tables alive on a tree of height {}",
        stats.peak_tables,
        stats.height
    );
    let witness = witness.finish(problem)?;
    problem.verify(g, &witness, value)?;
    Ok((value, witness, stats))
}
