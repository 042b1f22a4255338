//! Separators of at most 2k+2 vertices that split both the graph and a
//! marked set X into parts of at most two thirds.

use std::error::Error;

use spantd::graph::Graph;
use spantd::separators::{balanced_x_separator, x_separator, SeparatorAudit};

pub fn run() -> Result<(), Box<dyn Error>> {
    let n = 30;
    let edges: Vec<(usize, usize)> = (0..n).map(|v| (v, (v + 1) % n)).collect();
    let cycle = Graph::from_edges(n, &edges)?;
    let x = [0, 5, 10, 15, 20, 25];

    let split = x_separator(&cycle, &x, 2)?.ok_or("a cycle has width 2")?;
    println!("X-separator {:?}", split.iter_ones().collect::<Vec<_>>());

    let sep = balanced_x_separator(&cycle, &x, 2)?.ok_or("a cycle has width 2")?;
    let audit = SeparatorAudit::of(&cycle, &x, sep.set());
    println!("balanced separator {:?}: {audit:?}", sep.vertices().collect::<Vec<_>>());
    assert!(audit.is_balanced(n, x.len(), 2));
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run()
}
