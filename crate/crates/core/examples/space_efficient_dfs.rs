//! Depth-first and breadth-first search with segmented stacks, and the
//! subtree-size marking used to pick spread vertices.

use std::error::Error;

use spantd::graph::Graph;
use spantd::traversal::{bfs, compute_r, dfs, DfsEvent};

pub fn run() -> Result<(), Box<dyn Error>> {
    let edges: Vec<(usize, usize)> = (1..200).map(|v| ((v - 1) / 2, v)).collect();
    let tree = Graph::from_edges(200, &edges)?;

    let mut order = Vec::new();
    let stats = dfs(&tree, 0, |event| {
        if let DfsEvent::Pre { v, .. } = event {
            order.push(v);
        }
    });
    println!("dfs visited {} vertices, first ten {:?}", stats.visited, &order[..10]);

    let mut deepest = 0;
    bfs(&tree, &[0], |_| false, |_, level| deepest = deepest.max(level));
    println!("bfs depth {deepest}");
    assert_eq!(deepest, 7);

    let spread = compute_r(&tree, 20);
    println!("{} vertices head subtrees of more than 20 vertices", spread.count_ones());
    assert!(spread.count_ones() <= 200 / 20 + 1);
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run()
}
