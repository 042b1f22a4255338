//! Stream a balanced binary tree decomposition node by node, write it as a
//! PACE `.td` file, and see a graph that is too wide get rejected.

use std::error::Error;

use spantd::decomposition::{write_td, DecompositionError, TdIterator};
use spantd::graph::Graph;

pub fn run() -> Result<(), Box<dyn Error>> {
    // a ladder has treewidth 2
    let rungs = 40;
    let mut edges = Vec::new();
    for i in 0..rungs {
        edges.push((2 * i, 2 * i + 1));
        if i + 1 < rungs {
            edges.push((2 * i, 2 * i + 2));
            edges.push((2 * i + 1, 2 * i + 3));
        }
    }
    let ladder = Graph::from_edges(2 * rungs, &edges)?;

    let mut it = TdIterator::new(&ladder, 2)?;
    let mut shown = 0;
    while it.next()? {
        let visit = it.show().expect("after a step");
        if visit.first && shown < 4 {
            println!("node {} at depth {}: bag {:?}", visit.node, visit.depth, it.bag());
            shown += 1;
        }
    }
    println!("{} nodes, height {}, widest bag {}", it.node_count(), it.max_depth(), it.widest_bag());

    let dir = tempfile::tempdir()?;
    let path = dir.path().join("ladder.td");
    let summary = write_td(&ladder, 2, &path)?;
    println!("{summary:?}");
    println!("{}", std::fs::read_to_string(&path)?.lines().next().unwrap_or_default());

    let k5 = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])?;
    match TdIterator::new(&k5, 1).and_then(|mut it| while_next(&mut it)) {
        Err(e @ DecompositionError::TreewidthExceeded(_)) => println!("K5: {e}"),
        other => return Err(format!("K5 should be rejected, got {other:?}").into()),
    }
    Ok(())
}

fn while_next(it: &mut TdIterator<'_>) -> Result<(), DecompositionError> {
    while it.next()? {}
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run()
}
