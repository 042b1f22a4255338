//! Vertex-disjoint s-t paths that stay chordless and free of deadlock
//! cycles, and a minimum s-t vertex separator read off them.

use std::error::Error;

use spantd::graph::Graph;
use spantd::paths::{max_disjoint_paths, st_separator, Terminals};

pub fn run() -> Result<(), Box<dyn Error>> {
    // 4x4 grid, opposite corners: two paths, the corner's degree
    let mut edges = Vec::new();
    for r in 0..4 {
        for c in 0..4 {
            let v = 4 * r + c;
            if c < 3 {
                edges.push((v, v + 1));
            }
            if r < 3 {
                edges.push((v, v + 4));
            }
        }
    }
    let g = Graph::from_edges(16, &edges)?;
    let witness = max_disjoint_paths(&g, 0, 15, 3)?;
    let inst = Terminals::new(&g, 0, 15)?;
    for path in witness.paths(&inst)? {
        println!("path {path:?}");
    }
    assert_eq!(witness.count(), 2);

    let cut = st_separator(Terminals::new(&g, 0, 15)?, 2)?;
    println!("separator {:?}", cut.iter_ones().collect::<Vec<_>>());
    assert_eq!(cut.count_ones(), 2);
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run()
}
