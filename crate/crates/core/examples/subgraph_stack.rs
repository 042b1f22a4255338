//! Read a `.gr` graph and look at nested induced subgraphs without copying
//! adjacency lists.

use std::error::Error;

use spantd::graph::{parse_gr, GraphView, SubgraphStack};
use spantd::succinct::BitVec;

const GRID: &str = "c 3x3 grid\np tw 9 12\n1 2\n2 3\n4 5\n5 6\n7 8\n8 9\n1 4\n4 7\n2 5\n5 8\n3 6\n6 9\n";

pub fn run() -> Result<(), Box<dyn Error>> {
    let g = parse_gr(GRID)?;
    println!("{} vertices, {} edges", g.n(), g.m());

    let mut stack = SubgraphStack::new(&g);
    // drop the middle column
    let keep = BitVec::from_positions(9, [0, 2, 3, 5, 6, 8]);
    stack.push_induced(&keep)?;
    let top = stack.top();
    let degrees: Vec<usize> = (0..top.order()).map(|v| top.degree(v)).collect();
    println!("degrees after removing the middle column: {degrees:?}");
    assert_eq!(degrees, [1, 1, 2, 2, 1, 1]);
    stack.pop()?;
    assert_eq!(stack.depth(), 0);
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run()
}
