//! Vertex cover, independent set, dominating set, max cut and q-colouring
//! by dynamic programming over the streamed decomposition.

use std::error::Error;

use spantd::graph::Graph;
use spantd::solvers::{solve_set, solve_size, Problem};

pub fn run() -> Result<(), Box<dyn Error>> {
    let petersen = Graph::from_edges(
        10,
        &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (1, 6), (2, 7), (3, 8), (4, 9), (5, 7), (7, 9), (9, 6), (6, 8), (8, 5)],
    )?;
    let k = 4;
    for problem in [
        Problem::VertexCover,
        Problem::IndependentSet,
        Problem::DominatingSet,
        Problem::MaxCut,
        Problem::Colouring(2),
        Problem::Colouring(3),
    ] {
        let (value, stats) = solve_size(&petersen, k, problem)?;
        let (same, witness, _) = solve_set(&petersen, k, problem)?;
        assert_eq!(value, same);
        println!("{problem}: {value}, {} tables at most, witness {witness:?}", stats.peak_tables);
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run()
}
