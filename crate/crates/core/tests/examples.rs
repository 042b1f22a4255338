//! Every runnable example doubles as a test.

#[allow(dead_code)]
#[path = "../examples/succinct_structures.rs"]
mod succinct_structures;

#[test]
fn succinct_structures_runs() {
    succinct_structures::run().unwrap();
}

#[allow(dead_code)]
#[path = "../examples/subgraph_stack.rs"]
mod subgraph_stack;

#[test]
fn subgraph_stack_runs() {
    subgraph_stack::run().unwrap();
}

#[allow(dead_code)]
#[path = "../examples/space_efficient_dfs.rs"]
mod space_efficient_dfs;

#[test]
fn space_efficient_dfs_runs() {
    space_efficient_dfs::run().unwrap();
}

#[allow(dead_code)]
#[path = "../examples/disjoint_paths.rs"]
mod disjoint_paths;

#[test]
fn disjoint_paths_runs() {
    disjoint_paths::run().unwrap();
}

#[allow(dead_code)]
#[path = "../examples/balanced_separator.rs"]
mod balanced_separator;

#[test]
fn balanced_separator_runs() {
    balanced_separator::run().unwrap();
}

#[allow(dead_code)]
#[path = "../examples/tree_decomposition.rs"]
mod tree_decomposition;

#[test]
fn tree_decomposition_runs() {
    tree_decomposition::run().unwrap();
}

#[allow(dead_code)]
#[path = "../examples/solve_problems.rs"]
mod solve_problems;

#[test]
fn solve_problems_runs() {
    solve_problems::run().unwrap();
}

#[allow(dead_code)]
#[path = "../examples/bit_budget.rs"]
mod bit_budget;

#[test]
fn bit_budget_runs() {
    bit_budget::run().unwrap();
}
