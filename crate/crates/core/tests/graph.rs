mod common;

use common::{to_graph, to_oracle};
use proptest::prelude::*;
use rand::Rng;
use spantd::graph::{neighbors, parse_gr, write_gr, Graph, GraphError, GraphView, MinimalStack, SubgraphStack};
use spantd::succinct::BitVec;
use spantd_oracle::{gen, OracleGraph};

fn triangle() -> Graph {
    Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()
}

fn sorted_neighbours<V: GraphView + ?Sized>(view: &V, v: usize) -> Vec<usize> {
    let mut out: Vec<usize> = neighbors(view, v).collect();
    out.sort_unstable();
    out
}

/// Every vertex's neighbourhood in `view` equals the one in `expected`.
fn same_graph<V: GraphView + ?Sized>(view: &V, expected: &OracleGraph) -> bool {
    view.order() == expected.n() && (0..expected.n()).all(|v| sorted_neighbours(view, v) == expected.neighbors(v))
}

fn keep_bits(keep: &[bool]) -> BitVec {
    BitVec::from_bools(keep)
}

#[test]
fn construction_errors() {
    assert!(matches!(Graph::from_edges(2, &[(0, 0)]), Err(GraphError::SelfLoop(0))));
    assert!(matches!(Graph::from_edges(2, &[(0, 1), (1, 0)]), Err(GraphError::DuplicateEdge(..))));
    assert!(matches!(Graph::from_edges(2, &[(0, 2)]), Err(GraphError::VertexOutOfRange { .. })));
}

#[test]
fn gr_documents() {
    let g = parse_gr("c a path\np tw 3 2\n1 2\n\n2 3\n").unwrap();
    assert_eq!(g.edges().collect::<Vec<_>>(), [(0, 1), (1, 2)]);
    assert!(matches!(parse_gr("p tw 3 3\n1 2\n"), Err(GraphError::Parse { .. })));
    assert!(matches!(parse_gr("1 2\n"), Err(GraphError::Parse { .. })));
    assert!(matches!(parse_gr("p tw 2 1\n1 5\n"), Err(GraphError::VertexOutOfRange { vertex: 5, n: 2 })));
    assert!(matches!(parse_gr("p tw 2 1\n1 x\n"), Err(GraphError::Parse { .. })));
    let mut out = Vec::new();
    write_gr(&g, &mut out).unwrap();
    assert_eq!(String::from_utf8(out).unwrap(), "p tw 3 2\n1 2\n2 3\n");
}

#[test]
fn identity_push_keeps_the_triangle() {
    let g = triangle();
    let mut stack = SubgraphStack::new(&g);
    stack.push(&BitVec::ones(3), &BitVec::ones(6)).unwrap();
    assert!(same_graph(&stack.top(), &to_oracle(&g)));
    let before: Vec<Vec<usize>> = (0..3).map(|v| sorted_neighbours(&stack.top(), v)).collect();
    stack.toptune();
    let after: Vec<Vec<usize>> = (0..3).map(|v| sorted_neighbours(&stack.top(), v)).collect();
    assert_eq!(before, after);
}

#[test]
fn dropping_a_vertex_renames_the_rest() {
    let g = triangle();
    let mut stack = SubgraphStack::new(&g);
    stack.push_induced(&BitVec::from_positions(3, [0, 1])).unwrap();
    let top = stack.top();
    assert_eq!(top.order(), 2);
    assert_eq!(sorted_neighbours(&top, 0), [1]);
    assert_eq!(top.to_root(1), 1);
    assert_eq!(top.from_root(2), None);
    stack.push_induced(&BitVec::new(2)).unwrap();
    assert_eq!(stack.top().order(), 0);
    stack.pop().unwrap();
    stack.pop().unwrap();
    assert!(stack.pop().is_err());
}

#[test]
fn dangling_arcs_are_refused() {
    let g = triangle();
    let mut stack = SubgraphStack::new(&g);
    assert!(stack.push(&BitVec::from_positions(3, [0, 1]), &BitVec::ones(6)).is_err());
    assert!(stack.push(&BitVec::ones(2), &BitVec::ones(6)).is_err());
}

#[test]
fn tuning_an_edgeless_top_changes_nothing() {
    let g = Graph::empty(4);
    let mut stack = SubgraphStack::new(&g);
    stack.push_induced(&BitVec::from_positions(4, [1, 3])).unwrap();
    stack.toptune();
    assert!(stack.is_tuned());
    assert!(same_graph(&stack.top(), &OracleGraph::new(2)));
}

#[test]
fn three_levels_answer_the_same_after_tuning() {
    let og = gen::gnp(20, 0.3, &mut gen::rng(17));
    let g = to_graph(&og);
    let mut stack = SubgraphStack::new(&g);
    let mut keep = vec![true; 20];
    let mut expected = og.clone();
    for drop in [[0, 5], [3, 7], [1, 2]] {
        let mut level = vec![true; expected.n()];
        for v in drop {
            level[v] = false;
        }
        stack.push_induced(&keep_bits(&level)).unwrap();
        expected = expected.induced(&level);
        keep = level;
    }
    assert_eq!(keep.len(), 16);
    let top = stack.top();
    let before: Vec<Vec<usize>> = (0..top.order()).map(|v| sorted_neighbours(&top, v)).collect();
    let untuned_hops = stack.hops();
    stack.toptune();
    let top = stack.top();
    let after: Vec<Vec<usize>> = (0..top.order()).map(|v| sorted_neighbours(&top, v)).collect();
    assert_eq!(before, after);
    assert!(same_graph(&top, &expected));
    assert!(untuned_hops > 0);
}

#[test]
fn minimal_stack_with_empty_separator_is_induced() {
    let og = gen::grid(3, 3);
    let g = to_graph(&og);
    let mut stack = MinimalStack::new(&g, 10);
    // the whole graph minus nothing: every vertex complete
    stack.push(&BitVec::ones(9), &BitVec::new(9)).unwrap();
    assert_eq!(stack.top().incomplete_count(), 0);
    assert!(same_graph(&stack.top(), &og));
}

#[test]
fn minimal_stack_on_a_cycle() {
    // C5 keeping the first three vertices; the two ends lose a neighbour
    let og = gen::cycle(5);
    let g = to_graph(&og);
    let mut stack = MinimalStack::new(&g, 10);
    stack.push(&BitVec::from_positions(5, [0, 1, 2]), &BitVec::from_positions(5, [0, 2])).unwrap();
    let top = stack.top();
    assert_eq!(top.incomplete().collect::<Vec<_>>(), [0, 2]);
    assert_eq!(sorted_neighbours(&top, 0), [1]);
    assert_eq!(sorted_neighbours(&top, 1), [0, 2]);
}

#[test]
fn minimal_stack_matrix_edges() {
    let og = gen::complete(4);
    let g = to_graph(&og);
    let mut stack = MinimalStack::new(&g, 10);
    stack.push(&BitVec::from_positions(4, [0, 1, 2]), &BitVec::from_positions(4, [0, 1])).unwrap();
    let top = stack.top();
    assert!(top.is_restricted(0));
    assert_eq!(sorted_neighbours(&top, 0), [1, 2]);
    assert!(stack.top_matrix().get(0, 1));
}

#[test]
fn minimal_stack_limits_incomplete_vertices() {
    let g = to_graph(&gen::star(6));
    let mut stack = MinimalStack::new(&g, 2);
    // dropping the centre leaves six incomplete leaves
    let keep = BitVec::from_positions(7, 1..7);
    assert!(stack.push(&keep, &BitVec::new(7)).is_err());
}

fn graph_and_levels() -> impl Strategy<Value = (OracleGraph, Vec<Vec<bool>>)> {
    (any::<u64>(), 4usize..40).prop_map(|(seed, n)| {
        let mut rng = gen::rng(seed);
        let g = gen::gnp(n, rng.gen_range(0.05..0.4), &mut rng);
        let mut size = n;
        let mut levels = Vec::new();
        for _ in 0..3 {
            let level: Vec<bool> = (0..size).map(|_| rng.gen_bool(0.8)).collect();
            size = level.iter().filter(|&&b| b).count();
            levels.push(level);
        }
        (g, levels)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn gr_round_trip(seed in any::<u64>(), n in 1usize..60) {
        let og = gen::gnp(n, 0.15, &mut gen::rng(seed));
        let g = parse_gr(&og.to_gr()).unwrap();
        prop_assert_eq!(to_oracle(&g), og);
        prop_assert!((0..g.n()).all(|v| g.neighbors(v).windows(2).all(|w| w[0] < w[1])));
    }

    #[test]
    fn stack_levels_equal_induced_subgraphs((og, levels) in graph_and_levels()) {
        let g = to_graph(&og);
        let mut stack = SubgraphStack::new(&g);
        let mut minimal = MinimalStack::new(&g, og.n());
        let mut expected = og.clone();
        for level in &levels {
            let dropped_neighbour: Vec<bool> = (0..expected.n())
                .map(|v| level[v] && expected.neighbors(v).iter().any(|&w| !level[w]))
                .collect();
            stack.push_induced(&keep_bits(level)).unwrap();
            minimal.push(&keep_bits(level), &keep_bits(&dropped_neighbour)).unwrap();
            expected = expected.induced(level);
            prop_assert!(same_graph(&stack.top(), &expected));
            prop_assert!(same_graph(&minimal.top(), &expected));
            for v in 0..expected.n() {
                prop_assert_eq!(stack.top().from_root(stack.top().to_root(v)), Some(v));
                prop_assert_eq!(minimal.top().from_root(minimal.top().to_root(v)), Some(v));
            }
        }
        minimal.toptune();
        prop_assert!(same_graph(&minimal.top(), &expected));
        for _ in &levels {
            stack.pop().unwrap();
        }
        prop_assert!(same_graph(&stack.top(), &og));
    }
}
