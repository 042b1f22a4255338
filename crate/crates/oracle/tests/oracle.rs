use proptest::prelude::*;
use rand::Rng;
use spantd_oracle::flow::{for_each_subset, max_set_paths, maxflow_disjoint, min_vertex_cut_brute};
use spantd_oracle::goodness::goodness_verify;
use spantd_oracle::solve::{brute_solve, cut_value, is_dominating, is_proper_coloring, OracleProblem};
use spantd_oracle::td::{td_validate, Decomposition};
use spantd_oracle::traversal::{reference_dfs, reference_r, Visit};
use spantd_oracle::treewidth::brute_treewidth;
use spantd_oracle::{gen, OracleError, OracleGraph};

fn arbitrary_graph(max_n: usize) -> impl Strategy<Value = OracleGraph> {
    (any::<u64>(), 2..=max_n).prop_map(|(seed, n)| {
        let mut rng = gen::rng(seed);
        let p = rng.gen_range(0.1..0.7);
        gen::gnp(n, p, &mut rng)
    })
}

#[test]
fn gr_round_trip_and_errors() {
    let g = OracleGraph::parse_gr("c comment\np tw 4 3\n1 2\n2 3\n3 4\n").unwrap();
    assert_eq!(g.edges(), vec![(0, 1), (1, 2), (2, 3)]);
    assert_eq!(OracleGraph::parse_gr(&g.to_gr()).unwrap(), g);
    assert!(OracleGraph::parse_gr("p tw 2 1\n1 3\n").is_err());
    assert!(OracleGraph::parse_gr("1 2\n").is_err());
    assert!(OracleGraph::parse_gr("p tw 3 2\n1 2\n").is_err());
}

#[test]
fn components_without_removed_vertices() {
    let g = gen::path(5);
    let mut removed = vec![false; 5];
    removed[2] = true;
    assert_eq!(g.components_without(&removed), vec![vec![0, 1], vec![3, 4]]);
}

#[test]
fn menger_examples() {
    // adjacent terminals: the edge itself plus one path through each other vertex
    assert_eq!(maxflow_disjoint(&gen::complete(4), 0, 3).0, 3);
    assert_eq!(maxflow_disjoint(&gen::path(6), 0, 5).0, 1);
    let two_pieces = OracleGraph::from_edges(4, &[(0, 1), (2, 3)]);
    assert_eq!(maxflow_disjoint(&two_pieces, 0, 3).0, 0);
    assert_eq!(maxflow_disjoint(&gen::grid(3, 3), 0, 8).0, 2);
}

#[test]
fn set_paths_count_endpoints() {
    let g = gen::path(4);
    // on a path every route from 0 runs through 1 and 2
    assert_eq!(max_set_paths(&g, &[0, 1], &[2, 3], &[false; 4]), 1);
    assert_eq!(max_set_paths(&gen::cycle(4), &[0, 1], &[2, 3], &[false; 4]), 2);
    assert_eq!(max_set_paths(&g, &[0], &[3], &[false, true, false, false]), 0);
}

#[test]
fn subsets_are_enumerated_once() {
    let mut seen = Vec::new();
    for_each_subset(&[1, 2, 3, 4], 2, &mut |s| seen.push(s.to_vec()));
    assert_eq!(seen, vec![vec![1, 2], vec![1, 3], vec![1, 4], vec![2, 3], vec![2, 4], vec![3, 4]]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn flow_agrees_with_cut_enumeration(g in arbitrary_graph(10)) {
        let (s, t) = (0, g.n() - 1);
        let (count, paths) = maxflow_disjoint(&g, s, t);
        prop_assert_eq!(paths.len(), count);
        for p in &paths {
            prop_assert_eq!((p[0], p[p.len() - 1]), (s, t));
            prop_assert!(p.windows(2).all(|w| g.has_edge(w[0], w[1])));
        }
        if let Some(cut) = min_vertex_cut_brute(&g, s, t) {
            prop_assert_eq!(count, cut);
        }
    }

    #[test]
    fn partial_ktrees_respect_their_width(seed in any::<u64>(), n in 1usize..=12, k in 1usize..=4) {
        let mut rng = gen::rng(seed);
        let g = gen::partial_ktree(n, k, 0.3, &mut rng);
        prop_assert!(brute_treewidth(&g).unwrap() <= k);
    }

    #[test]
    fn covers_complement_independent_sets(g in arbitrary_graph(12)) {
        let cover = brute_solve(&g, OracleProblem::VertexCover).unwrap();
        let independent = brute_solve(&g, OracleProblem::IndependentSet).unwrap();
        prop_assert_eq!(cover + independent, g.n() as i64);
    }

    #[test]
    fn dfs_trace_is_balanced(g in arbitrary_graph(12)) {
        let trace = reference_dfs(&g, 0);
        let pre = trace.iter().filter(|v| matches!(v, Visit::Pre(_))).count();
        let post = trace.iter().filter(|v| matches!(v, Visit::Post(_))).count();
        prop_assert_eq!(pre, post);
        prop_assert_eq!(pre, g.components().iter().find(|c| c.contains(&0)).unwrap().len());
    }
}

#[test]
fn treewidth_of_known_families() {
    assert_eq!(brute_treewidth(&gen::star(6)).unwrap(), 1);
    assert_eq!(brute_treewidth(&gen::path(9)).unwrap(), 1);
    assert_eq!(brute_treewidth(&gen::cycle(8)).unwrap(), 2);
    assert_eq!(brute_treewidth(&gen::complete(5)).unwrap(), 4);
    assert_eq!(brute_treewidth(&gen::grid(3, 3)).unwrap(), 3);
    assert_eq!(brute_treewidth(&OracleGraph::new(3)).unwrap(), 0);
    assert!(matches!(brute_treewidth(&gen::path(40)), Err(OracleError::TooLarge { .. })));
}

#[test]
fn problem_values_by_hand() {
    let vc = |g: &OracleGraph| brute_solve(g, OracleProblem::VertexCover).unwrap();
    assert_eq!(vc(&gen::complete(4)), 3);
    assert_eq!(brute_solve(&gen::cycle(4), OracleProblem::MaxCut).unwrap(), 4);
    assert_eq!(brute_solve(&gen::star(5), OracleProblem::DominatingSet).unwrap(), 1);
    assert_eq!(brute_solve(&gen::cycle(5), OracleProblem::Coloring(2)).unwrap(), 0);
    assert_eq!(brute_solve(&gen::cycle(5), OracleProblem::Coloring(3)).unwrap(), 1);
    assert_eq!(brute_solve(&gen::petersen(), OracleProblem::IndependentSet).unwrap(), 4);
    assert!(brute_solve(&gen::path(25), OracleProblem::MaxCut).is_err());
}

#[test]
fn witness_predicates() {
    let c4 = gen::cycle(4);
    assert_eq!(cut_value(&c4, &[true, false, true, false]), 4);
    assert!(is_dominating(&c4, &[true, false, true, false]));
    assert!(!is_dominating(&c4, &[true, false, false, false]));
    assert!(is_proper_coloring(&c4, &[0, 1, 0, 1], 2));
    assert!(!is_proper_coloring(&c4, &[0, 1, 0, 2], 2));
}

/// s = 0, t = 7; P1 = 0 1 2 3 7 and P2 = 0 4 5 6 7.
fn two_paths(extra: &[(usize, usize)]) -> (OracleGraph, Vec<Vec<usize>>) {
    let mut edges = vec![(0, 1), (1, 2), (2, 3), (3, 7), (0, 4), (4, 5), (5, 6), (6, 7)];
    edges.extend_from_slice(extra);
    (OracleGraph::from_edges(8, &edges), vec![vec![0, 1, 2, 3, 7], vec![0, 4, 5, 6, 7]])
}

#[test]
fn parallel_paths_are_good() {
    let (g, paths) = two_paths(&[]);
    assert!(goodness_verify(&g, &paths).all());
}

#[test]
fn simple_deadlock_is_allowed() {
    // subpaths 1..2 and 4..5 crossed by edges {1,5} and {4,2}
    let (g, paths) = two_paths(&[(1, 5), (4, 2)]);
    let report = goodness_verify(&g, &paths);
    assert!(report.disjoint && report.chordless && report.no_extended_deadlock);
}

#[test]
fn extended_deadlock_is_found() {
    // subpath 4..6 has three vertices: edges {1,6} and {4,2}
    let (g, paths) = two_paths(&[(1, 6), (4, 2)]);
    let report = goodness_verify(&g, &paths);
    assert!(report.disjoint && report.chordless);
    assert!(!report.no_extended_deadlock);
}

#[test]
fn chords_and_overlaps_fail() {
    let (g, paths) = two_paths(&[(1, 3)]);
    assert!(!goodness_verify(&g, &paths).chordless);
    let (g, _) = two_paths(&[(1, 5)]);
    let overlapping = vec![vec![0, 1, 5, 6, 7], vec![0, 4, 5, 6, 7]];
    assert!(!goodness_verify(&g, &overlapping).disjoint);
}

const P4_TD: &str = "s td 3 2 4\nb 1 2 3\nb 2 1 2\nb 3 3 4\n1 2\n1 3\n";

#[test]
fn hand_decomposition_of_a_path() {
    let td = Decomposition::parse(P4_TD).unwrap();
    assert_eq!(td.width(), 1);
    let report = td_validate(&td, &gen::path(4), 1, 1);
    assert!(report.all(), "{report:?}");
}

#[test]
fn missing_edge_breaks_coverage() {
    let td = Decomposition::parse("s td 3 2 4\nb 1 2 3\nb 2 1 2\nb 3 4\n1 2\n1 3\n").unwrap();
    let report = td_validate(&td, &gen::path(4), 1, 1);
    assert!(report.covers_vertices && !report.covers_edges && !report.td1());
}

#[test]
fn split_occurrences_break_connectedness() {
    // vertex 1 sits in bags 2 and 3, which only meet through bag 1
    let td = Decomposition::parse("s td 3 2 4\nb 1 2 3\nb 2 1 2\nb 3 3 4 1\n1 2\n1 3\n").unwrap();
    let report = td_validate(&td, &gen::path(4), 3, 1);
    assert!(report.td1() && !report.connected_occurrences);
}

#[test]
fn shape_limits() {
    let star_td = "s td 4 1 4\nb 1 1\nb 2 2\nb 3 3\nb 4 4\n1 2\n1 3\n1 4\n";
    let report = td_validate(&Decomposition::parse(star_td).unwrap(), &OracleGraph::new(4), 0, 1);
    assert!(!report.binary && report.height_ok);
    let chain = "s td 3 1 3\nb 1 1\nb 2 2\nb 3 3\n1 2\n2 3\n";
    let report = td_validate(&Decomposition::parse(chain).unwrap(), &OracleGraph::new(3), 0, 1);
    assert!(report.binary && !report.height_ok);
    let forest = "s td 2 1 2\nb 1 1\nb 2 2\n";
    assert!(!td_validate(&Decomposition::parse(forest).unwrap(), &OracleGraph::new(2), 0, 1).is_tree);
}

#[test]
fn malformed_decompositions() {
    assert!(Decomposition::parse("b 1 1\n").is_err());
    assert!(Decomposition::parse("s td 1 1 1\nb 2 1\n").is_err());
    assert!(Decomposition::parse("s td 1 1 1\nb 1 5\n").is_err());
    assert!(Decomposition::parse("c nothing\n").is_err());
}

#[test]
fn count_and_reset_examples() {
    // rooted at vertex 0; counts reach 4 at vertices 6 and 2
    let marked: Vec<usize> = (0..10).filter(|&v| reference_r(&gen::path(10), 3)[v]).collect();
    assert_eq!(marked, vec![2, 6]);
    let marked: Vec<usize> = (0..10).filter(|&v| reference_r(&gen::star(9), 5)[v]).collect();
    assert_eq!(marked, vec![0]);
    assert!(reference_r(&gen::path(3), 10).iter().all(|&m| !m));
}

#[test]
fn generators() {
    assert_eq!(gen::path(5).edges(), vec![(0, 1), (1, 2), (2, 3), (3, 4)]);
    assert_eq!(gen::cycle(6).m(), 6);
    assert_eq!(gen::grid(3, 4).m(), 3 * 3 + 2 * 4);
    assert_eq!(gen::petersen().m(), 15);
    let a = gen::partial_ktree(50, 3, 0.2, &mut gen::rng(11));
    assert_eq!(a, gen::partial_ktree(50, 3, 0.2, &mut gen::rng(11)));
    // a full 3-tree on n vertices has 3n - 6 edges
    let full = gen::partial_ktree(50, 3, 0.0, &mut gen::rng(11));
    assert_eq!(full.m(), 3 * 50 - 6);
    assert_eq!(full.components().len(), 1);
}
