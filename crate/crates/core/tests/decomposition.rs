mod common;

use common::to_graph;
use proptest::prelude::*;
use rand::Rng;
use spantd::decomposition::{
    collect_td, component_extremes, emit_td, has_dense_core, leaf_limit, write_td, ComponentFinder,
    DecompositionError, TdIterator,
};
use spantd::graph::Graph;
use spantd::succinct::BitVec;
use spantd_oracle::td::{td_validate, Decomposition};
use spantd_oracle::{gen, OracleGraph};

fn components(g: &Graph, removed: &BitVec) -> Vec<Vec<usize>> {
    let mut finder = ComponentFinder::new(g, removed);
    let mut out = Vec::new();
    while finder.next() {
        let c = finder.show();
        let mut vs: Vec<usize> = c.vertices.iter().collect();
        vs.sort_unstable();
        assert_eq!(vs.len(), c.size);
        assert_eq!(vs[0], c.start);
        out.push(vs);
    }
    out
}

fn height_bound(n: usize) -> usize {
    (3.0 * (n.max(2) as f64).log2() + 2.0).floor() as usize
}

fn validate(og: &OracleGraph, text: &str, k: usize) {
    let td = Decomposition::parse(text).expect("well-formed .td");
    let report = td_validate(&td, og, leaf_limit(k), height_bound(og.n()));
    assert!(report.all(), "{report:?}");
}

#[test]
fn finder_lists_two_triangles() {
    let g = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
    assert_eq!(components(&g, &BitVec::new(6)), vec![vec![0, 1, 2], vec![3, 4, 5]]);
}

#[test]
fn finder_skips_removed_vertices() {
    let g = to_graph(&gen::cycle(6));
    let removed = BitVec::from_positions(6, [0, 3]);
    assert_eq!(components(&g, &removed), vec![vec![1, 2], vec![4, 5]]);
    assert_eq!(component_extremes(&g, &removed, Some(&BitVec::from_positions(6, [4, 5]))), (2, 2));
}

#[test]
fn finder_with_everything_removed_is_empty() {
    let g = to_graph(&gen::complete(4));
    assert!(components(&g, &BitVec::ones(4)).is_empty());
    assert_eq!(component_extremes(&g, &BitVec::ones(4), None), (0, 0));
}

#[test]
fn dense_core_detects_cliques() {
    assert!(has_dense_core(&to_graph(&gen::complete(5)), 3));
    assert!(!has_dense_core(&to_graph(&gen::complete(5)), 4));
    assert!(!has_dense_core(&to_graph(&gen::path(20)), 1));
    assert!(has_dense_core(&to_graph(&gen::cycle(20)), 1));
}

#[test]
fn triangle_is_a_single_leaf() {
    let og = gen::cycle(3);
    let td = collect_td(&to_graph(&og), 2).unwrap();
    assert_eq!(td.to_td_string(), "s td 1 3 3\nb 1 1 2 3\n");
    assert_eq!((td.height, td.width()), (0, 2));
}

#[test]
fn empty_graph_has_one_empty_bag() {
    let td = collect_td(&Graph::from_edges(0, &[]).unwrap(), 1).unwrap();
    assert_eq!(td.to_td_string(), "s td 1 0 0\nb 1\n");
}

#[test]
fn long_path_decomposes() {
    let og = gen::path(20);
    let td = collect_td(&to_graph(&og), 1).unwrap();
    assert!(td.bags.len() > 1);
    validate(&og, &td.to_td_string(), 1);
}

#[test]
fn clique_is_rejected() {
    let g = to_graph(&gen::complete(5));
    assert!(matches!(collect_td(&g, 1), Err(DecompositionError::TreewidthExceeded(1))));
    assert!(matches!(TdIterator::new(&g, 3), Err(DecompositionError::TreewidthExceeded(3))));
    assert!(matches!(TdIterator::new(&g, 0), Err(DecompositionError::ZeroWidth)));
}

#[test]
fn grid_beyond_width_is_rejected() {
    // the 8x8 grid has treewidth 8 but minimum degree 2
    let g = to_graph(&gen::grid(8, 8));
    assert!(!has_dense_core(&g, 2));
    assert!(matches!(collect_td(&g, 2), Err(DecompositionError::TreewidthExceeded(2))));
}

#[test]
fn euler_tour_revisits_each_parent() {
    let og = gen::partial_ktree(120, 2, 0.2, &mut gen::rng(5));
    let g = to_graph(&og);
    let mut it = TdIterator::new(&g, 2).unwrap();
    let mut arrivals = 0;
    let mut returns = 0;
    let mut chain: Vec<usize> = Vec::new();
    while it.next().unwrap() {
        let v = it.show().unwrap();
        if v.first {
            assert_eq!(v.node, arrivals);
            assert_eq!(v.parent, chain.last().copied());
            chain.push(v.node);
            arrivals += 1;
        } else {
            returns += 1;
            chain.truncate(v.depth + 1);
            assert_eq!(chain.last(), Some(&v.node));
        }
        assert_eq!(v.depth + 1, chain.len());
        if v.leaf && v.first {
            chain.pop();
        }
    }
    assert_eq!(returns, arrivals - 1);
    assert_eq!(it.node_count(), arrivals);
    assert!(it.show().is_none());
    assert!(!it.next().unwrap());
}

#[test]
fn emitted_document_matches_collected() {
    let og = gen::partial_ktree(90, 3, 0.1, &mut gen::rng(8));
    let g = to_graph(&og);
    let mut out = Vec::new();
    let summary = emit_td(&mut TdIterator::new(&g, 3).unwrap(), &mut out).unwrap();
    let td = collect_td(&g, 3).unwrap();
    assert_eq!(String::from_utf8(out).unwrap(), td.to_td_string());
    assert_eq!((summary.bags, summary.max_bag, summary.height), (td.bags.len(), td.max_bag(), td.height));
}

#[test]
fn write_is_atomic() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("good.td");
    let og = gen::partial_ktree(40, 2, 0.0, &mut gen::rng(3));
    write_td(&to_graph(&og), 2, &good).unwrap();
    validate(&og, &std::fs::read_to_string(&good).unwrap(), 2);

    let bad = dir.path().join("bad.td");
    let err = write_td(&to_graph(&gen::grid(8, 8)), 2, &bad).unwrap_err();
    assert!(matches!(err, DecompositionError::TreewidthExceeded(2)));
    assert!(!bad.exists());
    let left: Vec<_> = std::fs::read_dir(dir.path()).unwrap().map(|e| e.unwrap().file_name()).collect();
    assert_eq!(left, vec![std::ffi::OsString::from("good.td")]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn finder_matches_oracle_components(seed in any::<u64>(), n in 1usize..40) {
        let mut rng = gen::rng(seed);
        let og = gen::gnp(n, 0.08, &mut rng);
        let removed: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.2)).collect();
        let bits = BitVec::from_positions(n, (0..n).filter(|&v| removed[v]));
        prop_assert_eq!(components(&to_graph(&og), &bits), og.components_without(&removed));
    }

    #[test]
    fn decompositions_validate(seed in any::<u64>(), k in 1usize..=3, n in 2usize..=150) {
        let mut rng = gen::rng(seed);
        let og = gen::partial_ktree(n, k, rng.gen_range(0.0..0.4), &mut rng);
        let td = collect_td(&to_graph(&og), k).unwrap();
        validate(&og, &td.to_td_string(), k);
        prop_assert!(td.edges.iter().all(|&(p, c)| p < c));
    }

    #[test]
    fn bag_edges_match_induced_subgraph(seed in any::<u64>(), k in 1usize..=3, n in 2usize..=120) {
        let mut rng = gen::rng(seed);
        let og = gen::partial_ktree(n, k, rng.gen_range(0.0..0.4), &mut rng);
        let g = to_graph(&og);
        let mut it = TdIterator::new(&g, k).unwrap();
        while it.next().unwrap() {
            let bag = it.bag();
            prop_assert_eq!(bag.len(), it.bag_len());
            let mut expected = Vec::new();
            for (i, &a) in bag.iter().enumerate() {
                for &b in &bag[i + 1..] {
                    if og.has_edge(a, b) {
                        expected.push((a, b));
                    }
                }
            }
            let mut got = it.bag_edges();
            got.sort_unstable();
            expected.sort_unstable();
            prop_assert_eq!(got, expected);
        }
    }
}
