mod common;

use common::to_graph;
use proptest::prelude::*;
use rand::Rng;
use spantd::graph::Graph;
use spantd::paths::{
    find_chordless_path, max_disjoint_paths, region_paths, residual_view, scheme_from_single_path, st_separator,
    stride, PathsEngine, PathsError, Terminals,
};
use spantd::succinct::BitVec;
use spantd_oracle::flow::{maxflow_disjoint, min_vertex_cut_brute};
use spantd_oracle::goodness::goodness_verify;
use spantd_oracle::{gen, OracleGraph};

fn graph(n: usize, edges: &[(usize, usize)]) -> (OracleGraph, Graph) {
    let og = OracleGraph::from_edges(n, edges);
    let g = to_graph(&og);
    (og, g)
}

/// Run the engine step by step, checking goodness and the stored family
/// after every added path. Returns the final count.
fn checked_run(og: &OracleGraph, g: &Graph, s: usize, t: usize, k: usize) -> usize {
    let inst = Terminals::new(g, s, t).unwrap();
    let mut engine = PathsEngine::new(inst, k);
    loop {
        let paths = engine.witness().paths(&inst).unwrap();
        assert_eq!(paths.len(), engine.witness().count());
        for p in &paths {
            assert_eq!((p[0], p[p.len() - 1]), (s, t));
            for w in p.windows(2) {
                assert!(og.has_edge(w[0], w[1]), "{p:?} is not a path");
            }
        }
        let report = goodness_verify(og, &paths);
        assert!(report.all(), "{report:?} for {paths:?}");
        if !engine.step().unwrap() {
            break;
        }
    }
    engine.witness().count()
}

#[test]
fn residual_view_examples() {
    let (_, g) = graph(2, &[(0, 1)]);
    let r = residual_view(&g);
    assert_eq!(r.out_degree(0), 1);
    assert_eq!(r.out_head(0, 0), 2);
    assert_eq!(r.out_degree(2), 1);
    assert_eq!(r.out_head(2, 0), 1);
    let lone = Graph::empty(1);
    let r = residual_view(&lone);
    assert_eq!((r.out_degree(0), r.out_head(0, 0), r.out_degree(1)), (1, 1, 0));
    let tri = to_graph(&gen::complete(3));
    assert_eq!(residual_view(&tri).arc_count(), 9);
}

#[test]
fn chordless_path_examples() {
    let (_, g) = graph(2, &[(0, 1)]);
    let p = find_chordless_path(&g, 0, 1, |_, _| false).unwrap();
    assert_eq!(p.internal_len(), 0);
    assert_eq!(p.vertices(&g), vec![0, 1]);
    // s=0, a=1, b=2, t=3, chord {a, t}
    let (_, g) = graph(4, &[(0, 1), (1, 2), (2, 3), (1, 3)]);
    let p = find_chordless_path(&g, 0, 3, |_, _| false).unwrap();
    assert_eq!(p.vertices(&g), vec![0, 1, 3]);
    assert_eq!(p.label(1), 1);
    assert_eq!(p.label(2), 0);
    let (_, g) = graph(4, &[(0, 1), (2, 3)]);
    assert!(find_chordless_path(&g, 0, 3, |_, _| false).is_none());
}

#[test]
fn chordless_paths_are_chordless() {
    let mut rng = gen::rng(21);
    for _ in 0..200 {
        let og = gen::gnp(18, 0.25, &mut rng);
        let g = to_graph(&og);
        let (s, t) = (0, 17);
        match find_chordless_path(&g, s, t, |_, _| false) {
            Some(p) => {
                let vs = p.vertices(&g);
                assert!(goodness_verify(&og, &[vs]).chordless);
            }
            None => assert_eq!(maxflow_disjoint(&og, s, t).0, 0),
        }
    }
}

#[test]
fn region_paths_examples() {
    let (_, g) = graph(1, &[]);
    assert_eq!(region_paths(&g, &[0], &[0], &[0], |_, _| true).unwrap(), vec![vec![0]]);
    let (_, g) = graph(3, &[(0, 1), (1, 2)]);
    assert_eq!(region_paths(&g, &[0, 1, 2], &[0], &[2], |_, _| true).unwrap(), vec![vec![0, 1, 2]]);
    // 2x3 grid: 0 1 2 / 3 4 5
    let og = gen::grid(2, 3);
    let g = to_graph(&og);
    let region: Vec<usize> = (0..6).collect();
    let first = region_paths(&g, &region, &[0, 3], &[2, 5], |_, _| true).unwrap();
    assert_eq!(first.len(), 2);
    for _ in 0..5 {
        assert_eq!(region_paths(&g, &region, &[0, 3], &[2, 5], |_, _| true).unwrap(), first);
    }
    let mut seen = [false; 6];
    for p in &first {
        for &v in p {
            assert!(!seen[v]);
            seen[v] = true;
        }
    }
    assert!(matches!(
        region_paths(&g, &[0, 1, 2], &[0, 1], &[2, 2], |_, _| true),
        Err(PathsError::RegionFlow { .. })
    ));
}

#[test]
fn single_path_scheme_examples() {
    // s=0, internal 1 2 3, t=4
    let (_, g) = graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]);
    let inst = Terminals::new(&g, 0, 4).unwrap();
    let p = find_chordless_path(&g, 0, 4, |_, _| false).unwrap();
    assert_eq!(stride(2), 2);
    let sch = scheme_from_single_path(&inst, &p, 2);
    assert_eq!(sch.boundary().iter_ones().collect::<Vec<_>>(), vec![2]);
    assert_eq!(sch.next(&inst, 1).unwrap(), 2);
    assert_eq!(sch.prev(&inst, 2).unwrap(), 1);
    assert_eq!(sch.color(&inst, 1).unwrap(), 1);
    assert_eq!(sch.stored_color(2), Some(1));
    assert!(sch.color(&inst, 0).is_err());

    let (_, g) = graph(2, &[(0, 1)]);
    let inst = Terminals::new(&g, 0, 1).unwrap();
    let p = find_chordless_path(&g, 0, 1, |_, _| false).unwrap();
    let sch = scheme_from_single_path(&inst, &p, 2);
    assert_eq!(sch.boundary().count_ones(), 0);
    assert_eq!(sch.count(), 0);

    // hub 2 of degree 6 on the path 0-1-2-3-4
    let (_, g) = graph(8, &[(0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (2, 6), (2, 7), (5, 6)]);
    let inst = Terminals::new(&g, 0, 4).unwrap();
    let p = find_chordless_path(&g, 0, 4, |_, _| false).unwrap();
    let sch = scheme_from_single_path(&inst, &p, 1);
    assert!(g.degree(2) > stride(1));
    assert!(sch.is_boundary(2));
}

#[test]
fn cycle_six_colors_partition_sides() {
    let og = gen::cycle(6);
    let g = to_graph(&og);
    let inst = Terminals::new(&g, 0, 3).unwrap();
    let w = max_disjoint_paths(&g, 0, 3, 2).unwrap();
    assert_eq!(w.count(), 2);
    let sch = w.scheme();
    let c: Vec<usize> = [1, 2, 4, 5].iter().map(|&v| sch.color(&inst, v).unwrap()).collect();
    assert_eq!(c[0], c[1]);
    assert_eq!(c[2], c[3]);
    assert_ne!(c[0], c[2]);
}

#[test]
fn engine_examples() {
    let k4 = to_graph(&gen::complete(4));
    assert_eq!(max_disjoint_paths(&k4, 0, 3, 3).unwrap().count(), 3);
    let p = to_graph(&gen::path(6));
    assert_eq!(max_disjoint_paths(&p, 0, 5, 3).unwrap().count(), 1);
    let (_, two) = graph(4, &[(0, 1), (2, 3)]);
    assert_eq!(max_disjoint_paths(&two, 0, 3, 3).unwrap().count(), 0);
    let c4 = gen::cycle(4);
    assert_eq!(checked_run(&c4, &to_graph(&c4), 0, 2, 2), 2);
    let grid = gen::grid(3, 3);
    assert_eq!(checked_run(&grid, &to_graph(&grid), 0, 8, 3), 2);
}

#[test]
fn augment_on_empty_family_matches_chordless_search() {
    use spantd::paths::{augment, WorkingFamily};
    let mut rng = gen::rng(4);
    for _ in 0..50 {
        let og = gen::partial_ktree(30, 3, 0.3, &mut rng);
        let g = to_graph(&og);
        let inst = Terminals::new(&g, 0, 29).unwrap();
        let engine = PathsEngine::new(inst, 1);
        if engine.witness().direct_edge() {
            continue;
        }
        let fam = WorkingFamily::expand(&inst, engine.witness().scheme()).unwrap();
        let res = spantd::paths::Residual::new(inst, &fam);
        let aug = augment(&inst, &fam).map(|a| a.vertices(&res));
        let direct = find_chordless_path(&g, 0, 29, |_, _| false).map(|p| p.vertices(&g));
        assert_eq!(aug, direct);
    }
}

#[test]
fn separator_examples() {
    let (_, p) = graph(3, &[(0, 1), (1, 2)]);
    let s = st_separator(Terminals::new(&p, 0, 2).unwrap(), 1).unwrap();
    assert_eq!(s.iter_ones().collect::<Vec<_>>(), vec![1]);
    let c4 = to_graph(&gen::cycle(4));
    let s = st_separator(Terminals::new(&c4, 0, 2).unwrap(), 2).unwrap();
    assert_eq!(s.iter_ones().collect::<Vec<_>>(), vec![1, 3]);
    let k4 = to_graph(&gen::complete(4));
    let s = st_separator(Terminals::new(&k4, 0, 3).unwrap(), 3).unwrap();
    assert_eq!(s.count_ones(), 3);
    assert!(matches!(
        st_separator(Terminals::new(&k4, 0, 3).unwrap(), 2),
        Err(PathsError::ConnectivityExceeds(2))
    ));
}

#[test]
fn removed_vertices_are_avoided() {
    let og = gen::cycle(6);
    let g = to_graph(&og);
    let removed = BitVec::from_positions(6, [1]);
    let inst = Terminals::new(&g, 0, 3).unwrap().with_removed(&removed);
    let w = PathsEngine::new(inst, 3).run().unwrap();
    assert_eq!(w.paths(&inst).unwrap(), vec![vec![0, 5, 4, 3]]);
}

fn random_instance(seed: u64, n_max: usize) -> (OracleGraph, usize, usize, usize) {
    let mut rng = gen::rng(seed);
    let k = rng.gen_range(1..=4);
    let n = rng.gen_range(k + 2..=n_max);
    let og = gen::partial_ktree(n, k, rng.gen_range(0.0..0.5), &mut rng);
    let s = rng.gen_range(0..n);
    let mut t = rng.gen_range(0..n - 1);
    if t >= s {
        t += 1;
    }
    (og, s, t, k)
}

#[test]
fn menger_agreement_small() {
    for seed in 0..150 {
        let (og, s, t, _) = random_instance(seed, 40);
        let g = to_graph(&og);
        let (flow, _) = maxflow_disjoint(&og, s, t);
        let got = checked_run(&og, &g, s, t, usize::MAX);
        assert_eq!(got, flow, "seed {seed}");
    }
}

#[test]
fn separators_match_min_cut() {
    for seed in 200..300 {
        let (og, s, t, _) = random_instance(seed, 14);
        if og.has_edge(s, t) {
            continue;
        }
        let g = to_graph(&og);
        let flow = maxflow_disjoint(&og, s, t).0;
        let cut = st_separator(Terminals::new(&g, s, t).unwrap(), flow.max(1)).unwrap();
        assert_eq!(Some(cut.count_ones()), min_vertex_cut_brute(&og, s, t), "seed {seed}");
        let removed: Vec<bool> = (0..g.n()).map(|v| cut.get(v)).collect();
        assert!(!og.connected_avoiding(s, t, &removed));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn dense_graphs_stay_good(n in 4usize..22, p in 0.15f64..0.6, seed in any::<u64>()) {
        let og = gen::gnp(n, p, &mut gen::rng(seed));
        let g = to_graph(&og);
        let got = checked_run(&og, &g, 0, n - 1, usize::MAX);
        prop_assert_eq!(got, maxflow_disjoint(&og, 0, n - 1).0);
    }

    #[test]
    fn k_caps_the_count(seed in any::<u64>(), k in 0usize..4) {
        let (og, s, t, _) = random_instance(seed, 30);
        let g = to_graph(&og);
        let w = max_disjoint_paths(&g, s, t, k).unwrap();
        prop_assert_eq!(w.count(), k.min(maxflow_disjoint(&og, s, t).0));
    }
}

#[test]
fn mixed_graphs_with_wide_flows() {
    for seed in 0..400u64 {
        let mut rng = gen::rng(seed);
        let k = rng.gen_range(1..=6);
        let n = rng.gen_range(k + 2..=40);
        let og = if seed % 3 == 0 {
            gen::gnp(n, rng.gen_range(0.1..0.7), &mut rng)
        } else {
            gen::partial_ktree(n, k, rng.gen_range(0.0..0.5), &mut rng)
        };
        let s = rng.gen_range(0..n);
        let t = (s + rng.gen_range(1..n)) % n;
        let g = to_graph(&og);
        assert_eq!(checked_run(&og, &g, s, t, usize::MAX), maxflow_disjoint(&og, s, t).0, "seed {seed}");
    }
}
