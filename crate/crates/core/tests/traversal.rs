mod common;

use std::ops::ControlFlow;

use common::to_graph;
use proptest::prelude::*;
use spantd::graph::{Graph, GraphView, WithTerminals};
use spantd::traversal::{bfs, compute_r, dfs, dfs_forest, dfs_restricted, reachable, Dfs, DfsEvent, Undirected};
use spantd_oracle::gen;
use spantd_oracle::traversal::{reference_dfs, reference_r, Visit};

fn trace(g: &Graph, root: usize, capacity: Option<usize>) -> Vec<Visit> {
    let succ = Undirected::new(g);
    let mut d = Dfs::new(&succ);
    if let Some(c) = capacity {
        d = d.with_segment_capacity(c);
    }
    let mut out = Vec::new();
    let _ = d.run(root, &mut |e| {
        match e {
            DfsEvent::Pre { v, .. } => out.push(Visit::Pre(v)),
            DfsEvent::Post { v, .. } => out.push(Visit::Post(v)),
            DfsEvent::Back { .. } => {}
        }
        ControlFlow::Continue(())
    });
    out
}

#[test]
fn bfs_path_examples() {
    let g = to_graph(&gen::path(3));
    let mut seen = Vec::new();
    bfs(&g, &[0], |_| false, |v, layer| seen.push((v, layer)));
    assert_eq!(seen, vec![(0, 0), (1, 1), (2, 2)]);
    let mut seen = Vec::new();
    bfs(&g, &[0], |v| v == 1, |v, _| seen.push(v));
    assert_eq!(seen, vec![0]);
}

#[test]
fn bfs_matches_union_find_components() {
    let mut rng = gen::rng(11);
    for _ in 0..20 {
        let og = gen::gnp(20, 0.2, &mut rng);
        let g = to_graph(&og);
        for comp in og.components() {
            let r = reachable(&g, &[comp[0]], |_| false);
            let got: Vec<usize> = r.iter_ones().collect();
            assert_eq!(got, comp);
        }
    }
}

#[test]
fn bfs_layers_are_nondecreasing_distances() {
    let g = to_graph(&gen::grid(5, 6));
    let mut last = 0;
    bfs(&g, &[0], |_| false, |v, layer| {
        assert!(layer >= last);
        last = layer;
        assert_eq!(layer, v / 6 + v % 6);
    });
}

#[test]
fn dfs_small_examples() {
    let single = Graph::empty(1);
    assert_eq!(trace(&single, 0, None), vec![Visit::Pre(0), Visit::Post(0)]);
    let tri = to_graph(&gen::complete(3));
    let pre: Vec<usize> = trace(&tri, 0, None)
        .into_iter()
        .filter_map(|v| if let Visit::Pre(x) = v { Some(x) } else { None })
        .collect();
    assert_eq!(pre, vec![0, 1, 2]);
    let star = to_graph(&gen::star(4));
    let t = trace(&star, 0, None);
    let mut expected = vec![Visit::Pre(0)];
    for leaf in 1..=4 {
        expected.push(Visit::Pre(leaf));
        expected.push(Visit::Post(leaf));
    }
    expected.push(Visit::Post(0));
    assert_eq!(t, expected);
}

#[test]
fn restorations_are_invisible() {
    let mut rng = gen::rng(5);
    for i in 0..30 {
        let og = if i % 2 == 0 { gen::partial_ktree(120, 3, 0.3, &mut rng) } else { gen::path(150) };
        let g = to_graph(&og);
        let expected = reference_dfs(&og, 0);
        for cap in [1, 2, 3, 7] {
            assert_eq!(trace(&g, 0, Some(cap)), expected, "capacity {cap}");
        }
    }
}

#[test]
fn deep_path_restores_segments() {
    let g = to_graph(&gen::path(200));
    let succ = Undirected::new(&g);
    let mut d = Dfs::new(&succ).with_segment_capacity(4);
    let _ = d.run(0, &mut |_| ControlFlow::Continue(()));
    assert!(d.stats().restorations > 0);
    assert_eq!(d.stats().visited, 200);
}

#[test]
fn dfs_visits_reachable_set() {
    let mut rng = gen::rng(77);
    for _ in 0..200 {
        let og = gen::gnp(25, 0.1, &mut rng);
        let g = to_graph(&og);
        let mut visited = vec![false; g.n()];
        dfs(&g, 3, |e| {
            if let DfsEvent::Pre { v, .. } = e {
                visited[v] = true;
            }
        });
        let r = reachable(&g, &[3], |_| false);
        assert!((0..g.n()).all(|v| visited[v] == r.get(v)));
    }
}

#[test]
fn forest_covers_every_vertex_once() {
    let og = gen::gnp(40, 0.05, &mut gen::rng(3));
    let g = to_graph(&og);
    let mut pre = vec![0; g.n()];
    dfs_forest(&g, |e| {
        if let DfsEvent::Pre { v, .. } = e {
            pre[v] += 1;
        }
    });
    assert!(pre.iter().all(|&c| c == 1));
}

#[test]
fn restricted_dfs_examples() {
    let c5 = to_graph(&gen::cycle(5));
    let plain = trace(&c5, 0, None);
    let mut none = Vec::new();
    dfs_restricted(&c5, 0, None, |e| match e {
        DfsEvent::Pre { v, .. } => none.push(Visit::Pre(v)),
        DfsEvent::Post { v, .. } => none.push(Visit::Post(v)),
        _ => {}
    });
    assert_eq!(none, plain);

    // terminals make vertices restricted; the view has 7 vertices
    let sources = [2usize];
    let view = WithTerminals::new(&c5, &sources, &[]);
    assert!(view.is_restricted(2));
    let mut count = 0;
    let stats = dfs_restricted(&view, 0, Some(1), |e| {
        if let DfsEvent::Pre { .. } = e {
            count += 1;
        }
    });
    assert_eq!(count, 6, "C5 plus the source terminal");
    // each restricted list is walked at most once plus its end
    let lists: u64 = [2usize, view.source()].iter().map(|&v| view.degree(v) as u64 + 1).sum();
    assert!(stats.restricted_steps <= 2 * lists, "{} steps", stats.restricted_steps);

    let two = to_graph(&spantd_oracle::OracleGraph::from_edges(4, &[(0, 1), (2, 3)]));
    let mut seen = Vec::new();
    dfs_restricted(&two, 0, None, |e| {
        if let DfsEvent::Pre { v, .. } = e {
            seen.push(v);
        }
    });
    assert_eq!(seen, vec![0, 1]);
}

#[test]
fn compute_r_examples() {
    let p3 = to_graph(&gen::path(3));
    assert_eq!(compute_r(&p3, 10).count_ones(), 0);
    let p10 = to_graph(&gen::path(10));
    let r: Vec<usize> = compute_r(&p10, 3).iter_ones().collect();
    let expected: Vec<usize> = reference_r(&gen::path(10), 3).iter().enumerate().filter(|p| *p.1).map(|p| p.0).collect();
    assert_eq!(r, expected);
    assert_eq!(r, vec![2, 6]);
    let star = to_graph(&gen::star(9));
    let r: Vec<usize> = compute_r(&star, 5).iter_ones().collect();
    assert_eq!(r, vec![0]);
}

fn random_tree(n: usize, seed: u64) -> spantd_oracle::OracleGraph {
    use rand::Rng;
    let mut rng = gen::rng(seed);
    let edges: Vec<_> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    spantd_oracle::OracleGraph::from_edges(n, &edges)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn compute_r_matches_count_and_reset(n in 1usize..500, seed in any::<u64>(), threshold in 1usize..40) {
        let og = random_tree(n, seed);
        let g = to_graph(&og);
        let got: Vec<bool> = { let b = compute_r(&g, threshold); (0..n).map(|v| b.get(v)).collect() };
        prop_assert_eq!(&got, &reference_r(&og, threshold));
        prop_assert!(got.iter().filter(|&&b| b).count() <= n.div_ceil(threshold) + 1);
    }

    #[test]
    fn compute_r_on_forests(n in 1usize..80, p in 0.0f64..0.1, seed in any::<u64>(), threshold in 1usize..10) {
        let og = gen::gnp(n, p, &mut gen::rng(seed));
        let g = to_graph(&og);
        let b = compute_r(&g, threshold);
        let got: Vec<bool> = (0..n).map(|v| b.get(v)).collect();
        prop_assert_eq!(got, reference_r(&og, threshold));
    }

    #[test]
    fn segmented_dfs_equals_recursive(n in 2usize..150, seed in any::<u64>(), cap in 1usize..6) {
        let og = gen::partial_ktree(n, 2, 0.2, &mut gen::rng(seed));
        let g = to_graph(&og);
        prop_assert_eq!(trace(&g, 0, Some(cap)), reference_dfs(&og, 0));
    }
}
