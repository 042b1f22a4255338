//! Seeded instance generators.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::OracleGraph;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn path(n: usize) -> OracleGraph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    OracleGraph::from_edges(n, &edges)
}

pub fn cycle(n: usize) -> OracleGraph {
    let mut g = path(n);
    if n >= 3 {
        g.add_edge(n - 1, 0);
    }
    g
}

pub fn complete(n: usize) -> OracleGraph {
    let mut g = OracleGraph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    g
}

/// Star with centre 0 and `leaves` leaves.
pub fn star(leaves: usize) -> OracleGraph {
    let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
    OracleGraph::from_edges(leaves + 1, &edges)
}

/// `rows x cols` grid, vertex `r * cols + c`.
pub fn grid(rows: usize, cols: usize) -> OracleGraph {
    let mut g = OracleGraph::new(rows * cols);
    for r in 0..rows {
        for c in 0..cols {
            let v = r * cols + c;
            if c + 1 < cols {
                g.add_edge(v, v + 1);
            }
            if r + 1 < rows {
                g.add_edge(v, v + cols);
            }
        }
    }
    g
}

pub fn petersen() -> OracleGraph {
    let mut g = OracleGraph::new(10);
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    g
}

pub fn gnp(n: usize, p: f64, rng: &mut impl Rng) -> OracleGraph {
    let mut g = OracleGraph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Random k-tree on `n` vertices with every edge deleted independently with
/// probability `drop`. Treewidth is at most `k` by construction. Vertex ids
/// are shuffled so the growth order is not visible in the numbering.
pub fn partial_ktree(n: usize, k: usize, drop: f64, rng: &mut impl Rng) -> OracleGraph {
    let mut edges = Vec::new();
    let base = (k + 1).min(n);
    for u in 0..base {
        for v in u + 1..base {
            edges.push((u, v));
        }
    }
    let mut cliques: Vec<Vec<usize>> = Vec::new();
    if n > k {
        cliques.push((0..=k).collect());
    }
    for v in base..n {
        let c = cliques[rng.gen_range(0..cliques.len())].clone();
        let skip = rng.gen_range(0..c.len());
        let attach: Vec<usize> = c.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &u)| u).collect();
        for &u in &attach {
            edges.push((u, v));
        }
        let mut nc = attach;
        nc.push(v);
        cliques.push(nc);
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let kept: Vec<_> = edges
        .into_iter()
        .filter(|_| !rng.gen_bool(drop))
        .map(|(u, v)| (perm[u], perm[v]))
        .collect();
    OracleGraph::from_edges(n, &kept)
}
