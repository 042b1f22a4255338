//! Reference traversals.

use crate::OracleGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Visit {
    Pre(usize),
    Post(usize),
}

/// Recursive DFS trace from `root`, neighbours in ascending order.
pub fn reference_dfs(g: &OracleGraph, root: usize) -> Vec<Visit> {
    fn rec(g: &OracleGraph, v: usize, seen: &mut [bool], out: &mut Vec<Visit>) {
        seen[v] = true;
        out.push(Visit::Pre(v));
        for &w in g.neighbors(v) {
            if !seen[w] {
                rec(g, w, seen, out);
            }
        }
        out.push(Visit::Post(v));
    }
    let mut out = Vec::new();
    rec(g, root, &mut vec![false; g.n()], &mut out);
    out
}

/// DFS forest parents (roots ascending); `usize::MAX` marks a root.
pub fn dfs_forest_parents(g: &OracleGraph) -> Vec<usize> {
    let mut parent = vec![usize::MAX; g.n()];
    let mut seen = vec![false; g.n()];
    fn rec(g: &OracleGraph, v: usize, seen: &mut [bool], parent: &mut [usize]) {
        seen[v] = true;
        for &w in g.neighbors(v) {
            if !seen[w] {
                parent[w] = v;
                rec(g, w, seen, parent);
            }
        }
    }
    for r in 0..g.n() {
        if !seen[r] {
            rec(g, r, &mut seen, &mut parent);
        }
    }
    parent
}

/// Count-and-reset over the DFS forest: a vertex is marked when its own
/// count (one plus the counts returned by its children) exceeds
/// `threshold`, and then reports zero to its parent.
pub fn reference_r(g: &OracleGraph, threshold: usize) -> Vec<bool> {
    let parent = dfs_forest_parents(g);
    let n = g.n();
    let mut children = vec![Vec::new(); n];
    for v in 0..n {
        if parent[v] != usize::MAX {
            children[parent[v]].push(v);
        }
    }
    fn count(v: usize, children: &[Vec<usize>], t: usize, marked: &mut [bool]) -> usize {
        let c = 1 + children[v].iter().map(|&w| count(w, children, t, marked)).sum::<usize>();
        if c > t {
            marked[v] = true;
            0
        } else {
            c
        }
    }
    let mut marked = vec![false; n];
    for v in 0..n {
        if parent[v] == usize::MAX {
            count(v, &children, threshold, &mut marked);
        }
    }
    marked
}
