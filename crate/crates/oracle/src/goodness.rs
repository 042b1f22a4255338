//! Goodness of a family of internally vertex-disjoint s-t paths.
//!
//! A deadlock cycle runs over distinct paths P_1..P_r (r >= 2): on each P_i
//! a subpath x_i..y_i with x_i strictly before y_i (paths oriented from s to
//! t) and an edge {x_i, y_(i+1 mod r)}. It is simple when every subpath has
//! exactly two vertices and extended otherwise.

use crate::OracleGraph;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GoodnessReport {
    pub disjoint: bool,
    pub chordless: bool,
    pub no_extended_deadlock: bool,
}

impl GoodnessReport {
    pub fn all(&self) -> bool {
        self.disjoint && self.chordless && self.no_extended_deadlock
    }
}

/// Check `paths` (each a full vertex sequence from s to t).
pub fn goodness_verify(g: &OracleGraph, paths: &[Vec<usize>]) -> GoodnessReport {
    let n = g.n();
    let mut owner = vec![usize::MAX; n];
    let mut pos = vec![0usize; n];
    let mut disjoint = true;
    for (i, p) in paths.iter().enumerate() {
        if p.len() < 2 {
            disjoint = false;
            continue;
        }
        for (j, &v) in p[1..p.len() - 1].iter().enumerate() {
            if owner[v] != usize::MAX {
                disjoint = false;
            }
            owner[v] = i;
            pos[v] = j;
        }
    }
    let mut chordless = true;
    for p in paths {
        let (s, t) = (p[0], p[p.len() - 1]);
        for a in 0..p.len() {
            for b in a + 2..p.len() {
                if (p[a], p[b]) != (s, t) && g.has_edge(p[a], p[b]) {
                    chordless = false;
                }
            }
        }
    }
    let no_extended_deadlock = !disjoint || !has_extended_deadlock(g, paths, &owner, &pos);
    GoodnessReport { disjoint, chordless, no_extended_deadlock }
}

fn has_extended_deadlock(g: &OracleGraph, paths: &[Vec<usize>], owner: &[usize], pos: &[usize]) -> bool {
    let inner: Vec<&[usize]> = paths.iter().map(|p| &p[1..p.len() - 1]).collect();
    let r = inner.len();
    if r < 2 {
        return false;
    }
    // Search from every entry vertex y_1 on every first path; the first path
    // of the cycle is the smallest index so each cycle is found from it.
    for first in 0..r {
        for (y1_pos, _) in inner[first].iter().enumerate() {
            let mut seen = std::collections::HashSet::new();
            if search(g, &inner, owner, pos, first, y1_pos, first, y1_pos, 1u64 << first, false, &mut seen) {
                return true;
            }
        }
    }
    false
}

/// At `path`, entered at position `y`. Choose x < y on it, then either close
/// the cycle into (first, y1) or jump into an unused path with larger index.
#[allow(clippy::too_many_arguments)]
fn search(
    g: &OracleGraph,
    inner: &[&[usize]],
    owner: &[usize],
    pos: &[usize],
    first: usize,
    y1: usize,
    path: usize,
    y: usize,
    used: u64,
    extended: bool,
    seen: &mut std::collections::HashSet<(usize, usize, u64, bool)>,
) -> bool {
    if !seen.insert((path, y, used, extended)) {
        return false;
    }
    for x in 0..y {
        let ext = extended || y - x >= 2;
        let xv = inner[path][x];
        for &w in g.neighbors(xv) {
            let o = owner[w];
            if o == usize::MAX || o == path {
                continue;
            }
            if o == first && pos[w] == y1 && used.count_ones() >= 2 && ext {
                return true;
            }
            if o > first && used & (1 << o) == 0 && search(g, inner, owner, pos, first, y1, o, pos[w], used | (1 << o), ext, seen) {
                return true;
            }
        }
    }
    false
}
