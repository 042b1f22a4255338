//! PACE `.td` reader and tree-decomposition audit.

use std::collections::VecDeque;

use crate::{OracleError, OracleGraph};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Decomposition {
    /// Announced width + 1.
    pub announced_bag_size: usize,
    pub announced_n: usize,
    /// Bags with 0-based vertices; bag `i` has file id `i + 1`.
    pub bags: Vec<Vec<usize>>,
    /// Tree edges between 0-based bag indices.
    pub edges: Vec<(usize, usize)>,
}

impl Decomposition {
    pub fn parse(text: &str) -> Result<Self, OracleError> {
        let bad = |m: String| OracleError::Malformed(m);
        let mut td = Decomposition::default();
        let mut count = None;
        for (i, raw) in text.lines().enumerate() {
            let t = raw.trim();
            if t.is_empty() || t.starts_with('c') {
                continue;
            }
            let f: Vec<&str> = t.split_whitespace().collect();
            let num = |s: &str| s.parse::<usize>().map_err(|_| bad(format!("line {}: bad number `{s}`", i + 1)));
            match f[0] {
                "s" => {
                    if f.len() != 5 || f[1] != "td" || count.is_some() {
                        return Err(bad(format!("line {}: bad solution line", i + 1)));
                    }
                    let nb = num(f[2])?;
                    td.announced_bag_size = num(f[3])?;
                    td.announced_n = num(f[4])?;
                    td.bags = vec![Vec::new(); nb];
                    count = Some(nb);
                }
                "b" => {
                    let nb = count.ok_or_else(|| bad("bag before solution line".into()))?;
                    let id = num(f.get(1).ok_or_else(|| bad("missing bag id".into()))?)?;
                    if id == 0 || id > nb {
                        return Err(bad(format!("bag id {id} out of range")));
                    }
                    for s in &f[2..] {
                        let v = num(s)?;
                        if v == 0 || v > td.announced_n {
                            return Err(bad(format!("vertex {v} out of range")));
                        }
                        td.bags[id - 1].push(v - 1);
                    }
                }
                _ => {
                    let nb = count.ok_or_else(|| bad("edge before solution line".into()))?;
                    if f.len() != 2 {
                        return Err(bad(format!("line {}: bad edge", i + 1)));
                    }
                    let (a, b) = (num(f[0])?, num(f[1])?);
                    if a == 0 || b == 0 || a > nb || b > nb {
                        return Err(bad(format!("tree edge {a} {b} out of range")));
                    }
                    td.edges.push((a - 1, b - 1));
                }
            }
        }
        count.ok_or_else(|| bad("missing solution line".into()))?;
        Ok(td)
    }

    pub fn width(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(0).saturating_sub(1)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TdReport {
    pub is_tree: bool,
    pub covers_vertices: bool,
    pub covers_edges: bool,
    pub connected_occurrences: bool,
    pub width: usize,
    pub width_ok: bool,
    pub binary: bool,
    pub height: usize,
    pub height_ok: bool,
}

impl TdReport {
    pub fn td1(&self) -> bool {
        self.covers_vertices && self.covers_edges
    }

    pub fn all(&self) -> bool {
        self.is_tree && self.td1() && self.connected_occurrences && self.width_ok && self.binary && self.height_ok
    }
}

/// Audit `td` against `g`: tree shape, TD1, TD2, width `<= max_width`,
/// binary when rooted at bag 1, and height `<= max_height`.
pub fn td_validate(td: &Decomposition, g: &OracleGraph, max_width: usize, max_height: usize) -> TdReport {
    let nb = td.bags.len();
    let mut adj = vec![Vec::new(); nb];
    for &(a, b) in &td.edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut depth = vec![usize::MAX; nb];
    let mut is_tree = nb > 0 && td.edges.len() + 1 == nb;
    let mut binary = true;
    if nb > 0 {
        depth[0] = 0;
        let mut q = VecDeque::from([0]);
        while let Some(x) = q.pop_front() {
            let children = adj[x].iter().filter(|&&y| depth[y] == usize::MAX).count();
            if children > 2 {
                binary = false;
            }
            for &y in &adj[x] {
                if depth[y] == usize::MAX {
                    depth[y] = depth[x] + 1;
                    q.push_back(y);
                }
            }
        }
        if depth.contains(&usize::MAX) {
            is_tree = false;
        }
    }
    let height = depth.iter().filter(|&&d| d != usize::MAX).max().copied().unwrap_or(0);

    let n = g.n();
    let mut where_: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut in_range = td.announced_n == n;
    for (i, bag) in td.bags.iter().enumerate() {
        for &v in bag {
            if v < n {
                where_[v].push(i);
            } else {
                in_range = false;
            }
        }
    }
    let covers_vertices = in_range && where_.iter().all(|w| !w.is_empty());
    let covers_edges = in_range
        && g.edges().iter().all(|&(u, v)| td.bags.iter().any(|b| b.contains(&u) && b.contains(&v)));
    let connected_occurrences = where_.iter().all(|occ| {
        if occ.is_empty() {
            return true;
        }
        let member: std::collections::HashSet<usize> = occ.iter().copied().collect();
        let mut seen = std::collections::HashSet::from([occ[0]]);
        let mut stack = vec![occ[0]];
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if member.contains(&y) && seen.insert(y) {
                    stack.push(y);
                }
            }
        }
        seen.len() == member.len()
    });
    let width = td.width();
    TdReport {
        is_tree,
        covers_vertices,
        covers_edges,
        connected_occurrences,
        width,
        width_ok: width <= max_width && td.announced_bag_size == width + 1,
        binary,
        height,
        height_ok: height <= max_height,
    }
}
