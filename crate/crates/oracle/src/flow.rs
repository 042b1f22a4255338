//! Vertex-disjoint paths by plain max-flow on the split graph.

use std::collections::VecDeque;

use crate::OracleGraph;

struct Net {
    head: Vec<usize>,
    cap: Vec<i64>,
    adj: Vec<Vec<usize>>,
}

impl Net {
    fn new(n: usize) -> Self {
        Net { head: Vec::new(), cap: Vec::new(), adj: vec![Vec::new(); n] }
    }

    fn arc(&mut self, u: usize, v: usize, c: i64) {
        self.adj[u].push(self.head.len());
        self.head.push(v);
        self.cap.push(c);
        self.adj[v].push(self.head.len());
        self.head.push(u);
        self.cap.push(0);
    }

    fn maxflow(&mut self, s: usize, t: usize, limit: i64) -> i64 {
        let mut flow = 0;
        while flow < limit {
            let mut pred = vec![usize::MAX; self.adj.len()];
            let mut q = VecDeque::from([s]);
            pred[s] = usize::MAX - 1;
            while let Some(u) = q.pop_front() {
                for &e in &self.adj[u] {
                    let v = self.head[e];
                    if self.cap[e] > 0 && pred[v] == usize::MAX {
                        pred[v] = e;
                        q.push_back(v);
                    }
                }
            }
            if pred[t] == usize::MAX {
                break;
            }
            let mut v = t;
            while v != s {
                let e = pred[v];
                self.cap[e] -= 1;
                self.cap[e ^ 1] += 1;
                v = self.head[e ^ 1];
            }
            flow += 1;
        }
        flow
    }
}

const INF: i64 = 1 << 40;

/// Maximum number of internally vertex-disjoint `s`-`t` paths, with one
/// family attaining it. A direct edge `{s, t}` counts as the path `[s, t]`.
pub fn maxflow_disjoint(g: &OracleGraph, s: usize, t: usize) -> (usize, Vec<Vec<usize>>) {
    maxflow_disjoint_avoiding(g, s, t, &vec![false; g.n()])
}

/// As [`maxflow_disjoint`], never using vertices marked in `removed`.
pub fn maxflow_disjoint_avoiding(g: &OracleGraph, s: usize, t: usize, removed: &[bool]) -> (usize, Vec<Vec<usize>>) {
    assert_ne!(s, t);
    let n = g.n();
    let mut net = Net::new(2 * n);
    for v in 0..n {
        let c = if v == s || v == t { INF } else if removed[v] { 0 } else { 1 };
        net.arc(v, v + n, c);
    }
    for (u, v) in g.edges() {
        net.arc(u + n, v, 1);
        net.arc(v + n, u, 1);
    }
    let count = net.maxflow(s + n, t, INF) as usize;
    // decompose
    let mut used = vec![0i64; net.head.len()];
    for e in (0..net.head.len()).step_by(2) {
        used[e] = net.cap[e ^ 1];
    }
    let mut paths = Vec::new();
    for _ in 0..count {
        let mut path = vec![s];
        let mut x = s + n;
        while x != t {
            let e = *net.adj[x]
                .iter()
                .find(|&&e| e % 2 == 0 && used[e] > 0)
                .expect("flow conservation");
            used[e] -= 1;
            x = net.head[e];
            if x < n {
                path.push(x);
                if x != t {
                    let e2 = net.adj[x].iter().copied().find(|&e2| e2 % 2 == 0 && net.head[e2] == x + n).unwrap();
                    used[e2] -= 1;
                    x += n;
                }
            }
        }
        paths.push(path);
    }
    (count, paths)
}

/// Maximum number of vertex-disjoint paths from the set `from` to the set
/// `to` (endpoints included in disjointness) avoiding `removed`.
pub fn max_set_paths(g: &OracleGraph, from: &[usize], to: &[usize], removed: &[bool]) -> usize {
    let n = g.n();
    let (src, snk) = (2 * n, 2 * n + 1);
    let mut net = Net::new(2 * n + 2);
    for v in 0..n {
        net.arc(v, v + n, if removed[v] { 0 } else { 1 });
    }
    for (u, v) in g.edges() {
        net.arc(u + n, v, 1);
        net.arc(v + n, u, 1);
    }
    for &a in from {
        net.arc(src, a, 1);
    }
    for &b in to {
        net.arc(b + n, snk, 1);
    }
    net.maxflow(src, snk, INF) as usize
}

/// Smallest vertex set avoiding `s`, `t` whose removal disconnects them, by
/// exhaustive search in order of size. `None` when `s` and `t` are adjacent.
pub fn min_vertex_cut_brute(g: &OracleGraph, s: usize, t: usize) -> Option<usize> {
    if g.has_edge(s, t) {
        return None;
    }
    let others: Vec<usize> = (0..g.n()).filter(|&v| v != s && v != t).collect();
    for size in 0..=others.len() {
        let mut found = false;
        for_each_subset(&others, size, &mut |sub| {
            if found {
                return;
            }
            let mut removed = vec![false; g.n()];
            for &v in sub {
                removed[v] = true;
            }
            if !g.connected_avoiding(s, t, &removed) {
                found = true;
            }
        });
        if found {
            return Some(size);
        }
    }
    None
}

/// Calls `f` with every `size`-subset of `items`.
pub fn for_each_subset(items: &[usize], size: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(items: &[usize], size: usize, start: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if cur.len() == size {
            f(cur);
            return;
        }
        for i in start..items.len() {
            if items.len() - i < size - cur.len() {
                break;
            }
            cur.push(items[i]);
            rec(items, size, i + 1, cur, f);
            cur.pop();
        }
    }
    rec(items, size, 0, &mut Vec::new(), f);
}
