use std::collections::BTreeSet;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("instance too large for brute force: {n} > {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("malformed decomposition: {0}")]
    Malformed(String),
}

/// Plain adjacency-list graph with sorted neighbour lists, 0-based.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OracleGraph {
    adj: Vec<Vec<usize>>,
}

impl OracleGraph {
    pub fn new(n: usize) -> Self {
        OracleGraph { adj: vec![Vec::new(); n] }
    }

    /// Duplicates and loops are ignored here; use [`parse_gr`](Self::parse_gr)
    /// for strict loading.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = OracleGraph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        if u == v || self.has_edge(u, v) {
            return;
        }
        let pos = self.adj[u].binary_search(&v).unwrap_err();
        self.adj[u].insert(pos, v);
        let pos = self.adj[v].binary_search(&u).unwrap_err();
        self.adj[v].insert(pos, u);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        if let Ok(p) = self.adj[u].binary_search(&v) {
            self.adj[u].remove(p);
        }
        if let Ok(p) = self.adj[v].binary_search(&u) {
            self.adj[v].remove(p);
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (u, list) in self.adj.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| u < v).map(|&v| (u, v)));
        }
        out
    }

    /// Strict PACE `.gr` reader (1-indexed input, 0-based result).
    pub fn parse_gr(text: &str) -> Result<Self, OracleError> {
        let err = |line: usize, m: &str| OracleError::Parse { line, message: m.to_string() };
        let mut g: Option<OracleGraph> = None;
        let mut announced = 0;
        let mut seen = BTreeSet::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let t = raw.trim();
            if t.is_empty() || t.starts_with('c') {
                continue;
            }
            let f: Vec<&str> = t.split_whitespace().collect();
            if f[0] == "p" {
                if g.is_some() || f.len() != 4 || f[1] != "tw" {
                    return Err(err(line, "bad header"));
                }
                let n = f[2].parse().map_err(|_| err(line, "bad n"))?;
                announced = f[3].parse().map_err(|_| err(line, "bad m"))?;
                g = Some(OracleGraph::new(n));
                continue;
            }
            let gr = g.as_mut().ok_or_else(|| err(line, "edge before header"))?;
            if f.len() != 2 {
                return Err(err(line, "bad edge line"));
            }
            let u: usize = f[0].parse().map_err(|_| err(line, "bad vertex"))?;
            let v: usize = f[1].parse().map_err(|_| err(line, "bad vertex"))?;
            if u == 0 || v == 0 || u > gr.n() || v > gr.n() {
                return Err(err(line, "vertex out of range"));
            }
            if u == v {
                return Err(err(line, "self-loop"));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(err(line, "duplicate edge"));
            }
            gr.add_edge(u - 1, v - 1);
        }
        let g = g.ok_or_else(|| err(0, "missing header"))?;
        if g.m() != announced {
            return Err(err(0, "edge count mismatch"));
        }
        Ok(g)
    }

    pub fn to_gr(&self) -> String {
        let mut s = format!("p tw {} {}\n", self.n(), self.m());
        for (u, v) in self.edges() {
            s.push_str(&format!("{} {}\n", u + 1, v + 1));
        }
        s
    }

    /// Subgraph induced by `keep`, with vertices renumbered in ascending order.
    pub fn induced(&self, keep: &[bool]) -> OracleGraph {
        let mut id = vec![usize::MAX; self.n()];
        let mut next = 0;
        for v in 0..self.n() {
            if keep[v] {
                id[v] = next;
                next += 1;
            }
        }
        let mut g = OracleGraph::new(next);
        for (u, v) in self.edges() {
            if keep[u] && keep[v] {
                g.add_edge(id[u], id[v]);
            }
        }
        g
    }

    /// Connected components of the graph minus `removed`, each sorted.
    pub fn components_without(&self, removed: &[bool]) -> Vec<Vec<usize>> {
        let mut uf = UnionFind::new(self.n());
        for (u, v) in self.edges() {
            if !removed[u] && !removed[v] {
                uf.union(u, v);
            }
        }
        let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for v in 0..self.n() {
            if !removed[v] {
                groups.entry(uf.find(v)).or_default().push(v);
            }
        }
        let mut out: Vec<Vec<usize>> = groups.into_values().collect();
        out.sort();
        out
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_without(&vec![false; self.n()])
    }

    /// Whether `t` is reachable from `s` avoiding `removed`.
    pub fn connected_avoiding(&self, s: usize, t: usize, removed: &[bool]) -> bool {
        if removed[s] || removed[t] {
            return false;
        }
        let mut seen = vec![false; self.n()];
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(v) = stack.pop() {
            if v == t {
                return true;
            }
            for &w in &self.adj[v] {
                if !seen[w] && !removed[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        false
    }
}

/// Union-find with path halving.
pub struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}
