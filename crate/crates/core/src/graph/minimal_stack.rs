use std::cell::Cell;

use thiserror::Error;

use super::{Graph, GraphView, Pointer, Vertex};
use crate::budget::Tracked;
use crate::succinct::{BitVec, RankSelect};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StackError {
    #[error("bit vector of length {got} where {expected} was expected")]
    Malformed { expected: usize, got: usize },
    #[error("arc of vertex {0} leads to a dropped vertex")]
    DanglingArc(usize),
    #[error("{count} incomplete vertices exceed the limit of {limit}")]
    TooManyIncomplete { count: usize, limit: usize },
    #[error("cannot pop the root graph")]
    Empty,
}

/// Square bit matrix over incomplete-vertex ranks.
#[derive(Clone, Debug, Default)]
pub struct BitMatrix {
    side: usize,
    bits: BitVec,
}

impl BitMatrix {
    pub fn new(side: usize) -> Self {
        BitMatrix { side, bits: BitVec::new(side * side) }
    }

    pub fn side(&self) -> usize {
        self.side
    }

    pub fn get(&self, a: usize, b: usize) -> bool {
        self.bits.get(a * self.side + b)
    }

    pub fn set_sym(&mut self, a: usize, b: usize) {
        self.bits.set(a * self.side + b);
        self.bits.set(b * self.side + a);
    }

    pub fn size_in_bits(&self) -> u64 {
        self.bits.size_in_bits()
    }
}

struct MinLevel {
    /// Surviving vertices of the parent level (absent for the root).
    vertices: Option<RankSelect>,
    incomplete: RankSelect,
    matrix: BitMatrix,
    _bits: Tracked,
}

/// Subgraph stack that stores vertex sets only.
///
/// A vertex of a level is complete when it kept every neighbour it has in the
/// root graph; its adjacency array is the root's, translated. Incomplete
/// vertices are access-restricted: their lists combine a scan for complete
/// neighbours with a per-level bit matrix of edges between incomplete
/// vertices. Every level is an induced subgraph of the root.
pub struct MinimalStack<'g> {
    root: &'g Graph,
    levels: Vec<MinLevel>,
    /// Top membership in root coordinates, built by `toptune`.
    tuned: Option<(RankSelect, Tracked)>,
    incomplete_limit: usize,
    hops: Cell<u64>,
}

const MATRIX_TAG: Pointer = 1 << 62;

impl<'g> MinimalStack<'g> {
    pub fn new(root: &'g Graph, incomplete_limit: usize) -> Self {
        let incomplete = RankSelect::new(BitVec::new(root.n()));
        let bits = Tracked::new("graph.minimal_stack", incomplete.size_in_bits());
        let level = MinLevel { vertices: None, incomplete, matrix: BitMatrix::new(0), _bits: bits };
        MinimalStack { root, levels: vec![level], tuned: None, incomplete_limit, hops: Cell::new(0) }
    }

    pub fn root(&self) -> &'g Graph {
        self.root
    }

    /// Pushed levels above the root.
    pub fn depth(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn hops(&self) -> u64 {
        self.hops.get()
    }

    /// Push the subgraph induced by `keep`. `separator` names the vertices of
    /// the current top expected to lose neighbours; vertices that lose
    /// neighbours anyway are still detected and marked incomplete.
    pub fn push(&mut self, keep: &BitVec, separator: &BitVec) -> Result<(), StackError> {
        let top = self.top();
        let n = top.order();
        if keep.len() != n || separator.len() != n {
            return Err(StackError::Malformed { expected: n, got: keep.len() });
        }
        let keep_rs = RankSelect::new(keep.clone());
        let n_new = keep_rs.count_ones();
        let mut inc_bits = BitVec::new(n_new);
        let mut newly = Vec::new();
        for v in keep.iter_ones() {
            let nv = keep_rs.rank1(v);
            if top.is_restricted(v) {
                inc_bits.set(nv);
            } else if (0..top.degree(v)).any(|j| !keep.get(top.head(v, j))) {
                if !separator.get(v) {
                    log::debug!("vertex {v} loses neighbours without being a separator vertex");
                }
                inc_bits.set(nv);
                newly.push(v);
            }
        }
        let incomplete = RankSelect::new(inc_bits);
        let count = incomplete.count_ones();
        if count > self.incomplete_limit {
            return Err(StackError::TooManyIncomplete { count, limit: self.incomplete_limit });
        }
        let mut matrix = BitMatrix::new(count);
        let old = self.levels.last().unwrap();
        // edges among vertices that were already incomplete
        for a in 0..old.matrix.side() {
            let va = old.incomplete.select1(a);
            if !keep.get(va) {
                continue;
            }
            for b in a + 1..old.matrix.side() {
                let vb = old.incomplete.select1(b);
                if keep.get(vb) && old.matrix.get(a, b) {
                    let ra = incomplete.rank1(keep_rs.rank1(va));
                    let rb = incomplete.rank1(keep_rs.rank1(vb));
                    matrix.set_sym(ra, rb);
                }
            }
        }
        // edges at vertices that just became incomplete (complete one level down)
        for &v in &newly {
            let rv = incomplete.rank1(keep_rs.rank1(v));
            for j in 0..top.degree(v) {
                let u = top.head(v, j);
                if keep.get(u) && incomplete.get(keep_rs.rank1(u)) {
                    let ru = incomplete.rank1(keep_rs.rank1(u));
                    matrix.set_sym(rv, ru);
                }
            }
        }
        let bits = keep_rs.size_in_bits() + incomplete.size_in_bits() + matrix.size_in_bits();
        let level = MinLevel {
            vertices: Some(keep_rs),
            incomplete,
            matrix,
            _bits: Tracked::new("graph.minimal_stack", bits),
        };
        self.levels.push(level);
        self.tuned = None;
        Ok(())
    }

    pub fn pop(&mut self) -> Result<(), StackError> {
        if self.levels.len() == 1 {
            return Err(StackError::Empty);
        }
        self.levels.pop();
        self.tuned = None;
        Ok(())
    }

    /// Build the root-coordinate membership of the top so translations take
    /// one rank or select instead of a walk over all levels.
    pub fn toptune(&mut self) {
        if self.levels.len() == 1 {
            self.tuned = None;
            return;
        }
        let n = self.root.n();
        let mut members = RankSelect::new(BitVec::ones(n));
        for lvl in &self.levels[1..] {
            let keep = lvl.vertices.as_ref().unwrap();
            let mut next = BitVec::new(n);
            for (i, u) in members.bits().iter_ones().enumerate() {
                if keep.get(i) {
                    next.set(u);
                }
            }
            members = RankSelect::new(next);
        }
        let bits = Tracked::new("graph.minimal_stack.tuned", members.size_in_bits());
        self.tuned = Some((members, bits));
    }

    pub fn is_tuned(&self) -> bool {
        self.tuned.is_some() || self.levels.len() == 1
    }

    pub fn top(&self) -> MinimalTop<'_, 'g> {
        MinimalTop { stack: self }
    }

    /// Matrix of edges between incomplete vertices of the top.
    pub fn top_matrix(&self) -> &BitMatrix {
        &self.levels.last().unwrap().matrix
    }
}

/// The top graph of a [`MinimalStack`].
#[derive(Clone, Copy)]
pub struct MinimalTop<'s, 'g> {
    stack: &'s MinimalStack<'g>,
}

impl MinimalTop<'_, '_> {
    fn level(&self) -> &MinLevel {
        self.stack.levels.last().unwrap()
    }

    fn hop(&self) {
        self.stack.hops.set(self.stack.hops.get() + 1);
    }

    /// Root id of a top vertex.
    pub fn to_root(&self, v: Vertex) -> Vertex {
        if let Some((m, _)) = &self.stack.tuned {
            return m.select1(v);
        }
        let mut v = v;
        for lvl in self.stack.levels[1..].iter().rev() {
            self.hop();
            v = lvl.vertices.as_ref().unwrap().select1(v);
        }
        v
    }

    /// Top id of a root vertex, if present.
    pub fn from_root(&self, u: Vertex) -> Option<Vertex> {
        if let Some((m, _)) = &self.stack.tuned {
            return m.get(u).then(|| m.rank1(u));
        }
        let mut v = u;
        for lvl in &self.stack.levels[1..] {
            self.hop();
            let keep = lvl.vertices.as_ref().unwrap();
            if !keep.get(v) {
                return None;
            }
            v = keep.rank1(v);
        }
        Some(v)
    }

    pub fn incomplete_count(&self) -> usize {
        self.level().incomplete.count_ones()
    }

    /// Incomplete vertices of the top, ascending.
    pub fn incomplete(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.level().incomplete.bits().iter_ones()
    }

    /// Complete neighbours of incomplete `v` are found either by scanning its
    /// root adjacency (when that is short) or by scanning all complete
    /// vertices of the top and testing adjacency in the root.
    fn scan_root_list(&self, v: Vertex) -> bool {
        self.stack.root.degree(self.to_root(v)) <= self.order()
    }

    /// Next complete neighbour of incomplete `v` at scan position >= `from`.
    fn complete_from(&self, v: Vertex, from: u64) -> Option<Pointer> {
        let g = self.stack.root;
        let rv = self.to_root(v);
        let inc = &self.level().incomplete;
        if self.scan_root_list(v) {
            let adj = g.neighbors(rv);
            (from as usize..adj.len())
                .find(|&j| self.from_root(adj[j] as usize).is_some_and(|u| !inc.get(u)))
                .map(|j| j as Pointer)
        } else {
            (from as usize..self.order())
                .find(|&u| !inc.get(u) && g.has_edge(self.to_root(u), rv))
                .map(|u| u as Pointer)
        }
    }

    fn matrix_from(&self, v: Vertex, from: usize) -> Option<Pointer> {
        let lvl = self.level();
        let rv = lvl.incomplete.rank1(v);
        (from..lvl.matrix.side()).find(|&b| lvl.matrix.get(rv, b)).map(|b| MATRIX_TAG | b as Pointer)
    }
}

impl GraphView for MinimalTop<'_, '_> {
    fn order(&self) -> usize {
        match &self.level().vertices {
            Some(rs) => rs.count_ones(),
            None => self.stack.root.n(),
        }
    }

    fn is_restricted(&self, v: Vertex) -> bool {
        self.level().incomplete.get(v)
    }

    fn degree(&self, v: Vertex) -> usize {
        if self.is_restricted(v) {
            super::neighbors(self, v).count()
        } else {
            self.stack.root.degree(self.to_root(v))
        }
    }

    fn head(&self, v: Vertex, j: usize) -> Vertex {
        debug_assert!(!self.is_restricted(v), "array access on incomplete vertex {v}");
        let u = self.stack.root.head(self.to_root(v), j);
        self.from_root(u).expect("complete vertex has a neighbour outside the level")
    }

    fn adj_first(&self, v: Vertex) -> Option<Pointer> {
        if !self.is_restricted(v) {
            return (self.degree(v) > 0).then_some(0);
        }
        self.complete_from(v, 0).or_else(|| self.matrix_from(v, 0))
    }

    fn adj_next(&self, v: Vertex, p: Pointer) -> Option<Pointer> {
        if !self.is_restricted(v) {
            let q = p + 1;
            return ((q as usize) < self.degree(v)).then_some(q);
        }
        if p & MATRIX_TAG != 0 {
            return self.matrix_from(v, (p & !MATRIX_TAG) as usize + 1);
        }
        self.complete_from(v, p + 1).or_else(|| self.matrix_from(v, 0))
    }

    fn adj_head(&self, v: Vertex, p: Pointer) -> Vertex {
        if !self.is_restricted(v) {
            return self.head(v, p as usize);
        }
        if p & MATRIX_TAG != 0 {
            return self.level().incomplete.select1((p & !MATRIX_TAG) as usize);
        }
        if self.scan_root_list(v) {
            let u = self.stack.root.head(self.to_root(v), p as usize);
            self.from_root(u).expect("scan only yields present vertices")
        } else {
            p as Vertex
        }
    }
}
