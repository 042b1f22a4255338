use std::cell::Cell;

use super::{Graph, GraphView, StackError, Vertex};
use crate::budget::Tracked;
use crate::succinct::{BitVec, IntVec, RankSelect};

struct Level {
    vertices: RankSelect,
    arcs: RankSelect,
    _bits: Tracked,
}

struct Tuned {
    offsets: IntVec,
    targets: IntVec,
    _bits: Tracked,
}

/// Stack of nested subgraphs of a root graph. Every level stores which
/// vertices and arcs of its parent survive; vertices and arcs are renamed
/// densely by rank. Without [`toptune`](Self::toptune), an access to the top
/// walks the translation chain down to the root.
pub struct SubgraphStack<'g> {
    root: &'g Graph,
    levels: Vec<Level>,
    tuned: Option<Tuned>,
    hops: Cell<u64>,
}

impl<'g> SubgraphStack<'g> {
    pub fn new(root: &'g Graph) -> Self {
        SubgraphStack { root, levels: Vec::new(), tuned: None, hops: Cell::new(0) }
    }

    pub fn root(&self) -> &'g Graph {
        self.root
    }

    /// Number of pushed levels; the root alone is depth 0.
    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    fn level_order(&self, i: usize) -> usize {
        if i == 0 {
            self.root.n()
        } else {
            self.levels[i - 1].vertices.count_ones()
        }
    }

    fn level_arcs(&self, i: usize) -> usize {
        if i == 0 {
            self.root.arc_count()
        } else {
            self.levels[i - 1].arcs.count_ones()
        }
    }

    /// Push the subgraph keeping the marked vertices and arcs of the top.
    /// Every kept arc must join two kept vertices, and arcs come in pairs.
    pub fn push(&mut self, keep_vertices: &BitVec, keep_arcs: &BitVec) -> Result<(), StackError> {
        let top = self.top();
        let n = top.order();
        let arcs = self.level_arcs(self.depth());
        if keep_vertices.len() != n || keep_arcs.len() != arcs {
            return Err(StackError::Malformed { expected: n, got: keep_vertices.len() });
        }
        for v in 0..n {
            let (start, end) = top.arc_range(v);
            for a in start..end {
                if keep_arcs.get(a) && !(keep_vertices.get(v) && keep_vertices.get(top.head(v, a - start))) {
                    return Err(StackError::DanglingArc(v));
                }
            }
        }
        let vertices = RankSelect::new(keep_vertices.clone());
        let arcs = RankSelect::new(keep_arcs.clone());
        let bits = Tracked::new("graph.stack", vertices.size_in_bits() + arcs.size_in_bits());
        self.levels.push(Level { vertices, arcs, _bits: bits });
        self.tuned = None;
        Ok(())
    }

    /// Push the subgraph induced by the marked vertices of the top.
    pub fn push_induced(&mut self, keep_vertices: &BitVec) -> Result<(), StackError> {
        let top = self.top();
        let mut arcs = BitVec::new(self.level_arcs(self.depth()));
        if keep_vertices.len() != top.order() {
            return Err(StackError::Malformed { expected: top.order(), got: keep_vertices.len() });
        }
        for v in 0..top.order() {
            if !keep_vertices.get(v) {
                continue;
            }
            let (start, end) = top.arc_range(v);
            for a in start..end {
                if keep_vertices.get(top.head(v, a - start)) {
                    arcs.set(a);
                }
            }
        }
        self.push(keep_vertices, &arcs)
    }

    pub fn pop(&mut self) -> Result<(), StackError> {
        self.levels.pop().ok_or(StackError::Empty)?;
        self.tuned = None;
        Ok(())
    }

    /// Materialize the adjacency arrays of the top so accesses stop walking
    /// the translation chain.
    pub fn toptune(&mut self) {
        if self.levels.is_empty() {
            self.tuned = None;
            return;
        }
        let top = self.top();
        let n = top.order();
        let arcs = self.level_arcs(self.depth());
        let mut offsets = IntVec::for_max(n + 1, arcs as u64);
        let mut targets = IntVec::for_max(arcs, n as u64);
        let mut at = 0usize;
        for v in 0..n {
            offsets.set(v, at as u64);
            for j in 0..top.degree(v) {
                targets.set(at, top.head(v, j) as u64);
                at += 1;
            }
        }
        offsets.set(n, at as u64);
        let bits = Tracked::new("graph.stack.tuned", offsets.size_in_bits() + targets.size_in_bits());
        self.tuned = Some(Tuned { offsets, targets, _bits: bits });
    }

    pub fn is_tuned(&self) -> bool {
        self.tuned.is_some() || self.levels.is_empty()
    }

    /// Translation steps taken so far by top-level accesses.
    pub fn hops(&self) -> u64 {
        self.hops.get()
    }

    pub fn top(&self) -> SubgraphTop<'_, 'g> {
        SubgraphTop { stack: self }
    }
}

/// The top graph of a [`SubgraphStack`].
#[derive(Clone, Copy)]
pub struct SubgraphTop<'s, 'g> {
    stack: &'s SubgraphStack<'g>,
}

impl SubgraphTop<'_, '_> {
    fn hop(&self) {
        self.stack.hops.set(self.stack.hops.get() + 1);
    }

    /// Range of level-local arc ids leaving `v` at level `i`.
    fn range_at(&self, i: usize, v: Vertex) -> (usize, usize) {
        if i == 0 {
            let g = self.stack.root;
            return (g.first_arc(v), g.first_arc(v) + g.degree(v));
        }
        self.hop();
        let lvl = &self.stack.levels[i - 1];
        let pv = lvl.vertices.select1(v);
        let (s, e) = self.range_at(i - 1, pv);
        (lvl.arcs.rank1(s), lvl.arcs.rank1(e))
    }

    fn root_arc(&self, i: usize, a: usize) -> usize {
        if i == 0 {
            return a;
        }
        self.hop();
        self.root_arc(i - 1, self.stack.levels[i - 1].arcs.select1(a))
    }

    fn down(&self, i: usize, u: Vertex) -> Vertex {
        let mut v = u;
        for lvl in &self.stack.levels[..i] {
            self.hop();
            v = lvl.vertices.rank1(v);
        }
        v
    }

    fn arc_range(&self, v: Vertex) -> (usize, usize) {
        if let Some(t) = &self.stack.tuned {
            return (t.offsets.get(v) as usize, t.offsets.get(v + 1) as usize);
        }
        self.range_at(self.stack.depth(), v)
    }

    /// Root id of a top vertex.
    pub fn to_root(&self, v: Vertex) -> Vertex {
        let mut v = v;
        for lvl in self.stack.levels.iter().rev() {
            v = lvl.vertices.select1(v);
        }
        v
    }

    /// Top id of a root vertex, if it survives.
    pub fn from_root(&self, u: Vertex) -> Option<Vertex> {
        let mut v = u;
        for lvl in &self.stack.levels {
            if !lvl.vertices.get(v) {
                return None;
            }
            v = lvl.vertices.rank1(v);
        }
        Some(v)
    }

    pub fn arc_count(&self) -> usize {
        self.stack.level_arcs(self.stack.depth())
    }
}

impl GraphView for SubgraphTop<'_, '_> {
    fn order(&self) -> usize {
        self.stack.level_order(self.stack.depth())
    }

    fn degree(&self, v: Vertex) -> usize {
        let (s, e) = self.arc_range(v);
        e - s
    }

    fn head(&self, v: Vertex, j: usize) -> Vertex {
        if let Some(t) = &self.stack.tuned {
            return t.targets.get(t.offsets.get(v) as usize + j) as usize;
        }
        let depth = self.stack.depth();
        let (s, _) = self.range_at(depth, v);
        let ra = self.root_arc(depth, s + j);
        let target = root_target(self.stack.root, ra);
        self.down(depth, target)
    }
}

fn root_target(g: &Graph, arc: usize) -> Vertex {
    // binary search the source whose arc range holds `arc`
    let (mut lo, mut hi) = (0usize, g.n());
    while hi - lo > 1 {
        let mid = (lo + hi) / 2;
        if g.first_arc(mid) <= arc {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    while g.first_arc(lo) + g.degree(lo) <= arc {
        lo += 1;
    }
    g.head(lo, arc - g.first_arc(lo))
}
