use std::ops::ControlFlow;

use crate::graph::{neighbors, GraphView, Pointer, Vertex};
use crate::succinct::{BitVec, ChoiceDict, IntVec};
use crate::traversal::{Dfs, DfsEvent, Successors};

/// Labels `1, 2, 3, 1, ...` along the internal vertices of one s-t path,
/// 0 elsewhere. Together with chordlessness this fixes the direction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathNumbering {
    labels: IntVec,
    s: Vertex,
    t: Vertex,
    internal: usize,
}

impl PathNumbering {
    /// Number `path`, given as the full sequence `s, .., t`.
    pub fn from_path(n: usize, path: &[Vertex]) -> Self {
        assert!(path.len() >= 2, "a path has two terminals");
        let mut labels = IntVec::new(n, 2);
        let inner = &path[1..path.len() - 1];
        for (i, &v) in inner.iter().enumerate() {
            labels.set(v, (i % 3) as u64 + 1);
        }
        PathNumbering { labels, s: path[0], t: path[path.len() - 1], internal: inner.len() }
    }

    pub fn source(&self) -> Vertex {
        self.s
    }

    pub fn sink(&self) -> Vertex {
        self.t
    }

    pub fn label(&self, v: Vertex) -> u8 {
        self.labels.get(v) as u8
    }

    pub fn labels(&self) -> &IntVec {
        &self.labels
    }

    pub fn internal_len(&self) -> usize {
        self.internal
    }

    /// The path `s, .., t`, recovered from the labels alone.
    pub fn vertices<V: GraphView + ?Sized>(&self, view: &V) -> Vec<Vertex> {
        let mut out = vec![self.s];
        if self.internal == 0 {
            out.push(self.t);
            return out;
        }
        let mut cur = neighbors(view, self.s).find(|&w| self.label(w) == 1).expect("first vertex next to s");
        out.push(cur);
        for _ in 1..self.internal {
            let want = self.label(cur) % 3 + 1;
            let prev = out[out.len() - 2];
            cur = neighbors(view, cur)
                .find(|&w| w != prev && self.label(w) == want)
                .expect("numbering continues");
            out.push(cur);
        }
        out.push(self.t);
        out
    }
}

/// After a DFS stopped on its target, pop the stack and keep only the
/// vertices of a chordless root-target path: each kept vertex is preceded by
/// the earliest stack vertex with an arc into it.
pub(crate) fn strip_chords<S: Successors + ?Sized>(
    dfs: &mut Dfs<'_, S>,
    universe: usize,
    mut candidates: impl FnMut(Vertex, &mut Vec<Vertex>),
    has_arc: impl Fn(Vertex, Vertex) -> bool,
) -> BitVec {
    let mut kept = BitVec::new(universe);
    let mut pending = ChoiceDict::new(universe);
    let mut buf = Vec::new();
    let mut target = dfs.pop().expect("stopped search leaves its target on the stack");
    kept.set(target);
    while dfs.depth() > 0 {
        buf.clear();
        candidates(target, &mut buf);
        for &w in &buf {
            if dfs.is_gray(w) && has_arc(w, target) {
                pending.add(w);
            }
        }
        assert!(!pending.is_empty(), "stack parent always reaches the target");
        let mut earliest = target;
        while !pending.is_empty() {
            let v = dfs.pop().expect("pending vertices are on the stack");
            if pending.remove(v) {
                earliest = v;
            }
        }
        kept.set(earliest);
        target = earliest;
    }
    kept
}

struct Filtered<'a, V: ?Sized, F> {
    view: &'a V,
    forbid: F,
}

impl<V: GraphView + ?Sized, F: Fn(Vertex, Vertex) -> bool> Filtered<'_, V, F> {
    fn skip(&self, v: Vertex, mut p: Option<Pointer>) -> Option<Pointer> {
        while let Some(q) = p {
            if !(self.forbid)(v, self.view.adj_head(v, q)) {
                return Some(q);
            }
            p = self.view.adj_next(v, q);
        }
        None
    }
}

impl<V: GraphView + ?Sized, F: Fn(Vertex, Vertex) -> bool> Successors for Filtered<'_, V, F> {
    fn order(&self) -> usize {
        self.view.order()
    }
    fn first(&self, v: Vertex) -> Option<Pointer> {
        self.skip(v, self.view.adj_first(v))
    }
    fn next(&self, v: Vertex, p: Pointer) -> Option<Pointer> {
        self.skip(v, self.view.adj_next(v, p))
    }
    fn head(&self, v: Vertex, p: Pointer) -> Vertex {
        self.view.adj_head(v, p)
    }
}

/// A chordless s-t path avoiding every arc `(u, w)` with `forbid(u, w)`, or
/// None if t is unreachable.
pub fn find_chordless_path<V, F>(view: &V, s: Vertex, t: Vertex, forbid: F) -> Option<PathNumbering>
where
    V: GraphView + ?Sized,
    F: Fn(Vertex, Vertex) -> bool,
{
    assert_ne!(s, t, "terminals must differ");
    let succ = Filtered { view, forbid: &forbid };
    let mut dfs = Dfs::new(&succ);
    let reached = dfs.run(s, &mut |e| match e {
        DfsEvent::Pre { v, .. } if v == t => ControlFlow::Break(()),
        _ => ControlFlow::Continue(()),
    });
    if reached.is_continue() {
        return None;
    }
    let n = view.order();
    let mut kept = strip_chords(&mut dfs, n, |c, buf| buf.extend(neighbors(view, c)), |w, c| !forbid(w, c));
    let mut path = vec![s];
    kept.clear(s);
    let mut cur = s;
    while cur != t {
        cur = neighbors(view, cur)
            .find(|&w| kept.get(w) && !forbid(cur, w))
            .expect("kept vertices form a path");
        kept.clear(cur);
        path.push(cur);
    }
    Some(PathNumbering::from_path(n, &path))
}
