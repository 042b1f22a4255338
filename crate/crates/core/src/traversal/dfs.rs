use std::cell::Cell;
use std::collections::HashMap;
use std::ops::ControlFlow;

use crate::budget::Tracked;
use crate::graph::{GraphView, Pointer, Vertex};
use crate::succinct::{bits_for, ChoiceDict, IntVec};

/// Directed successor lists as seen by the DFS.
pub trait Successors {
    fn order(&self) -> usize;
    fn first(&self, v: Vertex) -> Option<Pointer>;
    fn next(&self, v: Vertex, p: Pointer) -> Option<Pointer>;
    fn head(&self, v: Vertex, p: Pointer) -> Vertex;
    /// Vertices whose list must never be rescanned keep their cursor for the
    /// whole run instead of being recovered during stack restoration.
    fn keeps_pointer(&self, _v: Vertex) -> bool {
        false
    }
}

/// An undirected view as successor lists; restricted vertices keep their
/// cursor and every list step on them is counted.
pub struct Undirected<'a, V: ?Sized> {
    view: &'a V,
    restricted_steps: Cell<u64>,
}

impl<'a, V: GraphView + ?Sized> Undirected<'a, V> {
    pub fn new(view: &'a V) -> Self {
        Undirected { view, restricted_steps: Cell::new(0) }
    }

    pub fn restricted_steps(&self) -> u64 {
        self.restricted_steps.get()
    }
}

impl<V: GraphView + ?Sized> Successors for Undirected<'_, V> {
    fn order(&self) -> usize {
        self.view.order()
    }

    fn first(&self, v: Vertex) -> Option<Pointer> {
        if self.view.is_restricted(v) {
            self.restricted_steps.set(self.restricted_steps.get() + 1);
        }
        self.view.adj_first(v)
    }

    fn next(&self, v: Vertex, p: Pointer) -> Option<Pointer> {
        if self.view.is_restricted(v) {
            self.restricted_steps.set(self.restricted_steps.get() + 1);
        }
        self.view.adj_next(v, p)
    }

    fn head(&self, v: Vertex, p: Pointer) -> Vertex {
        self.view.adj_head(v, p)
    }

    fn keeps_pointer(&self, v: Vertex) -> bool {
        self.view.is_restricted(v)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DfsEvent {
    /// First visit of a vertex; `parent` is None for a root.
    Pre { v: Vertex, parent: Option<Vertex> },
    /// All successors of `v` are done.
    Post { v: Vertex, parent: Option<Vertex> },
    /// Control returns to `parent` after finishing `child`.
    Back { parent: Vertex, child: Vertex },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DfsStats {
    pub visited: usize,
    /// How often a stack segment had to be rebuilt from the root.
    pub restorations: u64,
    /// Entries the stack segments can hold.
    pub segment_capacity: usize,
}

const WHITE: u64 = 0;
const GRAY: u64 = 1;
const BLACK: u64 = 2;
const NONE: Pointer = u64::MAX;

/// Depth-first search that keeps only two stack segments of
/// `max(16, n / log n)` entries plus two colour bits per vertex.
///
/// When both segments have been popped while the stack is still deeper,
/// the missing segment is rebuilt by walking down from the root: the child
/// of a gray vertex is its first gray successor that is not an ancestor.
pub struct Dfs<'a, S: ?Sized> {
    graph: &'a S,
    color: IntVec,
    top: Vec<(u32, Pointer)>,
    below: Vec<(u32, Pointer)>,
    depth: usize,
    capacity: usize,
    saved: HashMap<u32, Pointer>,
    root: Vertex,
    popped: Option<Vertex>,
    marks: ChoiceDict,
    stats: DfsStats,
    bits: Tracked,
}

impl<'a, S: Successors + ?Sized> Dfs<'a, S> {
    pub fn new(graph: &'a S) -> Self {
        let n = graph.order();
        let capacity = (n / bits_for(n as u64) as usize).max(16);
        let color = IntVec::new(n, 2);
        let marks = ChoiceDict::new(n);
        let bits = Tracked::new(
            "traversal.dfs",
            color.size_in_bits() + marks.size_in_bits() + 2 * capacity as u64 * 128,
        );
        Dfs {
            graph,
            color,
            top: Vec::with_capacity(capacity),
            below: Vec::with_capacity(capacity),
            depth: 0,
            capacity,
            saved: HashMap::new(),
            root: 0,
            popped: None,
            marks,
            stats: DfsStats { segment_capacity: capacity, ..DfsStats::default() },
            bits,
        }
    }

    /// Limit the stack segments to `capacity` entries (testing restorations).
    pub fn with_segment_capacity(mut self, capacity: usize) -> Self {
        self.capacity = capacity.max(1);
        self.stats.segment_capacity = self.capacity;
        self
    }

    pub fn is_visited(&self, v: Vertex) -> bool {
        self.color.get(v) != WHITE
    }

    pub fn is_gray(&self, v: Vertex) -> bool {
        self.color.get(v) == GRAY
    }

    /// Colour `v` black before a run so the search never enters it.
    pub fn exclude(&mut self, v: Vertex) {
        self.color.set(v, BLACK);
    }

    /// Vertices currently on the stack.
    pub fn depth(&self) -> usize {
        self.depth
    }

    /// Pop the stack left behind by a stopped run, deepest vertex first.
    /// Popped vertices turn black.
    pub fn pop(&mut self) -> Option<Vertex> {
        if self.depth == 0 {
            return None;
        }
        self.ensure_top(self.popped);
        let (v, _) = self.top.pop().expect("non-empty after ensure_top");
        let v = v as usize;
        self.depth -= 1;
        self.color.set(v, BLACK);
        self.saved.remove(&(v as u32));
        self.popped = Some(v);
        Some(v)
    }

    pub fn stats(&self) -> &DfsStats {
        &self.stats
    }

    fn refresh_bits(&mut self) {
        let b = self.color.size_in_bits()
            + self.marks.size_in_bits()
            + 2 * self.capacity as u64 * 128
            + self.saved.len() as u64 * 128;
        self.bits.set(b);
    }

    fn push_entry(&mut self, v: Vertex) {
        if self.top.len() == self.capacity {
            std::mem::swap(&mut self.top, &mut self.below);
            self.top.clear();
        }
        self.top.push((v as u32, NONE));
        self.depth += 1;
    }

    /// Make sure the entry at depth `depth - 1` is in `top`.
    fn ensure_top(&mut self, finished_child: Option<Vertex>) {
        if !self.top.is_empty() || self.depth == 0 {
            return;
        }
        if !self.below.is_empty() {
            std::mem::swap(&mut self.top, &mut self.below);
            return;
        }
        self.restore(finished_child);
    }

    fn restore(&mut self, finished_child: Option<Vertex>) {
        self.stats.restorations += 1;
        let keep_from = self.depth.saturating_sub(self.capacity);
        let g = self.graph;
        let mut x = self.root;
        self.marks.add(x);
        for d in 0..self.depth {
            let last = d + 1 == self.depth;
            let p = if let Some(&p) = self.saved.get(&(x as u32)) {
                p
            } else if last {
                // the deepest entry points at the child that just finished
                let c = finished_child.expect("restoration only follows a pop");
                let mut cur = g.first(x);
                loop {
                    let q = cur.expect("finished child must be a successor");
                    if g.head(x, q) == c {
                        break q;
                    }
                    cur = g.next(x, q);
                }
            } else {
                let mut cur = g.first(x);
                loop {
                    let q = cur.expect("gray child must be a successor");
                    let w = g.head(x, q);
                    if self.color.get(w) == GRAY && !self.marks.contains(w) {
                        break q;
                    }
                    cur = g.next(x, q);
                }
            };
            if d >= keep_from {
                self.top.push((x as u32, p));
            }
            if !last {
                x = g.head(x, p);
                self.marks.add(x);
            }
        }
        self.marks.clear();
    }

    /// Run from `root`. Returns `Break` if the callback stopped the search.
    pub fn run(&mut self, root: Vertex, on: &mut impl FnMut(DfsEvent) -> ControlFlow<()>) -> ControlFlow<()> {
        if self.color.get(root) != WHITE {
            return ControlFlow::Continue(());
        }
        let g = self.graph;
        self.root = root;
        self.popped = None;
        self.color.set(root, GRAY);
        self.stats.visited += 1;
        self.push_entry(root);
        on(DfsEvent::Pre { v: root, parent: None })?;
        let mut finished: Option<Vertex> = None;
        while self.depth > 0 {
            self.ensure_top(finished);
            finished = None;
            let (v32, p) = *self.top.last().unwrap();
            let v = v32 as usize;
            let mut cur = if p == NONE { g.first(v) } else { g.next(v, p) };
            let mut found = None;
            while let Some(q) = cur {
                let w = g.head(v, q);
                if self.color.get(w) == WHITE {
                    found = Some((q, w));
                    break;
                }
                cur = g.next(v, q);
            }
            match found {
                Some((q, w)) => {
                    self.top.last_mut().unwrap().1 = q;
                    if g.keeps_pointer(v) {
                        self.saved.insert(v as u32, q);
                    }
                    self.color.set(w, GRAY);
                    self.stats.visited += 1;
                    self.push_entry(w);
                    self.refresh_bits();
                    on(DfsEvent::Pre { v: w, parent: Some(v) })?;
                }
                None => {
                    self.top.pop();
                    self.depth -= 1;
                    self.color.set(v, BLACK);
                    self.saved.remove(&(v as u32));
                    let parent = if self.depth > 0 {
                        self.ensure_top(Some(v));
                        Some(self.top.last().unwrap().0 as usize)
                    } else {
                        None
                    };
                    on(DfsEvent::Post { v, parent })?;
                    if let Some(parent) = parent {
                        on(DfsEvent::Back { parent, child: v })?;
                    }
                    finished = Some(v);
                }
            }
        }
        ControlFlow::Continue(())
    }
}

/// DFS from `root` with the default segment size.
pub fn dfs<V: GraphView + ?Sized>(view: &V, root: Vertex, mut on: impl FnMut(DfsEvent)) -> DfsStats {
    let succ = Undirected::new(view);
    let mut d = Dfs::new(&succ);
    let _ = d.run(root, &mut |e| {
        on(e);
        ControlFlow::Continue(())
    });
    d.stats().clone()
}

/// DFS over every component; roots are taken in ascending vertex order.
pub fn dfs_forest<V: GraphView + ?Sized>(view: &V, mut on: impl FnMut(DfsEvent)) -> DfsStats {
    let succ = Undirected::new(view);
    let mut d = Dfs::new(&succ);
    for r in 0..view.order() {
        if !d.is_visited(r) {
            let _ = d.run(r, &mut |e| {
                on(e);
                ControlFlow::Continue(())
            });
        }
    }
    d.stats().clone()
}

/// Instrumented result of a DFS over a view with restricted vertices.
#[derive(Clone, Debug, Default)]
pub struct RestrictedDfsStats {
    pub dfs: DfsStats,
    /// List-interface steps taken on restricted vertices.
    pub restricted_steps: u64,
}

/// DFS on a view whose restricted vertices only offer list access. Their
/// cursors are kept for the whole run, so each list is walked once.
pub fn dfs_restricted<V: GraphView + ?Sized>(
    view: &V,
    root: Vertex,
    segment_capacity: Option<usize>,
    mut on: impl FnMut(DfsEvent),
) -> RestrictedDfsStats {
    let succ = Undirected::new(view);
    let mut d = Dfs::new(&succ);
    if let Some(c) = segment_capacity {
        d = d.with_segment_capacity(c);
    }
    let _ = d.run(root, &mut |e| {
        on(e);
        ControlFlow::Continue(())
    });
    RestrictedDfsStats { dfs: d.stats().clone(), restricted_steps: succ.restricted_steps() }
}
