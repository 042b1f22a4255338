use super::scheme::{after, PathDataScheme};
use super::{PathsError, Terminals};
use crate::budget::Tracked;
use crate::graph::{GraphView, Pointer, Vertex};
use crate::succinct::IntVec;
use crate::traversal::Successors;

/// A scheme with every colour decoded: O(n log k) bits, used while one new
/// path is searched and merged in.
pub struct WorkingFamily<'s> {
    scheme: &'s PathDataScheme,
    col: IntVec,
    _bits: Tracked,
}

impl<'s> WorkingFamily<'s> {
    pub fn expand<V: GraphView + ?Sized>(inst: &Terminals<'_, V>, scheme: &'s PathDataScheme) -> Result<Self, PathsError> {
        let col = scheme.expand_colors(inst)?;
        let bits = Tracked::new("paths.work", col.size_in_bits());
        Ok(WorkingFamily { scheme, col, _bits: bits })
    }

    pub fn scheme(&self) -> &'s PathDataScheme {
        self.scheme
    }

    pub fn on_path(&self, v: Vertex) -> bool {
        self.scheme.on_path(v)
    }

    pub fn color(&self, v: Vertex) -> usize {
        self.col.get(v) as usize
    }

    /// Is `u` directly before `v` on a stored path? `u` may be s and `v` t;
    /// the two vertices are assumed adjacent.
    pub fn precedes<V: ?Sized>(&self, inst: &Terminals<'_, V>, u: Vertex, v: Vertex) -> bool {
        if u == inst.s {
            return self.scheme.is_first(v);
        }
        if v == inst.t {
            return self.scheme.is_last(u);
        }
        self.on_path(u)
            && self.on_path(v)
            && self.col.get(u) == self.col.get(v)
            && self.scheme.label(v) == after(self.scheme.label(u))
    }
}

/// The residual split graph of a stored family, presented with a fixed
/// out-list layout so that list slots never shift: `v` is the in-copy,
/// `v + n` the out-copy and `2n` a dead end standing in for every arc that
/// is saturated or unusable.
///
/// Out-list of `v`: slot 0 is `v + n`, slot `1 + j` the reverse of the arc
/// from the `j`-th neighbour. Out-list of `v + n`: slot `j` is the `j`-th
/// neighbour's in-copy, slot `deg` the reverse arc back to `v`.
pub struct Residual<'a, 's, 'g, V: ?Sized> {
    inst: Terminals<'g, V>,
    fam: &'a WorkingFamily<'s>,
    n: usize,
    edges_unbounded: bool,
}

impl<'a, 's, 'g, V: GraphView + ?Sized> Residual<'a, 's, 'g, V> {
    pub fn new(inst: Terminals<'g, V>, fam: &'a WorkingFamily<'s>) -> Self {
        Residual { n: inst.n(), inst, fam, edges_unbounded: false }
    }

    /// Edge arcs never saturate, so every minimum cut of the copies is a
    /// vertex cut.
    pub fn with_unbounded_edges(mut self) -> Self {
        self.edges_unbounded = true;
        self
    }

    pub fn dead(&self) -> Vertex {
        2 * self.n
    }

    pub fn inner(&self) -> usize {
        self.n
    }

    pub fn terminals(&self) -> &Terminals<'g, V> {
        &self.inst
    }

    fn live_out(&self, v: Vertex) -> bool {
        self.inst.usable(v) || v == self.inst.s
    }

    fn forward(&self, v: Vertex, u: Vertex) -> bool {
        (self.inst.usable(u) || u == self.inst.t)
            && !(v == self.inst.s && u == self.inst.t)
            && (self.edges_unbounded || !self.fam.precedes(&self.inst, v, u))
    }

    fn len(&self, x: Vertex) -> usize {
        let n = self.n;
        if x >= 2 * n {
            0
        } else if x < n {
            if self.inst.usable(x) {
                1 + self.inst.degree(x)
            } else {
                0
            }
        } else if self.live_out(x - n) {
            self.inst.degree(x - n) + 1
        } else {
            0
        }
    }

    pub fn slot(&self, x: Vertex, j: usize) -> Vertex {
        let n = self.n;
        let dead = self.dead();
        if x < n {
            let v = x;
            if j == 0 {
                return if self.fam.on_path(v) { dead } else { v + n };
            }
            let u = self.inst.nth(v, j - 1);
            if self.fam.on_path(v) && self.fam.precedes(&self.inst, u, v) {
                u + n
            } else {
                dead
            }
        } else {
            let v = x - n;
            let deg = self.inst.degree(v);
            if j == deg {
                return if self.fam.on_path(v) { v } else { dead };
            }
            let u = self.inst.nth(v, j);
            if self.forward(v, u) {
                u
            } else {
                dead
            }
        }
    }

    /// Whether the residual arc `x -> y` exists; different copies are
    /// assumed to belong to adjacent vertices.
    pub fn has_arc(&self, x: Vertex, y: Vertex) -> bool {
        let n = self.n;
        match (x < n, y < n) {
            (true, false) => {
                let (v, w) = (x, y - n);
                if !self.inst.usable(v) {
                    false
                } else if v == w {
                    !self.fam.on_path(v)
                } else {
                    self.fam.on_path(v) && self.fam.precedes(&self.inst, w, v)
                }
            }
            (false, true) => {
                let (v, u) = (x - n, y);
                if v == u {
                    self.fam.on_path(v)
                } else {
                    self.live_out(v) && self.forward(v, u)
                }
            }
            _ => false,
        }
    }

    /// Every vertex that might have an arc into `y`.
    pub fn candidates(&self, y: Vertex, buf: &mut Vec<Vertex>) {
        let n = self.n;
        if y < n {
            buf.push(y + n);
            buf.extend(self.inst.neighbors(y).map(|u| u + n));
        } else {
            buf.push(y - n);
            buf.extend(self.inst.neighbors(y - n));
        }
    }

    /// First slot of `x` whose head satisfies `pick`.
    pub fn find_slot(&self, x: Vertex, mut pick: impl FnMut(Vertex) -> bool) -> Option<(usize, Vertex)> {
        let dead = self.dead();
        (0..self.len(x)).map(|j| (j, self.slot(x, j))).find(|&(_, h)| h != dead && pick(h))
    }
}

impl<V: GraphView + ?Sized> Successors for Residual<'_, '_, '_, V> {
    fn order(&self) -> usize {
        2 * self.n + 1
    }

    fn first(&self, v: Vertex) -> Option<Pointer> {
        (self.len(v) > 0).then_some(0)
    }

    fn next(&self, v: Vertex, p: Pointer) -> Option<Pointer> {
        ((p as usize + 1) < self.len(v)).then_some(p + 1)
    }

    fn head(&self, v: Vertex, p: Pointer) -> Vertex {
        self.slot(v, p as usize)
    }
}
