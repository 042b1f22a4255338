use super::{Graph, Vertex};

/// Opaque cursor into an adjacency list.
pub type Pointer = u64;

/// Graph interface with optional access-restricted vertices.
///
/// Unrestricted vertices expose adjacency arrays (`degree`, `head`).
/// Restricted vertices only offer list iteration through
/// `adj_first`/`adj_next`/`adj_head`; calling `head` on them is a contract
/// violation. The list methods also work for unrestricted vertices, where the
/// pointer is simply the array index.
pub trait GraphView {
    fn order(&self) -> usize;

    fn is_restricted(&self, _v: Vertex) -> bool {
        false
    }

    /// Degree; for restricted vertices implementations may have to iterate.
    fn degree(&self, v: Vertex) -> usize;

    /// The `j`-th neighbour of an unrestricted vertex.
    fn head(&self, v: Vertex, j: usize) -> Vertex;

    fn adj_first(&self, v: Vertex) -> Option<Pointer> {
        (self.degree(v) > 0).then_some(0)
    }

    fn adj_next(&self, v: Vertex, p: Pointer) -> Option<Pointer> {
        let q = p + 1;
        ((q as usize) < self.degree(v)).then_some(q)
    }

    fn adj_head(&self, v: Vertex, p: Pointer) -> Vertex {
        self.head(v, p as usize)
    }
}

impl GraphView for Graph {
    #[inline]
    fn order(&self) -> usize {
        self.n()
    }

    #[inline]
    fn degree(&self, v: Vertex) -> usize {
        Graph::degree(self, v)
    }

    #[inline]
    fn head(&self, v: Vertex, j: usize) -> Vertex {
        Graph::head(self, v, j)
    }
}

impl<T: GraphView + ?Sized> GraphView for &T {
    fn order(&self) -> usize {
        (**self).order()
    }
    fn is_restricted(&self, v: Vertex) -> bool {
        (**self).is_restricted(v)
    }
    fn degree(&self, v: Vertex) -> usize {
        (**self).degree(v)
    }
    fn head(&self, v: Vertex, j: usize) -> Vertex {
        (**self).head(v, j)
    }
    fn adj_first(&self, v: Vertex) -> Option<Pointer> {
        (**self).adj_first(v)
    }
    fn adj_next(&self, v: Vertex, p: Pointer) -> Option<Pointer> {
        (**self).adj_next(v, p)
    }
    fn adj_head(&self, v: Vertex, p: Pointer) -> Vertex {
        (**self).adj_head(v, p)
    }
}

/// Neighbours of `v` through the list interface.
pub fn neighbors<V: GraphView + ?Sized>(view: &V, v: Vertex) -> Neighbors<'_, V> {
    Neighbors { view, v, cur: view.adj_first(v) }
}

pub struct Neighbors<'a, V: ?Sized> {
    view: &'a V,
    v: Vertex,
    cur: Option<Pointer>,
}

impl<V: GraphView + ?Sized> Iterator for Neighbors<'_, V> {
    type Item = Vertex;

    fn next(&mut self) -> Option<Vertex> {
        let p = self.cur?;
        self.cur = self.view.adj_next(self.v, p);
        Some(self.view.adj_head(self.v, p))
    }
}

/// Directed graph interface with separate out- and in-lists.
pub trait DigraphView {
    fn order(&self) -> usize;
    fn out_first(&self, v: Vertex) -> Option<Pointer>;
    fn out_next(&self, v: Vertex, p: Pointer) -> Option<Pointer>;
    fn out_head(&self, v: Vertex, p: Pointer) -> Vertex;
    fn in_first(&self, v: Vertex) -> Option<Pointer>;
    fn in_next(&self, v: Vertex, p: Pointer) -> Option<Pointer>;
    fn in_head(&self, v: Vertex, p: Pointer) -> Vertex;
}

/// A view extended by two virtual terminals appended after the base
/// vertices: `s` adjacent to every vertex of `sources`, `t` to every vertex
/// of `sinks`. Terminals and their neighbours become access-restricted.
///
/// `sources` and `sinks` must be sorted, disjoint, and small.
pub struct WithTerminals<'a, V: ?Sized> {
    base: &'a V,
    sources: &'a [Vertex],
    sinks: &'a [Vertex],
}

const TERMINAL_TAG: Pointer = 1 << 63;

impl<'a, V: GraphView + ?Sized> WithTerminals<'a, V> {
    pub fn new(base: &'a V, sources: &'a [Vertex], sinks: &'a [Vertex]) -> Self {
        debug_assert!(sources.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(sinks.windows(2).all(|w| w[0] < w[1]));
        WithTerminals { base, sources, sinks }
    }

    pub fn source(&self) -> Vertex {
        self.base.order()
    }

    pub fn sink(&self) -> Vertex {
        self.base.order() + 1
    }

    fn attached(&self, v: Vertex) -> Option<Vertex> {
        if self.sources.binary_search(&v).is_ok() {
            Some(self.source())
        } else if self.sinks.binary_search(&v).is_ok() {
            Some(self.sink())
        } else {
            None
        }
    }

    fn terminal_list(&self, v: Vertex) -> &'a [Vertex] {
        if v == self.source() {
            self.sources
        } else {
            self.sinks
        }
    }
}

impl<V: GraphView + ?Sized> GraphView for WithTerminals<'_, V> {
    fn order(&self) -> usize {
        self.base.order() + 2
    }

    fn is_restricted(&self, v: Vertex) -> bool {
        v >= self.base.order() || self.attached(v).is_some() || self.base.is_restricted(v)
    }

    fn degree(&self, v: Vertex) -> usize {
        if v >= self.base.order() {
            return self.terminal_list(v).len();
        }
        let extra = usize::from(self.attached(v).is_some());
        if self.base.is_restricted(v) {
            neighbors(self.base, v).count() + extra
        } else {
            self.base.degree(v) + extra
        }
    }

    fn head(&self, v: Vertex, j: usize) -> Vertex {
        debug_assert!(!self.is_restricted(v));
        self.base.head(v, j)
    }

    fn adj_first(&self, v: Vertex) -> Option<Pointer> {
        if v >= self.base.order() {
            return (!self.terminal_list(v).is_empty()).then_some(0);
        }
        match self.base.adj_first(v) {
            Some(p) => Some(p),
            None => self.attached(v).map(|_| TERMINAL_TAG),
        }
    }

    fn adj_next(&self, v: Vertex, p: Pointer) -> Option<Pointer> {
        if v >= self.base.order() {
            let q = p + 1;
            return ((q as usize) < self.terminal_list(v).len()).then_some(q);
        }
        if p == TERMINAL_TAG {
            return None;
        }
        match self.base.adj_next(v, p) {
            Some(q) => Some(q),
            None => self.attached(v).map(|_| TERMINAL_TAG),
        }
    }

    fn adj_head(&self, v: Vertex, p: Pointer) -> Vertex {
        if v >= self.base.order() {
            return self.terminal_list(v)[p as usize];
        }
        if p == TERMINAL_TAG {
            return self.attached(v).expect("terminal pointer on unattached vertex");
        }
        self.base.adj_head(v, p)
    }
}
