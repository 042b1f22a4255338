use crate::graph::{DigraphView, GraphView, Pointer, Vertex};

/// Directed split graph of an undirected view: every vertex `v` becomes an
/// in-copy `v` and an out-copy `v + n`, joined by the arc `v -> v + n`, and
/// every edge `{u, w}` becomes the arcs `u + n -> w` and `w + n -> u`.
///
/// Vertex-disjoint paths in the view are arc-disjoint paths here.
pub struct SplitGraph<'a, V: ?Sized> {
    base: &'a V,
}

pub fn residual_view<V: GraphView + ?Sized>(view: &V) -> SplitGraph<'_, V> {
    SplitGraph { base: view }
}

impl<V: GraphView + ?Sized> SplitGraph<'_, V> {
    fn n(&self) -> usize {
        self.base.order()
    }

    pub fn arc_count(&self) -> usize {
        let n = self.n();
        n + (0..n).map(|v| self.base.degree(v)).sum::<usize>()
    }

    pub fn out_degree(&self, v: Vertex) -> usize {
        let n = self.n();
        if v < n {
            1
        } else {
            self.base.degree(v - n)
        }
    }

    pub fn in_degree(&self, v: Vertex) -> usize {
        let n = self.n();
        if v < n {
            self.base.degree(v)
        } else {
            1
        }
    }

    /// The `j`-th out-neighbour (0-based).
    pub fn out_head(&self, v: Vertex, j: usize) -> Vertex {
        let n = self.n();
        if v < n {
            debug_assert_eq!(j, 0);
            v + n
        } else {
            self.nth(v - n, j)
        }
    }

    /// The `j`-th in-neighbour (0-based).
    pub fn in_head(&self, v: Vertex, j: usize) -> Vertex {
        let n = self.n();
        if v < n {
            self.nth(v, j) + n
        } else {
            debug_assert_eq!(j, 0);
            v - n
        }
    }

    fn nth(&self, v: Vertex, j: usize) -> Vertex {
        if self.base.is_restricted(v) {
            crate::graph::neighbors(self.base, v).nth(j).expect("index within degree")
        } else {
            self.base.head(v, j)
        }
    }
}

impl<V: GraphView + ?Sized> DigraphView for SplitGraph<'_, V> {
    fn order(&self) -> usize {
        2 * self.n()
    }

    fn out_first(&self, v: Vertex) -> Option<Pointer> {
        (self.out_degree(v) > 0).then_some(0)
    }

    fn out_next(&self, v: Vertex, p: Pointer) -> Option<Pointer> {
        ((p as usize + 1) < self.out_degree(v)).then_some(p + 1)
    }

    fn out_head(&self, v: Vertex, p: Pointer) -> Vertex {
        SplitGraph::out_head(self, v, p as usize)
    }

    fn in_first(&self, v: Vertex) -> Option<Pointer> {
        (self.in_degree(v) > 0).then_some(0)
    }

    fn in_next(&self, v: Vertex, p: Pointer) -> Option<Pointer> {
        ((p as usize + 1) < self.in_degree(v)).then_some(p + 1)
    }

    fn in_head(&self, v: Vertex, p: Pointer) -> Vertex {
        SplitGraph::in_head(self, v, p as usize)
    }
}
