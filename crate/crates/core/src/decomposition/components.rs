use crate::budget::Tracked;
use crate::graph::{neighbors, GraphView, Vertex};
use crate::succinct::{BitVec, ChoiceDict};

/// One connected component of `G - S`, as shown by a [`ComponentFinder`].
#[derive(Clone, Copy, Debug)]
pub struct Component<'a> {
    pub vertices: &'a ChoiceDict,
    /// Smallest vertex of the component; the scan found it first.
    pub start: Vertex,
    pub size: usize,
}

/// Iterates the connected components of a view minus a removed set.
///
/// Keeps a done bit per vertex and a scan cursor; each call to `next` resumes
/// the scan, and fills a fresh set by layered BFS from the first vertex that
/// is neither removed nor done.
pub struct ComponentFinder<'a, V: ?Sized> {
    view: &'a V,
    removed: &'a BitVec,
    done: BitVec,
    cursor: usize,
    current: ChoiceDict,
    layer: ChoiceDict,
    next_layer: ChoiceDict,
    start: Vertex,
    size: usize,
    _bits: Tracked,
}

impl<'a, V: GraphView + ?Sized> ComponentFinder<'a, V> {
    pub fn new(view: &'a V, removed: &'a BitVec) -> Self {
        let n = view.order();
        assert_eq!(removed.len(), n, "removed set must cover the view");
        let done = BitVec::new(n);
        let current = ChoiceDict::new(n);
        let layer = ChoiceDict::new(n);
        let next_layer = ChoiceDict::new(n);
        let bits = done.size_in_bits() + 3 * current.size_in_bits() + 2 * 64;
        ComponentFinder {
            view,
            removed,
            done,
            cursor: 0,
            current,
            layer,
            next_layer,
            start: 0,
            size: 0,
            _bits: Tracked::new("decomposition.components", bits),
        }
    }

    /// Advance to the next component. False once all are shown.
    pub fn next(&mut self) -> bool {
        let n = self.view.order();
        while self.cursor < n && (self.done.get(self.cursor) || self.removed.get(self.cursor)) {
            self.cursor += 1;
        }
        if self.cursor == n {
            self.current.clear();
            self.size = 0;
            return false;
        }
        let root = self.cursor;
        self.current.clear();
        self.layer.clear();
        self.done.set(root);
        self.current.add(root);
        self.layer.add(root);
        while !self.layer.is_empty() {
            for v in self.layer.iter() {
                for w in neighbors(self.view, v) {
                    if !self.done.get(w) && !self.removed.get(w) {
                        self.done.set(w);
                        self.current.add(w);
                        self.next_layer.add(w);
                    }
                }
            }
            self.layer.clear();
            std::mem::swap(&mut self.layer, &mut self.next_layer);
        }
        self.start = root;
        self.size = self.current.len();
        true
    }

    pub fn show(&self) -> Component<'_> {
        Component { vertices: &self.current, start: self.start, size: self.size }
    }
}

/// Largest component of `view - removed` by vertex count and by the number
/// of `marked` vertices it holds.
pub fn component_extremes<V: GraphView + ?Sized>(view: &V, removed: &BitVec, marked: Option<&BitVec>) -> (usize, usize) {
    let mut finder = ComponentFinder::new(view, removed);
    let (mut most, mut most_marked) = (0, 0);
    while finder.next() {
        let c = finder.show();
        most = most.max(c.size);
        if let Some(m) = marked {
            most_marked = most_marked.max(c.vertices.iter().filter(|&v| m.get(v)).count());
        }
    }
    (most, most_marked)
}
