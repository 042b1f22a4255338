use super::{has_dense_core, leaf_limit, ComponentFinder, DecompositionError};
use crate::budget::Tracked;
use crate::graph::{neighbors, BitMatrix, Graph, GraphView, MinimalStack, Vertex};
use crate::separators::{balanced_x_separator, two_thirds};
use crate::succinct::BitVec;

/// One step of the Euler tour over the decomposition tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Visit {
    /// Node id in order of first arrival, from 0.
    pub node: usize,
    pub parent: Option<usize>,
    pub depth: usize,
    /// First arrival, as opposed to a return from a child.
    pub first: bool,
    pub leaf: bool,
}

struct Record {
    node: usize,
    parent: Option<usize>,
    x: BitVec,
    sep: BitVec,
    parts: Vec<BitVec>,
    next_part: usize,
    /// Bag in level coordinates, ascending.
    bag: Vec<Vertex>,
    matrix: BitMatrix,
    leaf: bool,
    bits: Tracked,
}

impl Record {
    fn size_in_bits(&self) -> u64 {
        self.x.size_in_bits()
            + self.sep.size_in_bits()
            + self.parts.iter().map(BitVec::size_in_bits).sum::<u64>()
            + 64 * self.bag.len() as u64
            + self.matrix.size_in_bits()
    }

    fn bag_index(&self, v: Vertex) -> Option<usize> {
        self.bag.binary_search(&v).ok()
    }
}

/// Streams a binary tree decomposition of width at most `8k + 6` in Euler
/// order: every node is reported on arrival and again after each child.
pub struct TdIterator<'g> {
    stack: MinimalStack<'g>,
    k: usize,
    records: Vec<Record>,
    nodes: usize,
    current: Option<Visit>,
    finished: bool,
    max_depth: usize,
    widest_bag: usize,
}

impl<'g> TdIterator<'g> {
    pub fn new(g: &'g Graph, k: usize) -> Result<Self, DecompositionError> {
        if k == 0 {
            return Err(DecompositionError::ZeroWidth);
        }
        if has_dense_core(g, k) {
            return Err(DecompositionError::TreewidthExceeded(k));
        }
        Ok(TdIterator {
            stack: MinimalStack::new(g, 10 * k + 10),
            k,
            records: Vec::new(),
            nodes: 0,
            current: None,
            finished: false,
            max_depth: 0,
            widest_bag: 0,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn graph(&self) -> &'g Graph {
        self.stack.root()
    }

    /// Move to the next Euler step. False once the tour is over.
    pub fn next(&mut self) -> Result<bool, DecompositionError> {
        if self.finished {
            return Ok(false);
        }
        if self.current.is_none() {
            let n = self.stack.root().n();
            let rec = self.record(BitVec::new(n), &[])?;
            self.enter(rec);
            return Ok(true);
        }
        let top = self.records.last_mut().expect("a current visit has a record");
        if top.next_part < top.parts.len() {
            let part = std::mem::take(&mut top.parts[top.next_part]);
            top.next_part += 1;
            let mut keep = part;
            keep.union_with(&top.sep);
            let mut x = BitVec::new(keep.count_ones());
            let mut carried = Vec::new();
            for (child, v) in keep.iter_ones().enumerate() {
                if top.x.get(v) || top.sep.get(v) {
                    x.set(child);
                }
                if let Some(at) = top.bag_index(v) {
                    carried.push((child, at));
                }
            }
            let sep = top.sep.clone();
            top.bits.set(top.size_in_bits());
            self.stack.push(&keep, &sep)?;
            self.stack.toptune();
            drop((keep, sep));
            let rec = self.record(x, &carried)?;
            self.enter(rec);
            return Ok(true);
        }
        self.records.pop();
        if self.records.is_empty() {
            self.finished = true;
            self.current = None;
            return Ok(false);
        }
        self.stack.pop()?;
        self.stack.toptune();
        let top = self.records.last().unwrap();
        self.current = Some(Visit {
            node: top.node,
            parent: top.parent,
            depth: self.records.len() - 1,
            first: false,
            leaf: top.leaf,
        });
        Ok(true)
    }

    /// Drop the next child of the current node without visiting it. Later
    /// children keep their place in the order. False if none is left.
    pub fn skip_child(&mut self) -> bool {
        let Some(top) = self.records.last_mut() else {
            return false;
        };
        if top.next_part == top.parts.len() {
            return false;
        }
        top.parts[top.next_part] = BitVec::default();
        top.next_part += 1;
        top.bits.set(top.size_in_bits());
        true
    }

    /// Children of the current node not yet visited or skipped.
    pub fn children_left(&self) -> usize {
        self.records.last().map_or(0, |r| r.parts.len() - r.next_part)
    }

    fn enter(&mut self, rec: Record) {
        let depth = self.records.len();
        self.max_depth = self.max_depth.max(depth);
        self.widest_bag = self.widest_bag.max(rec.bag.len());
        self.current = Some(Visit { node: rec.node, parent: rec.parent, depth, first: true, leaf: rec.leaf });
        self.records.push(rec);
    }

    /// Build the record of the subgraph on top of the stack. `carried`
    /// pairs a level vertex with its index in the parent's bag.
    fn record(&mut self, x: BitVec, carried: &[(Vertex, usize)]) -> Result<Record, DecompositionError> {
        let view = self.stack.top();
        let n = view.order();
        let node = self.nodes;
        let parent = self.records.last().map(|r| r.node);
        let (sep, parts, leaf) = if n <= leaf_limit(self.k) {
            (BitVec::ones(n), Vec::new(), true)
        } else {
            let xs: Vec<Vertex> = x.iter_ones().collect();
            let found = balanced_x_separator(&view, &xs, self.k)?;
            let sep = found.ok_or(DecompositionError::TreewidthExceeded(self.k))?.into_set();
            let parts = binarize(&view, &sep);
            (sep, parts, false)
        };
        let mut in_bag = sep.clone();
        in_bag.union_with(&x);
        let bag: Vec<Vertex> = in_bag.iter_ones().collect();
        drop(in_bag);
        let mut matrix = BitMatrix::new(bag.len());
        let index = |v: Vertex| bag.binary_search(&v).ok();
        let mut fresh = vec![true; bag.len()];
        if let Some(up) = self.records.last() {
            for (i, &(a, pa)) in carried.iter().enumerate() {
                let ia = index(a).expect("surviving bag vertices stay in the bag");
                fresh[ia] = false;
                for &(b, pb) in &carried[i + 1..] {
                    if up.matrix.get(pa, pb) {
                        matrix.set_sym(ia, index(b).expect("surviving bag vertices stay in the bag"));
                    }
                }
            }
        }
        // vertices new to the bag are scanned once
        for (ia, &u) in bag.iter().enumerate() {
            if fresh[ia] {
                for w in neighbors(&view, u) {
                    if let Some(ib) = index(w) {
                        matrix.set_sym(ia, ib);
                    }
                }
            }
        }
        self.nodes += 1;
        let mut rec = Record {
            node,
            parent,
            x,
            sep,
            parts,
            next_part: 0,
            bag,
            matrix,
            leaf,
            bits: Tracked::empty("decomposition.records"),
        };
        rec.bits.set(rec.size_in_bits());
        Ok(rec)
    }

    /// The current Euler step, if the tour is under way.
    pub fn show(&self) -> Option<Visit> {
        self.current
    }

    /// Bag of the current node, original vertex ids ascending.
    pub fn bag(&self) -> Vec<Vertex> {
        let top = self.stack.top();
        self.records.last().map_or_else(Vec::new, |r| r.bag.iter().map(|&v| top.to_root(v)).collect())
    }

    pub fn bag_len(&self) -> usize {
        self.records.last().map_or(0, |r| r.bag.len())
    }

    /// Edges of the subgraph induced by the current bag, original ids,
    /// each as `(smaller, larger)`.
    pub fn bag_edges(&self) -> Vec<(Vertex, Vertex)> {
        let Some(r) = self.records.last() else {
            return Vec::new();
        };
        let top = self.stack.top();
        let side = r.bag.len();
        let mut out = Vec::new();
        for a in 0..side {
            for b in a + 1..side {
                if r.matrix.get(a, b) {
                    out.push((top.to_root(r.bag[a]), top.to_root(r.bag[b])));
                }
            }
        }
        out
    }

    /// Nodes created so far.
    pub fn node_count(&self) -> usize {
        self.nodes
    }

    /// Deepest level reached so far (the root is depth 0).
    pub fn max_depth(&self) -> usize {
        self.max_depth
    }

    pub fn widest_bag(&self) -> usize {
        self.widest_bag
    }
}

/// Pack the components of `view - sep` into at most two groups: a component
/// joins the first group while that stays within two thirds of the vertices.
fn binarize<V: GraphView + ?Sized>(view: &V, sep: &BitVec) -> Vec<BitVec> {
    let n = view.order();
    let limit = two_thirds(n);
    let mut groups = [BitVec::new(n), BitVec::new(n)];
    let mut sizes = [0usize; 2];
    let mut finder = ComponentFinder::new(view, sep);
    while finder.next() {
        let c = finder.show();
        let g = usize::from(sizes[0] + c.size > limit);
        sizes[g] += c.size;
        for v in c.vertices.iter() {
            groups[g].set(v);
        }
    }
    let [first, second] = groups;
    [(first, sizes[0]), (second, sizes[1])].into_iter().filter(|(_, s)| *s > 0).map(|(g, _)| g).collect()
}
