use crate::budget::Tracked;
use crate::graph::{neighbors, GraphView, Vertex};
use crate::succinct::{BitVec, ChoiceDict};

/// Layered BFS from `roots`, never entering vertices for which `skip` holds.
///
/// `visit(v, layer)` is called once per reached vertex, layers in
/// nondecreasing order. Storage is a visited bit per vertex plus two choice
/// dictionaries holding the current and the next layer.
pub fn bfs<V, F>(view: &V, roots: &[Vertex], skip: F, mut visit: impl FnMut(Vertex, usize)) -> usize
where
    V: GraphView + ?Sized,
    F: Fn(Vertex) -> bool,
{
    let n = view.order();
    let mut seen = BitVec::new(n);
    let mut current = ChoiceDict::new(n);
    let mut next = ChoiceDict::new(n);
    let _bits = Tracked::new(
        "traversal.bfs",
        seen.size_in_bits() + current.size_in_bits() + next.size_in_bits(),
    );
    let mut reached = 0;
    for &r in roots {
        if !skip(r) && !seen.get(r) {
            seen.set(r);
            current.add(r);
        }
    }
    let mut layer = 0;
    while !current.is_empty() {
        for v in current.iter() {
            visit(v, layer);
            reached += 1;
            for w in neighbors(view, v) {
                if !seen.get(w) && !skip(w) {
                    seen.set(w);
                    next.add(w);
                }
            }
        }
        current.clear();
        std::mem::swap(&mut current, &mut next);
        layer += 1;
    }
    reached
}

/// Vertices reachable from `roots` avoiding `skip`, as a bit vector.
pub fn reachable<V, F>(view: &V, roots: &[Vertex], skip: F) -> BitVec
where
    V: GraphView + ?Sized,
    F: Fn(Vertex) -> bool,
{
    let mut out = BitVec::new(view.order());
    bfs(view, roots, skip, |v, _| out.set(v));
    out
}
