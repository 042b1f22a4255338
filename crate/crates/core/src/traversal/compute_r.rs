use crate::budget::Tracked;
use crate::graph::GraphView;
use crate::succinct::{BalParen, BitVec};

use super::dfs::{dfs_forest, DfsEvent};

/// Mark the vertices whose DFS subtree, after discounting subtrees already
/// marked below them, holds more than `threshold` vertices.
///
/// Runs in three passes: a DFS forest writes its balanced-parentheses shape,
/// a sweep over the closing parentheses writes each subtree count in unary
/// inside its own parentheses span (resetting to zero on a mark), and a
/// second DFS maps marked parenthesis positions back to vertex ids.
pub fn compute_r<V: GraphView + ?Sized>(view: &V, threshold: usize) -> BitVec {
    assert!(threshold >= 1, "threshold must be positive");
    let n = view.order();
    if n == 0 {
        return BitVec::new(0);
    }

    let mut shape = BitVec::new(2 * n);
    let mut pos = 0;
    dfs_forest(view, |e| match e {
        DfsEvent::Pre { .. } => {
            shape.set(pos);
            pos += 1;
        }
        DfsEvent::Post { .. } => pos += 1,
        DfsEvent::Back { .. } => {}
    });
    let parens = BalParen::new(shape).expect("a DFS forest is balanced");

    let mut counts = BitVec::new(2 * n);
    let mut marked_at = BitVec::new(2 * n);
    let _bits = Tracked::new(
        "traversal.compute_r",
        parens.size_in_bits() + counts.size_in_bits() + marked_at.size_in_bits(),
    );
    let read = |a: &BitVec, at: usize| (at..).take_while(|&i| a.get(i)).count();
    for close in 0..2 * n {
        if parens.is_open(close) {
            continue;
        }
        let open = parens.findopen(close).expect("balanced");
        let mut below = 0;
        let mut child = open + 1;
        while child < close {
            let c = read(&counts, child);
            for i in child..child + c {
                counts.clear(i);
            }
            below += c;
            child = parens.findclose(child).expect("balanced") + 1;
        }
        if below + 1 > threshold {
            marked_at.set(open);
        } else {
            for i in open..open + below + 1 {
                counts.set(i);
            }
        }
    }

    let mut marked = BitVec::new(n);
    let mut pos = 0;
    dfs_forest(view, |e| match e {
        DfsEvent::Pre { v, .. } => {
            if marked_at.get(pos) {
                marked.set(v);
            }
            pos += 1;
        }
        DfsEvent::Post { .. } => pos += 1,
        DfsEvent::Back { .. } => {}
    });
    marked
}
