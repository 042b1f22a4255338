use std::ops::ControlFlow;

use super::chordless::strip_chords;
use super::work::{Residual, WorkingFamily};
use super::Terminals;
use crate::graph::{GraphView, Vertex};
use crate::succinct::BitVec;
use crate::traversal::{Dfs, DfsEvent};

/// A chordless path from `s + n` to `t` in the residual split graph, kept as
/// one bit per split vertex.
#[derive(Clone, Debug)]
pub struct AugmentingPath {
    kept: BitVec,
}

impl AugmentingPath {
    /// Split vertices in path order (`v` is an in-copy, `v + n` an out-copy).
    pub fn split_vertices<V: GraphView + ?Sized>(&self, res: &Residual<'_, '_, '_, V>) -> Vec<Vertex> {
        let mut out = Vec::new();
        self.clone().walk(res, |x, _, _| out.push(x));
        let n = res.inner();
        out.push(res.terminals().t);
        debug_assert!(out[0] == res.terminals().s + n);
        out
    }

    /// The original vertices visited, collapsing consecutive copies.
    pub fn vertices<V: GraphView + ?Sized>(&self, res: &Residual<'_, '_, '_, V>) -> Vec<Vertex> {
        let n = res.inner();
        let mut out: Vec<Vertex> = Vec::new();
        for x in self.split_vertices(res) {
            let v = x % n;
            if out.last() != Some(&v) {
                out.push(v);
            }
        }
        out
    }

    /// Consume the path arc by arc as `(from, to, slot of to in from's list)`.
    pub(crate) fn walk<V: GraphView + ?Sized>(
        mut self,
        res: &Residual<'_, '_, '_, V>,
        mut on: impl FnMut(Vertex, Vertex, usize),
    ) {
        let n = res.inner();
        let inst = res.terminals();
        let (mut cur, target) = (inst.s + n, inst.t);
        self.kept.clear(cur);
        while cur != target {
            let kept = &self.kept;
            let (slot, next) = res.find_slot(cur, |h| kept.get(h)).expect("kept vertices form a path");
            self.kept.clear(next);
            on(cur, next, slot);
            cur = next;
        }
    }
}

/// Search the residual graph of the stored family for an s-t path and strip
/// its chords. None means the family is a maximum one.
pub fn augment<V: GraphView + ?Sized>(
    inst: &Terminals<'_, V>,
    fam: &WorkingFamily<'_>,
) -> Option<AugmentingPath> {
    let res = Residual::new(*inst, fam);
    let n = inst.n();
    let mut dfs = Dfs::new(&res);
    dfs.exclude(res.dead());
    let target = inst.t;
    let flow = dfs.run(inst.s + n, &mut |e| match e {
        DfsEvent::Pre { v, .. } if v == target => ControlFlow::Break(()),
        _ => ControlFlow::Continue(()),
    });
    if flow.is_continue() {
        return None;
    }
    let kept = strip_chords(&mut dfs, 2 * n + 1, |c, buf| res.candidates(c, buf), |x, y| res.has_arc(x, y));
    Some(AugmentingPath { kept })
}

/// Split vertices reachable from `s + n` in the residual graph.
pub(crate) fn residual_reach<V: GraphView + ?Sized>(inst: &Terminals<'_, V>, fam: &WorkingFamily<'_>) -> BitVec {
    let res = Residual::new(*inst, fam).with_unbounded_edges();
    let n = inst.n();
    let mut dfs = Dfs::new(&res);
    dfs.exclude(res.dead());
    let _ = dfs.run(inst.s + n, &mut |_| ControlFlow::Continue(()));
    let mut reach = BitVec::new(2 * n);
    for x in 0..2 * n {
        if dfs.is_visited(x) {
            reach.set(x);
        }
    }
    reach
}
