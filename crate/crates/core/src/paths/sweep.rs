use std::collections::VecDeque;

use super::augment::AugmentingPath;
use super::scheme::after;
use super::work::{Residual, WorkingFamily};
use super::{PathsError, Terminals};
use crate::budget::Tracked;
use crate::graph::{GraphView, Vertex};
use crate::succinct::{bits_for, BitVec, IntVec, VarVec};

/// Paths after merging an augmenting path: surviving vertices, and for each
/// of them the adjacency index of its successor. Internally disjoint, but
/// possibly with chords and deadlocks.
pub(crate) struct WeakFamily {
    alive: BitVec,
    succ: VarVec,
    firsts: Vec<Vertex>,
    _bits: Tracked,
}

impl WeakFamily {
    pub(crate) fn merge<V: GraphView + ?Sized>(
        inst: &Terminals<'_, V>,
        fam: &WorkingFamily<'_>,
        path: AugmentingPath,
    ) -> Self {
        let n = inst.n();
        let mut succ = VarVec::new((0..n).map(|v| bits_for(inst.degree(v) as u64)));
        let mut alive = BitVec::new(n);
        for v in 0..n {
            if fam.on_path(v) {
                alive.set(v);
                let j = inst
                    .neighbors(v)
                    .position(|w| fam.precedes(inst, v, w))
                    .expect("stored path vertices have a successor");
                succ.set(v, j as u64);
            }
        }
        let mut firsts = fam.scheme().firsts().to_vec();
        let res = Residual::new(*inst, fam);
        path.walk(&res, |x, y, slot| {
            if x >= n && y < n {
                let (v, w) = (x - n, y);
                if v == w {
                    alive.clear(v);
                } else if v == inst.s {
                    firsts.push(w);
                } else {
                    succ.set(v, slot as u64);
                }
            } else if x < n && y >= n {
                let (v, w) = (x, y - n);
                if v == w {
                    alive.set(v);
                } else if w == inst.s {
                    firsts.retain(|&f| f != v);
                }
            }
        });
        let bits = Tracked::new("paths.merge", alive.size_in_bits() + succ.size_in_bits() + 64 * firsts.len() as u64);
        WeakFamily { alive, succ, firsts, _bits: bits }
    }

    fn next<V: GraphView + ?Sized>(&self, inst: &Terminals<'_, V>, v: Vertex) -> Vertex {
        inst.nth(v, self.succ.get(v) as usize)
    }

    /// Remove the vertices strictly between `from` and `until`.
    fn drop_between<V: GraphView + ?Sized>(&mut self, inst: &Terminals<'_, V>, from: Vertex, until: Vertex) {
        let mut v = self.next(inst, from);
        while v != until {
            self.alive.clear(v);
            v = self.next(inst, v);
        }
    }
}

/// A good family laid out for a new scheme.
pub(crate) struct Layout {
    pub numbering: IntVec,
    pub col: IntVec,
    pub boundary: BitVec,
    pub firsts: Vec<Vertex>,
    pub lasts: Vec<Vertex>,
}

#[derive(Clone, Copy, Debug)]
struct Dependency {
    front: usize,
    target: Vertex,
    slot: usize,
    short: bool,
}

/// Sweep a separator of one front vertex per path from s to t.
///
/// A front moves to its successor once it has no other neighbour ahead of
/// the sweep; fronts whose only such neighbours are each other's successors
/// move together. Chords to the own path or to t are shortcut on the way,
/// and when every front waits on a vertex further down another path, a
/// cycle of waiting fronts is rerouted along the edges they wait on. The
/// result is chordless and has no extended deadlock. Every time more than
/// `stride` vertices have been passed, the current fronts join the boundary.
pub(crate) fn sweep<V: GraphView + ?Sized>(
    inst: &Terminals<'_, V>,
    weak: &mut WeakFamily,
    stride: usize,
) -> Result<Layout, PathsError> {
    let n = inst.n();
    let t = inst.t;
    let mut near_s = BitVec::new(n);
    for w in inst.neighbors(inst.s) {
        near_s.set(w);
    }
    // shortcut chords from s
    let mut firsts = std::mem::take(&mut weak.firsts);
    for f in firsts.iter_mut() {
        let mut last = *f;
        let mut v = *f;
        while v != t {
            if near_s.get(v) {
                last = v;
            }
            v = weak.next(inst, v);
        }
        let mut v = *f;
        while v != last {
            weak.alive.clear(v);
            v = weak.next(inst, v);
        }
        *f = last;
    }
    drop(near_s);
    firsts.sort_unstable();
    let paths = firsts.len();
    let width = bits_for(paths as u64);
    let mut col = IntVec::new(n, width);
    for (i, &f) in firsts.iter().enumerate() {
        let mut v = f;
        while v != t {
            col.set(v, i as u64 + 1);
            v = weak.next(inst, v);
        }
    }
    // merging may leave cycles that no path from s runs through
    for v in 0..n {
        if weak.alive.get(v) && col.get(v) == 0 {
            weak.alive.clear(v);
        }
    }
    let mut numbering = IntVec::new(n, 2);
    let mut passed = BitVec::new(n);
    let mut boundary = BitVec::new(n);
    let _bits = Tracked::new(
        "paths.sweep",
        col.size_in_bits() + numbering.size_in_bits() + passed.size_in_bits() + boundary.size_in_bits(),
    );
    let mut front = firsts.clone();
    // suffix[i]: which original path continues after front i; owner is its inverse
    let mut suffix: Vec<usize> = (0..paths).collect();
    let mut owner: Vec<usize> = (0..paths).collect();
    for &f in &firsts {
        passed.set(f);
        numbering.set(f, 1);
    }
    let mut dirty = vec![true; paths];
    let mut since = 0usize;
    let mut deps: Vec<Vec<Dependency>> = vec![Vec::new(); paths];
    loop {
        for i in 0..paths {
            if dirty[i] {
                dirty[i] = false;
                shortcut(inst, weak, front[i], |w| {
                    !passed.get(w) && owner[col.get(w) as usize - 1] == i
                });
            }
        }
        let finished: Vec<bool> = front.iter().map(|&u| weak.next(inst, u) == t).collect();
        if finished.iter().all(|&f| f) {
            break;
        }
        for i in 0..paths {
            deps[i].clear();
            if finished[i] {
                continue;
            }
            for (slot, w) in inst.neighbors(front[i]).enumerate() {
                if !weak.alive.get(w) || passed.get(w) {
                    continue;
                }
                let j = owner[col.get(w) as usize - 1];
                if j == i {
                    debug_assert_eq!(w, weak.next(inst, front[i]), "own-path chords are shortcut first");
                    continue;
                }
                let short = w == weak.next(inst, front[j]);
                deps[i].push(Dependency { front: j, target: w, slot, short });
            }
        }
        if let Some(group) = (0..paths).filter(|&i| !finished[i]).find_map(|i| movable(&deps, i)) {
            for m in group {
                let w = weak.next(inst, front[m]);
                passed.set(w);
                numbering.set(w, after(numbering.get(front[m])));
                col.set(w, m as u64 + 1);
                front[m] = w;
                dirty[m] = true;
                since += 1;
            }
            if since > stride {
                for &u in &front {
                    boundary.set(u);
                }
                since = 0;
            }
            continue;
        }
        let cycle = waiting_cycle(&deps).ok_or(PathsError::SweepStalled)?;
        for d in cycle.iter().map(|&(_, d)| d) {
            weak.drop_between(inst, front[d.front], d.target);
        }
        let old = suffix.clone();
        for &(i, d) in &cycle {
            weak.succ.set(front[i], d.slot as u64);
            suffix[i] = old[d.front];
            owner[suffix[i]] = i;
            dirty[i] = true;
        }
        log::trace!("rerouted a cycle of {} fronts", cycle.len());
    }
    for v in 0..n {
        if !passed.get(v) {
            col.set(v, 0);
        }
    }
    Ok(Layout { numbering, col, boundary, firsts, lasts: front })
}

/// Shortcut the path after `u` to t or to the farthest own-path neighbour.
fn shortcut<V: GraphView + ?Sized>(
    inst: &Terminals<'_, V>,
    weak: &mut WeakFamily,
    u: Vertex,
    own: impl Fn(Vertex) -> bool,
) {
    let t = inst.t;
    if weak.next(inst, u) == t {
        return;
    }
    if let Some(slot) = inst.neighbors(u).position(|w| w == t) {
        weak.drop_between(inst, u, t);
        weak.succ.set(u, slot as u64);
        return;
    }
    let targets: Vec<(usize, Vertex)> = inst.neighbors(u).enumerate().collect();
    for (slot, w) in targets {
        if weak.alive.get(w) && own(w) && w != weak.next(inst, u) {
            weak.drop_between(inst, u, w);
            weak.succ.set(u, slot as u64);
        }
    }
}

/// Fronts reachable from `i` over short dependencies, if none of them waits
/// on a vertex beyond another front's successor.
fn movable(deps: &[Vec<Dependency>], i: usize) -> Option<Vec<usize>> {
    let mut group = vec![i];
    let mut seen = vec![false; deps.len()];
    seen[i] = true;
    let mut k = 0;
    while k < group.len() {
        for d in &deps[group[k]] {
            if !d.short {
                return None;
            }
            if !seen[d.front] {
                seen[d.front] = true;
                group.push(d.front);
            }
        }
        k += 1;
    }
    group.sort_unstable();
    Some(group)
}

/// A simple cycle of dependencies through at least one long one, as
/// `(waiting front, dependency)` pairs.
fn waiting_cycle(deps: &[Vec<Dependency>]) -> Option<Vec<(usize, Dependency)>> {
    let fronts = deps.len();
    for a in 0..fronts {
        for long in deps[a].iter().filter(|d| !d.short) {
            let b = long.front;
            let mut parent: Vec<Option<(usize, Dependency)>> = vec![None; fronts];
            let mut seen = vec![false; fronts];
            seen[b] = true;
            let mut queue = VecDeque::from([b]);
            while let Some(x) = queue.pop_front() {
                if x == a {
                    break;
                }
                for d in &deps[x] {
                    let better = deps[x].iter().find(|e| e.front == d.front && e.short).unwrap_or(d);
                    if !seen[d.front] {
                        seen[d.front] = true;
                        parent[d.front] = Some((x, *better));
                        queue.push_back(d.front);
                    }
                }
            }
            if !seen[a] {
                continue;
            }
            let mut cycle = vec![(a, *long)];
            let mut x = a;
            while x != b {
                let (p, d) = parent[x].expect("bfs tree edge");
                cycle.push((p, d));
                x = p;
            }
            return Some(cycle);
        }
    }
    None
}
