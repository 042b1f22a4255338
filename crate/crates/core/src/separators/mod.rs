//! Balanced separators.
//!
//! An X-separator is found by trying splits of X into two sides and a part
//! that joins the separator, and asking the paths engine for a small cut
//! between the two sides. A guided phase first grows two regions from far
//! apart seeds, moving the cut towards the lighter region. If that finds
//! nothing, splits are searched depth first: a partial split whose sides
//! already need a larger cut than the remaining room is never extended, and
//! every partial split with a small enough cut is offered to the caller's
//! acceptance test right away.

use thiserror::Error;

use crate::budget::Tracked;
use crate::decomposition::component_extremes;
use crate::graph::{neighbors, GraphView, Vertex, WithTerminals};
use crate::paths::{st_separator, PathsError, Terminals};
use crate::succinct::BitVec;
use crate::traversal::{bfs, compute_r, reachable};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeparatorError {
    #[error("vertex {vertex} outside 0..{n}")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("terminal set is not strictly ascending")]
    Unsorted,
    #[error(transparent)]
    Paths(#[from] PathsError),
}

/// `ceil(2x/3)`, the balance limit used throughout.
pub fn two_thirds(x: usize) -> usize {
    (2 * x).div_ceil(3)
}

/// A split of X: two sides to be separated and the vertices put into the
/// separator directly.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct XSplit {
    pub left: Vec<Vertex>,
    pub right: Vec<Vertex>,
    pub held: Vec<Vertex>,
}

/// Size limits on a split of `x_len` vertices.
#[derive(Clone, Copy, Debug)]
pub struct SplitRules {
    pub max_held: usize,
    pub max_side: usize,
}

impl SplitRules {
    pub fn new(x_len: usize, k: usize) -> Self {
        SplitRules { max_held: k, max_side: k.max(two_thirds(x_len)) }
    }

    pub fn admits(&self, split: &XSplit) -> bool {
        split.held.len() <= self.max_held && split.left.len() <= self.max_side && split.right.len() <= self.max_side
    }
}

/// Every split of `x` allowed by the size rules, in ternary counter order:
/// `x[i]` is digit `i` (least significant first), 0 left, 1 right, 2 held.
pub fn admissible_splits(x: &[Vertex], k: usize) -> Vec<XSplit> {
    let rules = SplitRules::new(x.len(), k);
    let total = 3usize.pow(x.len() as u32);
    (0..total)
        .map(|mut code| {
            let mut split = XSplit::default();
            for &v in x {
                match code % 3 {
                    0 => split.left.push(v),
                    1 => split.right.push(v),
                    _ => split.held.push(v),
                }
                code /= 3;
            }
            split
        })
        .filter(|s| rules.admits(s))
        .collect()
}

enum Probe {
    TooWide,
    Found(BitVec),
    /// A small enough cut that the caller does not accept.
    Open,
}

/// Counters of one split search.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: usize,
    pub cuts: usize,
    /// Whether the accepted split came from the guided phase.
    pub guided: bool,
}

struct SplitSearch<'a, V: ?Sized, A> {
    view: &'a V,
    terms: &'a [Vertex],
    fixed: &'a BitVec,
    weight: Option<&'a BitVec>,
    budget: usize,
    rules: SplitRules,
    accept: A,
    split: XSplit,
    stats: SearchStats,
}

impl<V: GraphView + ?Sized, A: FnMut(&BitVec) -> bool> SplitSearch<'_, V, A> {
    fn separator_with(&self, cut: Option<&BitVec>) -> BitVec {
        let n = self.view.order();
        let mut sep = BitVec::new(n);
        for &v in &self.split.held {
            sep.set(v);
        }
        if let Some(cut) = cut {
            for v in cut.iter_ones().filter(|&v| v < n) {
                sep.set(v);
            }
        }
        sep
    }

    /// Minimum cut between the two sides, taken closest to each side in turn.
    fn probe(&mut self) -> Result<Probe, SeparatorError> {
        let n = self.view.order();
        let room = self.budget - self.split.held.len();
        let mut removed = BitVec::new(n + 2);
        for v in self.fixed.iter_ones().chain(self.split.held.iter().copied()) {
            removed.set(v);
        }
        for flip in [false, true] {
            let (a, b) = if flip { (&self.split.right, &self.split.left) } else { (&self.split.left, &self.split.right) };
            let joined = WithTerminals::new(self.view, a, b);
            let inst = Terminals::new(&joined, joined.source(), joined.sink())?.with_removed(&removed);
            self.stats.cuts += 1;
            let cut = match st_separator(inst, room) {
                Ok(cut) => cut,
                Err(PathsError::ConnectivityExceeds(_)) => return Ok(Probe::TooWide),
                Err(e) => return Err(e.into()),
            };
            let sep = self.separator_with(Some(&cut));
            if (self.accept)(&sep) {
                return Ok(Probe::Found(sep));
            }
        }
        Ok(Probe::Open)
    }

    fn weigh(&self, region: &BitVec) -> usize {
        match self.weight {
            Some(w) => region.iter_ones().filter(|&v| w.get(v)).count(),
            None => region.count_ones(),
        }
    }

    /// Minimum cut between two disjoint vertex sets that avoids both, taken
    /// closest to `from`. The sets are removed and their outer neighbours
    /// attached to the terminals; a vertex next to both must be cut.
    fn region_cut(&mut self, from: &BitVec, to: &BitVec) -> Result<Option<BitVec>, SeparatorError> {
        let n = self.view.order();
        let mut removed = BitVec::new(n + 2);
        for v in self.fixed.iter_ones().chain(from.iter_ones()).chain(to.iter_ones()) {
            removed.set(v);
        }
        let outer = |set: &BitVec| {
            let mut out = BitVec::new(n);
            for v in set.iter_ones() {
                for w in neighbors(self.view, v) {
                    if !removed.get(w) {
                        out.set(w);
                    }
                }
            }
            out
        };
        let (near_from, near_to) = (outer(from), outer(to));
        if from.iter_ones().any(|v| neighbors(self.view, v).any(|w| to.get(w))) {
            return Ok(None);
        }
        let mut forced = BitVec::new(n);
        let mut ends: [Vec<Vertex>; 2] = [Vec::new(), Vec::new()];
        for v in near_from.iter_ones() {
            if near_to.get(v) {
                forced.set(v);
            } else {
                ends[0].push(v);
            }
        }
        ends[1].extend(near_to.iter_ones().filter(|&v| !near_from.get(v)));
        let room = match self.budget.checked_sub(forced.count_ones()) {
            Some(room) => room,
            None => return Ok(None),
        };
        let _bits = Tracked::new(
            "separators.regions",
            3 * near_from.size_in_bits() + 64 * (ends[0].len() + ends[1].len()) as u64,
        );
        for v in forced.iter_ones() {
            removed.set(v);
        }
        let joined = WithTerminals::new(self.view, &ends[0], &ends[1]);
        let inst = Terminals::new(&joined, joined.source(), joined.sink())?.with_removed(&removed);
        self.stats.cuts += 1;
        match st_separator(inst, room) {
            Ok(cut) => {
                for v in cut.iter_ones().filter(|&v| v < n) {
                    forced.set(v);
                }
                Ok(Some(forced))
            }
            Err(PathsError::ConnectivityExceeds(_)) => Ok(None),
            Err(e) => Err(e.into()),
        }
    }

    /// Grow two vertex sets from a pair of seeds. Each round takes the cut
    /// closest to either set; the set that reaches less weight before its
    /// cut absorbs everything it reaches plus one cut vertex, preferring a
    /// cut vertex with no neighbour on the other set's side. Stops when a
    /// cut is accepted or the sets need too wide a cut.
    fn pierce(&mut self, a: Vertex, b: Vertex) -> Result<Option<BitVec>, SeparatorError> {
        let n = self.view.order();
        let mut sides = [BitVec::from_positions(n, [a]), BitVec::from_positions(n, [b])];
        loop {
            self.stats.nodes += 1;
            let mut cuts = Vec::with_capacity(2);
            let mut reach = Vec::with_capacity(2);
            for i in 0..2 {
                let Some(cut) = self.region_cut(&sides[i], &sides[1 - i])? else {
                    return Ok(None);
                };
                if (self.accept)(&cut) {
                    return Ok(Some(cut));
                }
                let roots: Vec<Vertex> = sides[i].iter_ones().collect();
                let mut region = reachable(self.view, &roots, |v| self.fixed.get(v) || cut.get(v));
                region.union_with(&sides[i]);
                reach.push(region);
                cuts.push(cut);
            }
            let key = |r: &BitVec| (self.weigh(r), r.count_ones());
            let grow = usize::from(key(&reach[1]) < key(&reach[0]));
            let other = &reach[1 - grow];
            let Some(pierced) = self.pick_pierce(&reach[grow], other, &cuts[grow]) else {
                return Ok(None);
            };
            log::trace!(
                "pierce reach {}/{}, growing side {grow} at {pierced}",
                self.weigh(&reach[0]),
                self.weigh(&reach[1])
            );
            let mut grown = reach.swap_remove(grow);
            grown.set(pierced);
            sides[grow] = grown;
        }
    }

    /// A vertex to add to `grown`: a cut vertex outside it, else a neighbour
    /// of it, preferring one with no neighbour in `other`.
    fn pick_pierce(&self, grown: &BitVec, other: &BitVec, cut: &BitVec) -> Option<Vertex> {
        let free = |v: Vertex| !grown.get(v) && !other.get(v) && !self.fixed.get(v);
        let quiet = |v: Vertex| !neighbors(self.view, v).any(|w| other.get(w));
        let mut candidates: Vec<Vertex> = cut.iter_ones().filter(|&v| free(v)).collect();
        if candidates.is_empty() {
            candidates = grown.iter_ones().flat_map(|u| neighbors(self.view, u)).filter(|&v| free(v)).collect();
        }
        candidates.iter().copied().find(|&v| quiet(v)).or_else(|| candidates.first().copied())
    }

    /// Seed pairs: each term with the term farthest from it.
    fn guided(&mut self, seeds: usize) -> Result<Option<BitVec>, SeparatorError> {
        if self.terms.len() < 2 {
            return Ok(None);
        }
        let n = self.view.order();
        let mut is_term = BitVec::new(n);
        for &v in self.terms {
            is_term.set(v);
        }
        let mut tried = Vec::new();
        for &a in self.terms.iter().take(seeds) {
            let mut far = None;
            bfs(self.view, &[a], |v| self.fixed.get(v), |v, _| {
                if v != a && is_term.get(v) {
                    far = Some(v);
                }
            });
            let Some(b) = far else { continue };
            let pair = (a.min(b), a.max(b));
            if tried.contains(&pair) {
                continue;
            }
            tried.push(pair);
            if let Some(sep) = self.pierce(a, b)? {
                self.stats.guided = true;
                return Ok(Some(sep));
            }
        }
        self.split = XSplit::default();
        Ok(None)
    }

    fn descend(&mut self, i: usize) -> Result<Option<BitVec>, SeparatorError> {
        self.stats.nodes += 1;
        if !self.split.left.is_empty() && !self.split.right.is_empty() {
            match self.probe()? {
                Probe::TooWide => return Ok(None),
                Probe::Found(sep) => return Ok(Some(sep)),
                Probe::Open => {}
            }
        } else if i == self.terms.len() {
            let sep = self.separator_with(None);
            return Ok((self.accept)(&sep).then_some(sep));
        }
        if i == self.terms.len() {
            return Ok(None);
        }
        let v = self.terms[i];
        if self.split.left.len() < self.rules.max_side {
            self.split.left.push(v);
            let found = self.descend(i + 1)?;
            self.split.left.pop();
            if found.is_some() {
                return Ok(found);
            }
        }
        // the mirror image of every split with an empty left side is tried already
        if !self.split.left.is_empty() && self.split.right.len() < self.rules.max_side {
            self.split.right.push(v);
            let found = self.descend(i + 1)?;
            self.split.right.pop();
            if found.is_some() {
                return Ok(found);
            }
        }
        if self.split.held.len() < self.rules.max_held {
            self.split.held.push(v);
            let found = self.descend(i + 1)?;
            self.split.held.pop();
            if found.is_some() {
                return Ok(found);
            }
        }
        Ok(None)
    }
}

fn check_terms(n: usize, x: &[Vertex]) -> Result<(), SeparatorError> {
    if let Some(&v) = x.iter().find(|&&v| v >= n) {
        return Err(SeparatorError::VertexOutOfRange { vertex: v, n });
    }
    if x.windows(2).any(|w| w[0] >= w[1]) {
        return Err(SeparatorError::Unsorted);
    }
    Ok(())
}

/// Options of a split search.
#[derive(Clone, Copy, Debug)]
pub struct SearchOptions<'a> {
    /// Split size rules are those for this `k`.
    pub k: usize,
    /// Largest separator, counting held terms and the cut.
    pub budget: usize,
    /// Vertices that count when comparing the two sides; all if absent.
    pub weight: Option<&'a BitVec>,
    /// Seed pairs tried by the guided phase before the exhaustive one.
    pub seeds: usize,
}

/// Search splits of `terms` for a separator that `accept` takes. Vertices
/// of `fixed` are treated as already removed and do not count against the
/// budget.
///
/// A guided phase grows the two sides from a few seed pairs, moving the cut
/// towards the lighter side; if it finds nothing, all admissible splits are
/// searched depth first in counter order, pruning partial splits whose
/// sides cannot be cut within the budget.
pub fn search_splits<V, A>(
    view: &V,
    terms: &[Vertex],
    fixed: &BitVec,
    options: SearchOptions<'_>,
    accept: A,
) -> Result<(Option<BitVec>, SearchStats), SeparatorError>
where
    V: GraphView + ?Sized,
    A: FnMut(&BitVec) -> bool,
{
    check_terms(view.order(), terms)?;
    let rules = SplitRules::new(terms.len(), options.k);
    let mut search = SplitSearch {
        view,
        terms,
        fixed,
        weight: options.weight,
        budget: options.budget,
        rules,
        accept,
        split: XSplit::default(),
        stats: SearchStats::default(),
    };
    if let Some(sep) = search.guided(options.seeds)? {
        return Ok((Some(sep), search.stats));
    }
    let found = search.descend(0)?;
    Ok((found, search.stats))
}

/// Seed pairs tried before the exhaustive search.
pub const GUIDED_SEEDS: usize = 16;

fn marks(n: usize, x: &[Vertex]) -> BitVec {
    BitVec::from_positions(n, x.iter().copied())
}

/// A separator of at most `k + 1` vertices leaving no component with more
/// than `ceil(2|X|/3)` vertices of `x`. `x` must be strictly ascending.
pub fn x_separator<V: GraphView + ?Sized>(view: &V, x: &[Vertex], k: usize) -> Result<Option<BitVec>, SeparatorError> {
    let n = view.order();
    check_terms(n, x)?;
    if x.is_empty() {
        return Ok(Some(BitVec::new(n)));
    }
    let in_x = marks(n, x);
    let limit = two_thirds(x.len());
    let none = BitVec::new(n);
    let accept = |sep: &BitVec| component_extremes(view, sep, Some(&in_x)).1 <= limit;
    let options = SearchOptions { k, budget: k + 1, weight: Some(&in_x), seeds: GUIDED_SEEDS };
    let (found, stats) = search_splits(view, x, &none, options, accept)?;
    log::debug!("x-separator over {} vertices: {:?}", x.len(), stats);
    Ok(found)
}

/// A separator balanced with respect to both `X` and all vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalancedSeparator {
    set: BitVec,
    x_part: usize,
    r_part: usize,
}

impl BalancedSeparator {
    pub fn set(&self) -> &BitVec {
        &self.set
    }

    pub fn into_set(self) -> BitVec {
        self.set
    }

    pub fn len(&self) -> usize {
        self.set.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Vertices contributed by the X-separator.
    pub fn x_part(&self) -> usize {
        self.x_part
    }

    /// Vertices added for vertex balance.
    pub fn r_part(&self) -> usize {
        self.r_part
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.set.iter_ones()
    }
}

/// Vertex threshold for the spread set used for vertex balance.
pub fn spread_threshold(n: usize, k: usize) -> usize {
    n.div_ceil(8 * k + 6).max(1)
}

/// A separator of at most `2k + 2` vertices leaving no component with more
/// than `ceil(2|X|/3)` vertices of `x` or `ceil(2n/3)` vertices overall.
///
/// The X-part comes from [`x_separator`]; the rest separates a spread set of
/// at most `8k + 6` vertices, each standing for a DFS subtree of about
/// `n / (8k + 6)` vertices, until every component is small.
pub fn balanced_x_separator<V: GraphView + ?Sized>(
    view: &V,
    x: &[Vertex],
    k: usize,
) -> Result<Option<BalancedSeparator>, SeparatorError> {
    let n = view.order();
    let Some(first) = x_separator(view, x, k)? else {
        return Ok(None);
    };
    let x_part = first.count_ones();
    let limit = two_thirds(n);
    let balanced = |sep: &BitVec| {
        let mut all = sep.clone();
        all.union_with(&first);
        component_extremes(view, &all, None).0 <= limit
    };
    if balanced(&BitVec::new(n)) {
        return Ok(Some(BalancedSeparator { set: first, x_part, r_part: 0 }));
    }
    let spread = compute_r(view, spread_threshold(n, k));
    let terms: Vec<Vertex> = spread.iter_ones().filter(|&v| !first.get(v)).collect();
    let options = SearchOptions { k, budget: k + 1, weight: None, seeds: GUIDED_SEEDS };
    let (found, stats) = search_splits(view, &terms, &first, options, balanced)?;
    log::debug!(
        "vertex balance over {} spread vertices: {:?}", terms.len(), stats);
    Ok(found.map(|second| {
        let r_part = second.count_ones();
        let mut set = second;
        set.union_with(&first);
        log::debug!("balanced separator: {x_part} + {r_part} vertices");
        BalancedSeparator { set, x_part, r_part }
    }))
}

/// Measured properties of a separator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SeparatorAudit {
    pub size: usize,
    pub largest_component: usize,
    pub most_marked_in_component: usize,
}

impl SeparatorAudit {
    pub fn of<V: GraphView + ?Sized>(view: &V, x: &[Vertex], sep: &BitVec) -> Self {
        let in_x = marks(view.order(), x);
        let (largest_component, most_marked_in_component) = component_extremes(view, sep, Some(&in_x));
        SeparatorAudit { size: sep.count_ones(), largest_component, most_marked_in_component }
    }

    /// Size at most `2k + 2` and both balance limits met.
    pub fn is_balanced(&self, n: usize, x_len: usize, k: usize) -> bool {
        self.size <= 2 * k + 2 && self.largest_component <= two_thirds(n) && self.most_marked_in_component <= two_thirds(x_len)
    }
}
