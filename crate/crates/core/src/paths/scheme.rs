use std::collections::VecDeque;

use super::{stride, PathNumbering, PathsError, Terminals};
use crate::budget::Tracked;
use crate::graph::{GraphView, Vertex};
use crate::succinct::{bits_for, BitVec, Census, IntVec, StaticAlloc};

#[inline]
pub(crate) fn after(label: u64) -> u64 {
    label % 3 + 1
}

/// Storage for a family of chordless, internally disjoint s-t paths.
///
/// `numbering` holds the 1,2,3 labels of every path vertex, `boundary` a
/// sparse vertex set whose colours sit in `colors`. Path vertices outside
/// the boundary fall into small regions, and a region's subpaths and their
/// colours are recomputed by [`super::region_paths`] on demand. The path
/// whose first vertex is the `i`-th smallest neighbour of s has colour `i`.
#[derive(Debug)]
pub struct PathDataScheme {
    numbering: IntVec,
    boundary: BitVec,
    colors: StaticAlloc,
    firsts: Vec<Vertex>,
    lasts: Vec<Vertex>,
    stride: usize,
    bits: Tracked,
}

/// One region's subpaths, each with its colour.
pub type RegionDecode = Vec<(usize, Vec<Vertex>)>;

impl PathDataScheme {
    pub(crate) fn empty(n: usize, stride: usize) -> Self {
        Self::assemble(IntVec::new(n, 2), BitVec::new(n), &IntVec::new(n, 1), Vec::new(), Vec::new(), stride)
    }

    fn assemble(
        numbering: IntVec,
        boundary: BitVec,
        col: &IntVec,
        firsts: Vec<Vertex>,
        lasts: Vec<Vertex>,
        stride: usize,
    ) -> Self {
        let mut census = Census::new(boundary.len());
        for b in boundary.iter_ones() {
            census.mark(b);
        }
        let mut colors = census.finish(bits_for(firsts.len() as u64));
        for b in boundary.iter_ones() {
            colors.set(b, col.get(b)).expect("boundary vertices are keys");
        }
        let size = numbering.size_in_bits()
            + boundary.size_in_bits()
            + colors.size_in_bits()
            + 64 * (firsts.len() + lasts.len()) as u64;
        PathDataScheme { numbering, boundary, colors, firsts, lasts, stride, bits: Tracked::new("paths.scheme", size) }
    }

    /// Build from a numbering and the true colours, adding large-degree
    /// vertices to the boundary. Regions the flow routine would decode
    /// wrongly are moved into the boundary as a whole.
    pub(crate) fn build<V: GraphView + ?Sized>(
        inst: &Terminals<'_, V>,
        numbering: IntVec,
        col: &IntVec,
        mut boundary: BitVec,
        mut firsts: Vec<Vertex>,
        mut lasts: Vec<Vertex>,
        stride: usize,
    ) -> Self {
        firsts.sort_unstable();
        lasts.sort_unstable();
        let n = inst.n();
        for v in 0..n {
            if numbering.get(v) != 0 && inst.degree(v) > stride {
                boundary.set(v);
            }
        }
        let scheme = Self::assemble(numbering, boundary, col, firsts, lasts, stride);
        let mut visited = BitVec::new(n);
        let mut repair = Vec::new();
        for v in 0..n {
            if scheme.is_interior(v) && !visited.get(v) {
                let region = scheme.collect_region(inst, v, &mut visited);
                if !scheme.region_matches(inst, &region, col) {
                    log::debug!("region of {} vertices moved to the boundary", region.len());
                    repair.extend(region);
                }
            }
        }
        if repair.is_empty() {
            return scheme;
        }
        let PathDataScheme { numbering, mut boundary, firsts, lasts, .. } = scheme;
        for v in repair {
            boundary.set(v);
        }
        Self::assemble(numbering, boundary, col, firsts, lasts, stride)
    }

    /// Number of stored paths.
    pub fn count(&self) -> usize {
        self.firsts.len()
    }

    pub fn stride(&self) -> usize {
        self.stride
    }

    pub fn numbering(&self) -> &IntVec {
        &self.numbering
    }

    pub fn label(&self, v: Vertex) -> u64 {
        self.numbering.get(v)
    }

    pub fn on_path(&self, v: Vertex) -> bool {
        self.numbering.get(v) != 0
    }

    pub fn boundary(&self) -> &BitVec {
        &self.boundary
    }

    pub fn is_boundary(&self, v: Vertex) -> bool {
        self.boundary.get(v)
    }

    fn is_interior(&self, v: Vertex) -> bool {
        self.on_path(v) && !self.boundary.get(v)
    }

    /// Colour kept for a boundary vertex.
    pub fn stored_color(&self, v: Vertex) -> Option<usize> {
        self.colors.get(v).map(|c| c as usize)
    }

    /// First vertices of the paths, ascending; index + 1 is the colour.
    pub fn firsts(&self) -> &[Vertex] {
        &self.firsts
    }

    pub fn lasts(&self) -> &[Vertex] {
        &self.lasts
    }

    pub fn is_first(&self, v: Vertex) -> bool {
        self.firsts.binary_search(&v).is_ok()
    }

    pub fn is_last(&self, v: Vertex) -> bool {
        self.lasts.binary_search(&v).is_ok()
    }

    pub fn size_in_bits(&self) -> u64 {
        self.bits.bits()
    }

    /// The region (component of non-boundary path vertices) around `v`.
    fn collect_region<V: GraphView + ?Sized>(
        &self,
        inst: &Terminals<'_, V>,
        v: Vertex,
        visited: &mut BitVec,
    ) -> Vec<Vertex> {
        let mut region = vec![v];
        visited.set(v);
        let mut queue = VecDeque::from([v]);
        while let Some(u) = queue.pop_front() {
            for w in inst.neighbors(u) {
                if self.is_interior(w) && !visited.get(w) {
                    visited.set(w);
                    region.push(w);
                    queue.push_back(w);
                }
            }
        }
        region.sort_unstable();
        region
    }

    pub fn region_of<V: GraphView + ?Sized>(&self, inst: &Terminals<'_, V>, v: Vertex) -> Vec<Vertex> {
        let mut visited = BitVec::new(inst.n());
        self.collect_region(inst, v, &mut visited)
    }

    /// A boundary vertex right before `u` on some path, judged by labels.
    fn boundary_before<V: GraphView + ?Sized>(&self, inst: &Terminals<'_, V>, u: Vertex) -> Option<Vertex> {
        let lu = self.label(u);
        inst.neighbors(u).find(|&b| self.boundary.get(b) && after(self.label(b)) == lu)
    }

    fn boundary_after<V: GraphView + ?Sized>(&self, inst: &Terminals<'_, V>, u: Vertex) -> bool {
        let next = after(self.label(u));
        inst.neighbors(u).any(|b| self.boundary.get(b) && self.label(b) == next)
    }

    fn starts_path(&self, u: Vertex) -> Option<usize> {
        if self.label(u) == 1 {
            self.firsts.binary_search(&u).ok()
        } else {
            None
        }
    }

    /// Recompute the subpaths of one region and their colours.
    pub fn decode_region<V: GraphView + ?Sized>(
        &self,
        inst: &Terminals<'_, V>,
        region: &[Vertex],
    ) -> Result<RegionDecode, PathsError> {
        let sources: Vec<Vertex> = region
            .iter()
            .copied()
            .filter(|&u| self.starts_path(u).is_some() || self.boundary_before(inst, u).is_some())
            .collect();
        let sinks: Vec<Vertex> =
            region.iter().copied().filter(|&u| self.is_last(u) || self.boundary_after(inst, u)).collect();
        let paths = super::region_paths(inst.view, region, &sources, &sinks, |u, w| {
            self.label(w) == after(self.label(u))
        })?;
        Ok(paths
            .into_iter()
            .map(|p| {
                let u = p[0];
                let color = match self.starts_path(u) {
                    Some(i) => i + 1,
                    None => {
                        let b = self.boundary_before(inst, u).expect("sources have a boundary predecessor");
                        self.stored_color(b).expect("boundary colour")
                    }
                };
                (color, p)
            })
            .collect())
    }

    fn region_matches<V: GraphView + ?Sized>(&self, inst: &Terminals<'_, V>, region: &[Vertex], col: &IntVec) -> bool {
        let Ok(decoded) = self.decode_region(inst, region) else {
            return false;
        };
        let covered: usize = decoded.iter().map(|(_, p)| p.len()).sum();
        if covered != region.len() {
            return false;
        }
        let inside = |w: Vertex| region.binary_search(&w).is_ok();
        decoded.iter().all(|(c, p)| {
            let c = *c as u64;
            let (first, last) = (p[0], p[p.len() - 1]);
            p.iter().all(|&u| col.get(u) == c)
                && !inst.neighbors(last).any(|w| inside(w) && col.get(w) == c && self.label(w) == after(self.label(last)))
                && !inst.neighbors(first).any(|w| inside(w) && col.get(w) == c && after(self.label(w)) == self.label(first))
        })
    }

    /// Colour of every path vertex (0 elsewhere), decoding each region once.
    pub fn expand_colors<V: GraphView + ?Sized>(&self, inst: &Terminals<'_, V>) -> Result<IntVec, PathsError> {
        let n = inst.n();
        let mut col = IntVec::new(n, bits_for(self.count() as u64));
        for b in self.boundary.iter_ones() {
            col.set(b, self.colors.get(b).expect("boundary colour"));
        }
        let mut visited = BitVec::new(n);
        for v in 0..n {
            if self.is_interior(v) && !visited.get(v) {
                let region = self.collect_region(inst, v, &mut visited);
                for (c, p) in self.decode_region(inst, &region)? {
                    for u in p {
                        col.set(u, c as u64);
                    }
                }
            }
        }
        Ok(col)
    }

    pub fn color<V: GraphView + ?Sized>(&self, inst: &Terminals<'_, V>, v: Vertex) -> Result<usize, PathsError> {
        if !self.on_path(v) {
            return Err(PathsError::NotOnPath(v));
        }
        if let Some(c) = self.stored_color(v) {
            return Ok(c);
        }
        let region = self.region_of(inst, v);
        self.decode_region(inst, &region)?
            .into_iter()
            .find(|(_, p)| p.contains(&v))
            .map(|(c, _)| c)
            .ok_or(PathsError::RegionFlow { found: 0, wanted: 1 })
    }

    pub fn next<V: GraphView + ?Sized>(&self, inst: &Terminals<'_, V>, v: Vertex) -> Result<Vertex, PathsError> {
        let c = self.color(inst, v)?;
        if self.is_last(v) {
            return Ok(inst.t);
        }
        let want = after(self.label(v));
        for w in inst.neighbors(v) {
            if self.label(w) == want && self.color(inst, w)? == c {
                return Ok(w);
            }
        }
        Err(PathsError::NotOnPath(v))
    }

    pub fn prev<V: GraphView + ?Sized>(&self, inst: &Terminals<'_, V>, v: Vertex) -> Result<Vertex, PathsError> {
        let c = self.color(inst, v)?;
        if self.starts_path(v).is_some() {
            return Ok(inst.s);
        }
        let lv = self.label(v);
        for w in inst.neighbors(v) {
            if self.on_path(w) && after(self.label(w)) == lv && self.color(inst, w)? == c {
                return Ok(w);
            }
        }
        Err(PathsError::NotOnPath(v))
    }

    /// Every stored path as `s, .., t`, in colour order.
    pub fn paths<V: GraphView + ?Sized>(&self, inst: &Terminals<'_, V>) -> Result<Vec<Vec<Vertex>>, PathsError> {
        let col = self.expand_colors(inst)?;
        Ok(self
            .firsts
            .iter()
            .enumerate()
            .map(|(i, &f)| {
                let c = i as u64 + 1;
                let mut path = vec![inst.s, f];
                let mut cur = f;
                while !self.is_last(cur) {
                    let want = after(self.label(cur));
                    cur = inst
                        .neighbors(cur)
                        .find(|&w| self.label(w) == want && col.get(w) == c)
                        .expect("stored path continues");
                    path.push(cur);
                }
                path.push(inst.t);
                path
            })
            .collect())
    }
}

/// Scheme for one chordless path: every `stride(k)`-th internal vertex and
/// every vertex of degree above the stride go to the boundary.
pub fn scheme_from_single_path<V: GraphView + ?Sized>(
    inst: &Terminals<'_, V>,
    path: &PathNumbering,
    k: usize,
) -> PathDataScheme {
    let n = inst.n();
    let stride = stride(k);
    let vertices = path.vertices(inst.view);
    let inner = &vertices[1..vertices.len() - 1];
    if inner.is_empty() {
        return PathDataScheme::empty(n, stride);
    }
    let mut boundary = BitVec::new(n);
    let mut col = IntVec::new(n, 1);
    for (i, &v) in inner.iter().enumerate() {
        col.set(v, 1);
        if (i + 1) % stride == 0 {
            boundary.set(v);
        }
    }
    PathDataScheme::build(
        inst,
        path.labels().clone(),
        &col,
        boundary,
        vec![inner[0]],
        vec![inner[inner.len() - 1]],
        stride,
    )
}
