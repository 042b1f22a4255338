use super::augment::{augment, residual_reach};
use super::scheme::PathDataScheme;
use super::sweep::{sweep, WeakFamily};
use super::work::WorkingFamily;
use super::{stride, AugmentingPath, PathsError, Terminals};
use crate::graph::{GraphView, Vertex};
use crate::succinct::BitVec;

/// A good family of s-t paths: internally disjoint, chordless and free of
/// extended deadlocks. A direct s-t edge counts as one extra path.
#[derive(Debug)]
pub struct GoodPathsWitness {
    scheme: PathDataScheme,
    direct_edge: bool,
}

impl GoodPathsWitness {
    /// Number of paths, the direct edge included.
    pub fn count(&self) -> usize {
        self.scheme.count() + usize::from(self.direct_edge)
    }

    pub fn scheme(&self) -> &PathDataScheme {
        &self.scheme
    }

    pub fn direct_edge(&self) -> bool {
        self.direct_edge
    }

    /// All paths as `s, .., t`; the direct edge, if used, comes first.
    pub fn paths<V: GraphView + ?Sized>(&self, inst: &Terminals<'_, V>) -> Result<Vec<Vec<Vertex>>, PathsError> {
        let mut out = Vec::with_capacity(self.count());
        if self.direct_edge {
            out.push(vec![inst.s, inst.t]);
        }
        out.extend(self.scheme.paths(inst)?);
        Ok(out)
    }
}

/// Adds good paths one at a time, up to `k`.
pub struct PathsEngine<'g, V: ?Sized> {
    inst: Terminals<'g, V>,
    k: usize,
    witness: GoodPathsWitness,
    saturated: bool,
}

impl<'g, V: GraphView + ?Sized> PathsEngine<'g, V> {
    pub fn new(inst: Terminals<'g, V>, k: usize) -> Self {
        let direct_edge = k > 0 && inst.direct_edge();
        let scheme = PathDataScheme::empty(inst.n(), stride(k));
        PathsEngine { inst, k, witness: GoodPathsWitness { scheme, direct_edge }, saturated: false }
    }

    pub fn terminals(&self) -> &Terminals<'g, V> {
        &self.inst
    }

    pub fn witness(&self) -> &GoodPathsWitness {
        &self.witness
    }

    pub fn into_witness(self) -> GoodPathsWitness {
        self.witness
    }

    /// True once no further path exists (as opposed to having reached `k`).
    pub fn is_saturated(&self) -> bool {
        self.saturated
    }

    /// Search one augmenting path and merge it in. Returns false when the
    /// family is maximum or already has `k` paths.
    pub fn step(&mut self) -> Result<bool, PathsError> {
        if self.saturated || self.witness.count() >= self.k {
            return Ok(false);
        }
        let fam = WorkingFamily::expand(&self.inst, &self.witness.scheme)?;
        match augment(&self.inst, &fam) {
            None => {
                self.saturated = true;
                Ok(false)
            }
            Some(p) => {
                let scheme = add_path(&self.inst, &fam, p)?;
                drop(fam);
                self.witness.scheme = scheme;
                Ok(true)
            }
        }
    }

    pub fn run(mut self) -> Result<GoodPathsWitness, PathsError> {
        while self.step()? {}
        Ok(self.witness)
    }
}

/// Merge an augmenting path into the family and rebuild a good scheme with
/// one more path.
pub fn add_path<V: GraphView + ?Sized>(
    inst: &Terminals<'_, V>,
    fam: &WorkingFamily<'_>,
    path: AugmentingPath,
) -> Result<PathDataScheme, PathsError> {
    let stride = fam.scheme().stride();
    let mut weak = WeakFamily::merge(inst, fam, path);
    let layout = sweep(inst, &mut weak, stride)?;
    drop(weak);
    Ok(PathDataScheme::build(
        inst,
        layout.numbering,
        &layout.col,
        layout.boundary,
        layout.firsts,
        layout.lasts,
        stride,
    ))
}

/// Up to `k` good internally disjoint s-t paths; fewer only if no more exist.
pub fn max_disjoint_paths<V: GraphView + ?Sized>(
    view: &V,
    s: Vertex,
    t: Vertex,
    k: usize,
) -> Result<GoodPathsWitness, PathsError> {
    PathsEngine::new(Terminals::new(view, s, t)?, k).run()
}

/// A minimum vertex set separating s from t, provided at most `k` paths
/// exist. One vertex is taken from each path: the one whose out-copy the
/// residual search cannot reach. When s and t are adjacent, t itself is
/// added so that the set still has one vertex per path.
pub fn st_separator<V: GraphView + ?Sized>(inst: Terminals<'_, V>, k: usize) -> Result<BitVec, PathsError> {
    let mut engine = PathsEngine::new(inst, k);
    while engine.step()? {}
    let witness = engine.into_witness();
    let fam = WorkingFamily::expand(&inst, &witness.scheme)?;
    let n = inst.n();
    let reach = residual_reach(&inst, &fam);
    if reach.get(inst.t) {
        return Err(PathsError::ConnectivityExceeds(k));
    }
    let mut cut = BitVec::new(n);
    for v in 0..n {
        if reach.get(v) && !reach.get(v + n) {
            cut.set(v);
        }
    }
    debug_assert_eq!(cut.count_ones(), witness.scheme.count());
    if witness.direct_edge {
        cut.set(inst.t);
    }
    Ok(cut)
}
