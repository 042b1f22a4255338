use std::fmt;

use super::table::INFEASIBLE;
use super::SolveError;
use crate::graph::{Graph, Vertex};

/// The problems the solvers handle. Tables minimise a cost; problems that
/// maximise store the negated objective.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Problem {
    VertexCover,
    IndependentSet,
    /// States per vertex: not yet dominated, dominated, in the set.
    DominatingSet,
    MaxCut,
    /// Proper colouring with this many colours.
    Colouring(usize),
}

const UNDOMINATED: usize = 0;
const DOMINATED: usize = 1;
const CHOSEN: usize = 2;

/// An optimal solution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// The chosen vertices, ascending.
    Set(Vec<Vertex>),
    /// One side of the cut, ascending.
    Side(Vec<Vertex>),
    /// A colour per vertex.
    Colouring(Vec<usize>),
    /// No proper colouring exists.
    None,
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Problem::VertexCover => write!(f, "vertex cover"),
            Problem::IndependentSet => write!(f, "independent set"),
            Problem::DominatingSet => write!(f, "dominating set"),
            Problem::MaxCut => write!(f, "max cut"),
            Problem::Colouring(q) => write!(f, "{q}-colouring"),
        }
    }
}

impl Problem {
    /// States a single vertex can take.
    pub fn states(self) -> usize {
        match self {
            Problem::DominatingSet => 3,
            Problem::Colouring(q) => q,
            _ => 2,
        }
    }

    pub(super) fn check(self) -> Result<(), SolveError> {
        match self {
            Problem::Colouring(0) => Err(SolveError::NoColours),
            _ => Ok(()),
        }
    }

    /// Objective value of a table cost.
    pub fn value_of(self, cost: i64) -> i64 {
        match self {
            Problem::VertexCover | Problem::DominatingSet => cost,
            Problem::IndependentSet | Problem::MaxCut => -cost,
            Problem::Colouring(_) => 1,
        }
    }

    /// Reported when no table entry is feasible; only colouring can get here.
    pub fn infeasible_value(self) -> i64 {
        0
    }

    fn vertex_cost(self, state: usize) -> i64 {
        match self {
            Problem::VertexCover => state as i64,
            Problem::IndependentSet => -(state as i64),
            Problem::DominatingSet => i64::from(state == CHOSEN),
            Problem::MaxCut | Problem::Colouring(_) => 0,
        }
    }

    fn edge_allowed(self, a: usize, b: usize) -> bool {
        match self {
            Problem::VertexCover => a == 1 || b == 1,
            Problem::IndependentSet => a == 0 || b == 0,
            Problem::Colouring(_) => a != b,
            Problem::DominatingSet | Problem::MaxCut => true,
        }
    }

    fn edge_cost(self, a: usize, b: usize) -> i64 {
        match self {
            Problem::MaxCut => -i64::from(a != b),
            _ => 0,
        }
    }

    /// Cost of a bag assignment on its own, or [`INFEASIBLE`].
    pub fn local_cost(self, state: &[usize], edges: &[(usize, usize)]) -> i64 {
        if edges.iter().any(|&(a, b)| !self.edge_allowed(state[a], state[b])) {
            return INFEASIBLE;
        }
        if self == Problem::DominatingSet {
            let undominated = state.iter().enumerate().filter(|&(_, &s)| s == DOMINATED).any(|(i, _)| {
                !edges.iter().any(|&(a, b)| (a == i && state[b] == CHOSEN) || (b == i && state[a] == CHOSEN))
            });
            if undominated {
                return INFEASIBLE;
            }
        }
        self.shared_cost(state, edges)
    }

    /// What a table counts for an assignment of some of its vertices and the
    /// edges among them; subtracted once when two tables sharing them merge.
    pub fn shared_cost(self, state: &[usize], edges: &[(usize, usize)]) -> i64 {
        let vertices: i64 = state.iter().map(|&s| self.vertex_cost(s)).sum();
        let edges: i64 = edges.iter().map(|&(a, b)| self.edge_cost(state[a], state[b])).sum();
        vertices + edges
    }

    /// Whether a vertex may leave the tables in this state.
    pub fn may_forget(self, state: usize) -> bool {
        self != Problem::DominatingSet || state != UNDOMINATED
    }

    /// Whether either of two merged tables may supply what this state needs.
    pub fn shares_duty(self, state: usize) -> bool {
        self == Problem::DominatingSet && state == DOMINATED
    }

    /// The state asking nothing of a table whose partner covers the duty.
    pub fn relaxed(self, state: usize) -> usize {
        if self.shares_duty(state) {
            UNDOMINATED
        } else {
            state
        }
    }

    /// The part of a state that ends up in the witness: membership, side or
    /// colour.
    pub fn mark(self, state: usize) -> usize {
        match self {
            Problem::DominatingSet => usize::from(state == CHOSEN),
            _ => state,
        }
    }

    pub(super) fn witness(self, marks: Vec<usize>) -> Witness {
        let ones = || marks.iter().enumerate().filter(|&(_, &m)| m == 1).map(|(v, _)| v).collect();
        match self {
            Problem::MaxCut => Witness::Side(ones()),
            Problem::Colouring(_) => Witness::Colouring(marks),
            _ => Witness::Set(ones()),
        }
    }

    /// Check a witness against the graph and the claimed value.
    pub fn verify(self, g: &Graph, witness: &Witness, value: i64) -> Result<(), SolveError> {
        let fail = |what: &str| Err(SolveError::Check(format!("{self} witness {what}")));
        let n = g.n();
        let member = |set: &[Vertex]| {
            let mut bits = vec![false; n];
            for &v in set {
                bits[v] = true;
            }
            bits
        };
        match (self, witness) {
            (Problem::VertexCover, Witness::Set(set)) => {
                let m = member(set);
                if !g.edges().all(|(u, v)| m[u] || m[v]) {
                    return fail("misses an edge");
                }
                if set.len() as i64 != value {
                    return fail("has the wrong size");
                }
            }
            (Problem::IndependentSet, Witness::Set(set)) => {
                let m = member(set);
                if g.edges().any(|(u, v)| m[u] && m[v]) {
                    return fail("holds an edge");
                }
                if set.len() as i64 != value {
                    return fail("has the wrong size");
                }
            }
            (Problem::DominatingSet, Witness::Set(set)) => {
                let m = member(set);
                if !(0..n).all(|v| m[v] || g.neighbors(v).iter().any(|&w| m[w as usize])) {
                    return fail("leaves a vertex undominated");
                }
                if set.len() as i64 != value {
                    return fail("has the wrong size");
                }
            }
            (Problem::MaxCut, Witness::Side(side)) => {
                let m = member(side);
                if g.edges().filter(|&(u, v)| m[u] != m[v]).count() as i64 != value {
                    return fail("cuts a different number of edges");
                }
            }
            (Problem::Colouring(q), Witness::Colouring(colours)) => {
                if colours.len() != n || colours.iter().any(|&c| c >= q) || g.edges().any(|(u, v)| colours[u] == colours[v]) {
                    return fail("is not proper");
                }
            }
            _ => return fail("has the wrong shape"),
        }
        Ok(())
    }

    /// Log when `k` is past the width up to which the tables stay within
    /// linear space: `log n - 2 log log n` in base `states`, or `3 log log n`
    /// for witnesses.
    pub(super) fn warn_beyond_threshold(self, n: usize, k: usize, witness: bool) {
        let base = (self.states().max(2) as f64).ln();
        let log = (n.max(4) as f64).ln() / base;
        let loglog = (n.max(4) as f64).ln().ln().max(0.0) / base;
        let limit = log - if witness { 3.0 } else { 2.0 } * loglog;
        if (k as f64) > limit {
            log::warn!("width {k} is past {limit:.1}, where {self} tables stop fitting in linear space");
        }
    }
}
