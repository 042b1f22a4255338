//! Exhaustive solvers and witness checks for the five problems.

use crate::{OracleError, OracleGraph};

pub const SOLVE_CAP: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleProblem {
    VertexCover,
    IndependentSet,
    DominatingSet,
    MaxCut,
    Coloring(usize),
}

/// Optimum value; for colouring 1 if a proper colouring exists, else 0.
pub fn brute_solve(g: &OracleGraph, problem: OracleProblem) -> Result<i64, OracleError> {
    let n = g.n();
    if n > SOLVE_CAP {
        return Err(OracleError::TooLarge { n, cap: SOLVE_CAP });
    }
    let masks = neighbour_masks(g);
    let edges = g.edges();
    let all = 1u64 << n;
    Ok(match problem {
        OracleProblem::VertexCover => (0..all)
            .filter(|&s| edges.iter().all(|&(u, v)| s >> u & 1 == 1 || s >> v & 1 == 1))
            .map(|s| s.count_ones() as i64)
            .min()
            .unwrap_or(0),
        OracleProblem::IndependentSet => (0..all)
            .filter(|&s| (0..n).all(|v| s >> v & 1 == 0 || masks[v] & s == 0))
            .map(|s| s.count_ones() as i64)
            .max()
            .unwrap_or(0),
        OracleProblem::DominatingSet => (0..all)
            .filter(|&s| (0..n).all(|v| s >> v & 1 == 1 || masks[v] & s != 0))
            .map(|s| s.count_ones() as i64)
            .min()
            .unwrap_or(0),
        OracleProblem::MaxCut => (0..all)
            .map(|s| edges.iter().filter(|&&(u, v)| (s >> u & 1) != (s >> v & 1)).count() as i64)
            .max()
            .unwrap_or(0),
        OracleProblem::Coloring(q) => i64::from(colorable(g, q)),
    })
}

fn neighbour_masks(g: &OracleGraph) -> Vec<u64> {
    (0..g.n()).map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w)).collect()
}

fn colorable(g: &OracleGraph, q: usize) -> bool {
    fn rec(g: &OracleGraph, q: usize, v: usize, col: &mut Vec<usize>) -> bool {
        if v == g.n() {
            return true;
        }
        for c in 0..q {
            if g.neighbors(v).iter().all(|&w| w >= v || col[w] != c) {
                col[v] = c;
                if rec(g, q, v + 1, col) {
                    return true;
                }
            }
        }
        false
    }
    rec(g, q, 0, &mut vec![usize::MAX; g.n()])
}

pub fn is_vertex_cover(g: &OracleGraph, set: &[bool]) -> bool {
    g.edges().iter().all(|&(u, v)| set[u] || set[v])
}

pub fn is_independent(g: &OracleGraph, set: &[bool]) -> bool {
    g.edges().iter().all(|&(u, v)| !(set[u] && set[v]))
}

pub fn is_dominating(g: &OracleGraph, set: &[bool]) -> bool {
    (0..g.n()).all(|v| set[v] || g.neighbors(v).iter().any(|&w| set[w]))
}

pub fn cut_value(g: &OracleGraph, side: &[bool]) -> usize {
    g.edges().iter().filter(|&&(u, v)| side[u] != side[v]).count()
}

pub fn is_proper_coloring(g: &OracleGraph, colors: &[usize], q: usize) -> bool {
    colors.iter().all(|&c| c < q) && g.edges().iter().all(|&(u, v)| colors[u] != colors[v])
}
