//! Exact treewidth by dynamic programming over elimination prefixes.

use crate::{OracleError, OracleGraph};

pub const TREEWIDTH_CAP: usize = 16;

/// Exact treewidth for graphs with at most [`TREEWIDTH_CAP`] vertices.
///
/// `best[S]` is the smallest possible maximum, over the vertices eliminated
/// so far, of the number of not yet eliminated vertices reachable through
/// `S`. Eliminating `v` after the set `S` costs the size of that set.
pub fn brute_treewidth(g: &OracleGraph) -> Result<usize, OracleError> {
    let n = g.n();
    if n > TREEWIDTH_CAP {
        return Err(OracleError::TooLarge { n, cap: TREEWIDTH_CAP });
    }
    if n == 0 {
        return Ok(0);
    }
    let full = (1usize << n) - 1;
    let mut best = vec![usize::MAX; 1 << n];
    best[0] = 0;
    for set in 1..=full {
        let mut b = usize::MAX;
        for v in 0..n {
            if set & (1 << v) == 0 {
                continue;
            }
            let rest = set & !(1 << v);
            let q = reach_through(g, rest, v);
            b = b.min(best[rest].max(q));
        }
        best[set] = b;
    }
    Ok(best[full])
}

fn reach_through(g: &OracleGraph, inside: usize, v: usize) -> usize {
    let mut seen = 1usize << v;
    let mut stack = vec![v];
    let mut count = 0;
    while let Some(x) = stack.pop() {
        for &w in g.neighbors(x) {
            if seen & (1 << w) != 0 {
                continue;
            }
            seen |= 1 << w;
            if inside & (1 << w) != 0 {
                stack.push(w);
            } else {
                count += 1;
            }
        }
    }
    count
}
