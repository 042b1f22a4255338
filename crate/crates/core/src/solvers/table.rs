use super::{Problem, SolveError};
use crate::budget::Tracked;
use crate::graph::Vertex;

/// Cost of an infeasible entry.
pub const INFEASIBLE: i64 = i64::MAX;

/// Largest table the solvers will allocate.
pub const MAX_TABLE_ENTRIES: usize = 1 << 24;

/// How a merged entry was put together: the entry of the table before the
/// merge and the chosen entry of the child.
pub type Link = (u32, u32);

/// A dynamic programming table over the assignments of a bag.
///
/// Entry `index` assigns state `(index / states^i) % states` to the vertex at
/// position `i` of `vertices`. Its cost is the least cost of an assignment of
/// every vertex seen so far below and at this node that agrees with it.
#[derive(Debug)]
pub struct DpTable {
    vertices: Vec<Vertex>,
    /// Edges of the bag as position pairs.
    edges: Vec<(usize, usize)>,
    states: usize,
    costs: Vec<i64>,
    /// One list per merged child, in merge order, if links are kept.
    links: Option<Vec<Vec<Link>>>,
    bits: Tracked,
}

fn entries(states: usize, len: usize) -> Result<usize, SolveError> {
    let mut total = 1usize;
    for _ in 0..len {
        total = total.checked_mul(states).filter(|&t| t <= MAX_TABLE_ENTRIES).ok_or(SolveError::TableTooLarge {
            bag: len,
            states,
        })?;
    }
    Ok(total)
}

/// State of position `pos` in entry `index`.
pub fn digit(index: usize, pos: usize, states: usize) -> usize {
    index / states.pow(pos as u32) % states
}

fn digits(mut index: usize, states: usize, out: &mut [usize]) {
    for d in out.iter_mut() {
        *d = index % states;
        index /= states;
    }
}

impl DpTable {
    /// The table of `G[bag]` alone. `bag` ascending, `edges` between bag
    /// vertices in any order.
    pub fn local(problem: Problem, bag: &[Vertex], edges: &[(Vertex, Vertex)], links: bool) -> Result<Self, SolveError> {
        debug_assert!(bag.windows(2).all(|w| w[0] < w[1]));
        let states = problem.states();
        let size = entries(states, bag.len())?;
        let pos = |v: Vertex| bag.binary_search(&v).expect("bag edges join bag vertices");
        let edges: Vec<(usize, usize)> = edges.iter().map(|&(u, v)| (pos(u), pos(v))).collect();
        let mut state = vec![0; bag.len()];
        let costs = (0..size)
            .map(|index| {
                digits(index, states, &mut state);
                problem.local_cost(&state, &edges)
            })
            .collect();
        let mut table = DpTable {
            vertices: bag.to_vec(),
            edges,
            states,
            costs,
            links: links.then(Vec::new),
            bits: Tracked::empty("solvers.tables"),
        };
        table.register();
        Ok(table)
    }

    fn register(&mut self) {
        let link_bits = self.links.as_ref().map_or(0, |l| l.iter().map(|v| 64 * v.len() as u64).sum());
        self.bits.set(64 * (self.costs.len() + self.vertices.len() + 2 * self.edges.len()) as u64 + link_bits);
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.costs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.costs.is_empty()
    }

    pub fn cost(&self, index: usize) -> i64 {
        self.costs[index]
    }

    pub fn states(&self) -> usize {
        self.states
    }

    /// State of every bag vertex in entry `index`.
    pub fn assignment(&self, index: usize) -> Vec<(Vertex, usize)> {
        self.vertices.iter().enumerate().map(|(i, &v)| (v, digit(index, i, self.states))).collect()
    }

    /// Links of the `child`-th merge, if kept.
    pub fn link(&self, child: usize, index: usize) -> Option<Link> {
        self.links.as_ref().and_then(|l| l.get(child)).map(|l| l[index])
    }

    pub fn merged_children(&self) -> usize {
        self.links.as_ref().map_or(0, Vec::len)
    }

    /// Cheapest entry in which every vertex may be forgotten; ties go to the
    /// smallest index.
    pub fn best(&self, problem: Problem) -> Option<(usize, i64)> {
        let mut state = vec![0; self.vertices.len()];
        let mut best: Option<(usize, i64)> = None;
        for (index, &cost) in self.costs.iter().enumerate() {
            if cost == INFEASIBLE || best.is_some_and(|(_, c)| c <= cost) {
                continue;
            }
            digits(index, self.states, &mut state);
            if state.iter().all(|&s| problem.may_forget(s)) {
                best = Some((index, cost));
            }
        }
        best
    }
}

/// Merge `child` into `parent`: every parent entry adds the cheapest child
/// entry that agrees with it on the shared vertices, less what both tables
/// count for the shared part. Child vertices missing from the parent are
/// forgotten and must be in a final state.
pub fn table_merge(parent: &mut DpTable, child: &DpTable, problem: Problem) {
    let states = parent.states;
    debug_assert_eq!(states, child.states);
    let mut shared = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < parent.vertices.len() && j < child.vertices.len() {
        match parent.vertices[i].cmp(&child.vertices[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                shared.push((i, j));
                i += 1;
                j += 1;
            }
        }
    }
    let keys = states.pow(shared.len() as u32);

    // cheapest child entry per shared assignment
    let mut best = vec![(INFEASIBLE, 0u32); keys];
    let mut state = vec![0; child.vertices.len()];
    let mut in_shared = vec![false; child.vertices.len()];
    for &(_, cj) in &shared {
        in_shared[cj] = true;
    }
    for (index, &cost) in child.costs.iter().enumerate() {
        if cost == INFEASIBLE {
            continue;
        }
        digits(index, states, &mut state);
        if state.iter().zip(&in_shared).any(|(&s, &kept)| !kept && !problem.may_forget(s)) {
            continue;
        }
        let key = shared.iter().rev().fold(0, |acc, &(_, cj)| acc * states + state[cj]);
        if cost < best[key].0 {
            best[key] = (cost, index as u32);
        }
    }

    // what both sides count for each shared assignment
    let shared_edges: Vec<(usize, usize)> = parent
        .edges
        .iter()
        .filter_map(|&(a, b)| {
            let a = shared.iter().position(|&(pi, _)| pi == a)?;
            let b = shared.iter().position(|&(pi, _)| pi == b)?;
            Some((a, b))
        })
        .collect();
    let mut key_state = vec![0; shared.len()];
    let overlap: Vec<i64> = (0..keys)
        .map(|key| {
            digits(key, states, &mut key_state);
            problem.shared_cost(&key_state, &shared_edges)
        })
        .collect();

    let mut merged = vec![INFEASIBLE; parent.costs.len()];
    let mut links = parent.links.as_ref().map(|_| vec![(0u32, 0u32); parent.costs.len()]);
    let mut pstate = vec![0; parent.vertices.len()];
    let mut helpers: Vec<usize> = Vec::new();
    for index in 0..parent.costs.len() {
        digits(index, states, &mut pstate);
        let key = shared.iter().rev().fold(0, |acc, &(pi, _)| acc * states + pstate[pi]);
        // shared vertices whose domination either side may supply
        helpers.clear();
        helpers.extend((0..shared.len()).filter(|&s| problem.shares_duty(pstate[shared[s].0])));
        let mut found = (INFEASIBLE, (0u32, 0u32));
        for mask in 0..1usize << helpers.len() {
            let mut prev = index;
            let mut ckey = key;
            for (bit, &s) in helpers.iter().enumerate() {
                let relaxed = problem.relaxed(pstate[shared[s].0]);
                let weight = states.pow(shared[s].0 as u32);
                let cweight = states.pow(s as u32);
                if mask >> bit & 1 == 1 {
                    prev = prev - pstate[shared[s].0] * weight + relaxed * weight;
                } else {
                    ckey = ckey - pstate[shared[s].0] * cweight + relaxed * cweight;
                }
            }
            let (pc, (cc, centry)) = (parent.costs[prev], best[ckey]);
            if pc == INFEASIBLE || cc == INFEASIBLE {
                continue;
            }
            let total = pc + cc - overlap[key];
            if total < found.0 {
                found = (total, (prev as u32, centry));
            }
        }
        merged[index] = found.0;
        if let Some(l) = links.as_mut() {
            l[index] = found.1;
        }
    }
    parent.costs = merged;
    if let (Some(all), Some(new)) = (parent.links.as_mut(), links) {
        all.push(new);
    }
    parent.register();
}
