use super::table::{table_merge, DpTable};
use super::{Problem, SolveError, TableCount};
use crate::graph::Vertex;
use crate::succinct::BitVec;

/// Leaves whose full table has at most this many entries are tabled directly.
pub const DIRECT_LEAF_ENTRIES: usize = 1 << 16;

/// A tree decomposition of a leaf subgraph from a min-degree elimination
/// order. Node `i` holds the `i`-th eliminated vertex and its later
/// neighbours in the filled graph; the last node holds the interface, the
/// vertices the leaf shares with its parent.
pub struct LeafTree {
    bags: Vec<Vec<Vertex>>,
    parents: Vec<usize>,
}

impl LeafTree {
    pub fn new(leaf: &[Vertex], edges: &[(Vertex, Vertex)], interface: &[Vertex]) -> Self {
        let m = leaf.len();
        let pos = |v: Vertex| leaf.binary_search(&v).expect("leaf edges join leaf vertices");
        let mut adj: Vec<BitVec> = (0..m).map(|_| BitVec::new(m)).collect();
        for &(u, v) in edges {
            let (a, b) = (pos(u), pos(v));
            adj[a].set(b);
            adj[b].set(a);
        }
        let mut gone = BitVec::new(m);
        for &v in interface {
            gone.set(pos(v));
        }
        let mut alive_private = m - interface.len();
        let mut bags = Vec::with_capacity(alive_private + 1);
        let mut eliminated = Vec::with_capacity(alive_private);
        let mut done = BitVec::new(m);
        while alive_private > 0 {
            let degree = |a: usize| adj[a].iter_ones().filter(|&b| !done.get(b)).count();
            let pick = (0..m).filter(|&a| !gone.get(a)).min_by_key(|&a| (degree(a), a)).expect("a private vertex is left");
            let later: Vec<usize> = adj[pick].iter_ones().filter(|&b| !done.get(b)).collect();
            for (i, &a) in later.iter().enumerate() {
                for &b in &later[i + 1..] {
                    adj[a].set(b);
                    adj[b].set(a);
                }
            }
            let mut bag: Vec<Vertex> = later.iter().map(|&a| leaf[a]).collect();
            bag.push(leaf[pick]);
            bag.sort_unstable();
            bags.push(bag);
            eliminated.push(pick);
            gone.set(pick);
            done.set(pick);
            alive_private -= 1;
        }
        let mut step = vec![usize::MAX; m];
        for (i, &a) in eliminated.iter().enumerate() {
            step[a] = i;
        }
        let root = bags.len();
        let parents = (0..bags.len())
            .map(|i| {
                let here = leaf[eliminated[i]];
                bags[i].iter().filter(|&&v| v != here).map(|&v| step[pos(v)]).filter(|&s| s != usize::MAX).min().unwrap_or(root)
            })
            .collect();
        bags.push(interface.to_vec());
        LeafTree { bags, parents }
    }

    pub fn len(&self) -> usize {
        self.bags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bags.is_empty()
    }

    pub fn bag(&self, node: usize) -> &[Vertex] {
        &self.bags[node]
    }

    /// Children of each node in the order they are merged.
    pub fn children(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.bags.len()];
        for (child, &parent) in self.parents.iter().enumerate() {
            out[parent].push(child);
        }
        out
    }

    /// Widest bag.
    pub fn width(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(0)
    }
}

fn bag_edges(bag: &[Vertex], edges: &[(Vertex, Vertex)]) -> Vec<(Vertex, Vertex)> {
    edges.iter().copied().filter(|&(u, v)| bag.binary_search(&u).is_ok() && bag.binary_search(&v).is_ok()).collect()
}

/// Tables of every node of `tree`, children merged, indexed by node. The
/// tree is walked depth first from the interface node, so only the tables
/// on one root-to-node chain are alive unless `keep` holds on to merged
/// children.
pub fn leaf_tables(
    problem: Problem,
    tree: &LeafTree,
    edges: &[(Vertex, Vertex)],
    keep: bool,
    count: &mut TableCount,
) -> Result<Vec<Option<DpTable>>, SolveError> {
    let children = tree.children();
    let mut tables: Vec<Option<DpTable>> = (0..tree.len()).map(|_| None).collect();
    let root = tree.len() - 1;
    let local = |node: usize| {
        let bag = tree.bag(node);
        DpTable::local(problem, bag, &bag_edges(bag, edges), keep)
    };
    let mut chain = vec![(root, 0usize, local(root)?)];
    count.add(1);
    while let Some((node, next, _)) = chain.last_mut() {
        if let Some(&child) = children[*node].get(*next) {
            *next += 1;
            chain.push((child, 0, local(child)?));
            count.add(1);
            continue;
        }
        let (node, _, table) = chain.pop().expect("non-empty");
        match chain.last_mut() {
            Some((_, _, parent)) => {
                table_merge(parent, &table, problem);
                if keep {
                    tables[node] = Some(table);
                } else {
                    count.remove(1);
                }
            }
            None => tables[node] = Some(table),
        }
    }
    Ok(tables)
}

/// Whether a leaf of this many vertices is solved through its own
/// elimination tree rather than one table over all its vertices.
pub fn needs_refinement(problem: Problem, leaf_len: usize) -> bool {
    (problem.states() as f64).powi(leaf_len as i32) > DIRECT_LEAF_ENTRIES as f64
}
