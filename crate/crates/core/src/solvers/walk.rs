use super::leaf::{leaf_tables, needs_refinement, LeafTree};
use super::table::{table_merge, DpTable};
use super::{Problem, SolveError, SolveStats, TableCount, Witness};
use crate::decomposition::TdIterator;
use crate::graph::{Graph, Vertex};

/// Which subtree a walk covers and how many of its levels keep tables.
pub struct Scope {
    /// Child indices leading from the root to the subtree root.
    base: Vec<usize>,
    /// Bag of the subtree root's parent.
    parent_bag: Option<Vec<Vertex>>,
    /// Levels below the subtree root whose tables and links are kept.
    keep: Option<usize>,
}

impl Scope {
    pub fn whole() -> Self {
        Scope { base: Vec::new(), parent_bag: None, keep: None }
    }

    pub fn window(base: Vec<usize>, parent_bag: Option<Vec<Vertex>>, depth: usize) -> Self {
        Scope { base, parent_bag, keep: Some(depth) }
    }

    fn keeps(&self, level: usize) -> bool {
        self.keep.is_some_and(|depth| level < depth)
    }
}

/// A leaf solved through its elimination tree; kept to redo the descent.
struct LeafData {
    vertices: Vec<Vertex>,
    edges: Vec<(Vertex, Vertex)>,
    interface: Vec<Vertex>,
}

enum Child {
    Kept(usize),
    /// A node whose table was dropped; its subtree is recomputed on demand.
    Frontier { address: Vec<usize>, vertices: Vec<Vertex> },
}

struct Node {
    table: DpTable,
    children: Vec<Child>,
    leaf: Option<LeafData>,
}

struct Frame {
    node: Node,
    address: Vec<usize>,
    depth: usize,
    next_child: usize,
}

/// The subtree root's table, plus the tables kept below it.
pub struct Window {
    root: Node,
    kept: Vec<Node>,
}

impl Window {
    pub fn table(&self) -> &DpTable {
        &self.root.table
    }
}

/// A frontier node to continue from, with the entry its parent chose.
pub struct Job {
    pub address: Vec<usize>,
    pub entry: usize,
    pub vertices: Vec<Vertex>,
}

fn intersect(a: &[Vertex], b: &[Vertex]) -> Vec<Vertex> {
    a.iter().copied().filter(|v| b.binary_search(v).is_ok()).collect()
}

/// Solve a refined leaf, counting its private tables beyond the one kept.
fn refined_tables(
    problem: Problem,
    tree: &LeafTree,
    edges: &[(Vertex, Vertex)],
    keep: bool,
    count: &mut TableCount,
    stats: &mut SolveStats,
) -> Result<Vec<Option<DpTable>>, SolveError> {
    let mut own = TableCount::default();
    let tables = leaf_tables(problem, tree, edges, keep, &mut own)?;
    count.add(own.peak());
    count.remove(own.peak() - own.live());
    stats.leaf_tables = stats.leaf_tables.max(own.peak().saturating_sub(1));
    Ok(tables)
}

fn arrive(
    it: &TdIterator<'_>,
    problem: Problem,
    scope: &Scope,
    frames: &mut Vec<Frame>,
    count: &mut TableCount,
    stats: &mut SolveStats,
) -> Result<(), SolveError> {
    let visit = it.show().expect("called on a visit");
    let base = scope.base.len();
    let address = match frames.last_mut() {
        Some(parent) => {
            let mut a = parent.address.clone();
            a.push(parent.next_child);
            parent.next_child += 1;
            a
        }
        None => scope.base.clone(),
    };
    let keep = scope.keeps(visit.depth - base);
    let bag = it.bag();
    let edges = it.bag_edges();
    let node = if visit.leaf && needs_refinement(problem, bag.len()) {
        let parent_bag = frames.last().map(|f| f.node.table.vertices()).or(scope.parent_bag.as_deref()).unwrap_or(&[]);
        let interface = intersect(&bag, parent_bag);
        let tree = LeafTree::new(&bag, &edges, &interface);
        let mut tables = refined_tables(problem, &tree, &edges, false, count, stats)?;
        stats.refined_leaves += 1;
        let table = tables.pop().flatten().expect("the interface node comes last");
        let leaf = keep.then_some(LeafData { vertices: bag, edges, interface });
        Node { table, children: Vec::new(), leaf }
    } else {
        let table = DpTable::local(problem, &bag, &edges, keep)?;
        count.add(1);
        Node { table, children: Vec::new(), leaf: None }
    };
    frames.push(Frame { node, address, depth: visit.depth, next_child: 0 });
    Ok(())
}

/// Run the dynamic program over the subtree whose root the iterator has
/// just arrived at, stopping when the tour leaves it.
pub fn subtree(
    it: &mut TdIterator<'_>,
    problem: Problem,
    scope: &Scope,
    count: &mut TableCount,
    stats: &mut SolveStats,
) -> Result<Window, SolveError> {
    let base = scope.base.len();
    let mut frames = Vec::new();
    let mut kept = Vec::new();
    arrive(it, problem, scope, &mut frames, count, stats)?;
    while it.next()? {
        let visit = it.show().expect("a step was made");
        if visit.depth < base {
            break;
        }
        if visit.first {
            arrive(it, problem, scope, &mut frames, count, stats)?;
            continue;
        }
        let child = frames.pop().expect("a return follows a child");
        let parent = frames.last_mut().expect("the child has a parent in scope");
        table_merge(&mut parent.node.table, &child.node.table, problem);
        if scope.keeps(child.depth - base) {
            kept.push(child.node);
            parent.node.children.push(Child::Kept(kept.len() - 1));
        } else {
            if scope.keep.is_some() {
                let vertices = child.node.table.vertices().to_vec();
                parent.node.children.push(Child::Frontier { address: child.address, vertices });
            }
            count.remove(1);
        }
    }
    let root = frames.pop().expect("the subtree root stays");
    debug_assert!(frames.is_empty());
    Ok(Window { root: root.node, kept })
}

/// A fresh iterator standing on the node at `address`, with the bag of its
/// parent. Siblings off the path are skipped, not visited.
pub fn navigate<'g>(g: &'g Graph, k: usize, address: &[usize]) -> Result<(TdIterator<'g>, Option<Vec<Vertex>>), SolveError> {
    let mut it = TdIterator::new(g, k)?;
    it.next()?;
    let mut parent_bag = None;
    for &child in address {
        parent_bag = Some(it.bag());
        for _ in 0..child {
            if !it.skip_child() {
                return Err(SolveError::Check(format!("no child {child} on the way to {address:?}")));
            }
        }
        if !it.next()? || !it.show().is_some_and(|v| v.first) {
            return Err(SolveError::Check(format!("no child {child} on the way to {address:?}")));
        }
    }
    Ok((it, parent_bag))
}

/// Witness marks gathered over the descent.
pub struct Assignment {
    marks: Vec<usize>,
}

impl Assignment {
    pub fn new(n: usize) -> Self {
        Assignment { marks: vec![usize::MAX; n] }
    }

    fn set(&mut self, v: Vertex, mark: usize) -> Result<(), SolveError> {
        match self.marks[v] {
            usize::MAX => {
                self.marks[v] = mark;
                Ok(())
            }
            m if m == mark => Ok(()),
            _ => Err(SolveError::Check(format!("vertex {v} gets two different marks"))),
        }
    }

    pub fn finish(self, problem: Problem) -> Result<Witness, SolveError> {
        if let Some(v) = self.marks.iter().position(|&m| m == usize::MAX) {
            return Err(SolveError::Check(format!("vertex {v} is in no bag")));
        }
        Ok(problem.witness(self.marks))
    }
}

fn assign(table: &DpTable, entry: usize, problem: Problem, out: &mut Assignment) -> Result<(), SolveError> {
    for (v, state) in table.assignment(entry) {
        out.set(v, problem.mark(state))?;
    }
    Ok(())
}

/// Follow links through a refined leaf's own tree.
fn descend_leaf(
    leaf: &LeafData,
    entry: usize,
    problem: Problem,
    out: &mut Assignment,
    count: &mut TableCount,
    stats: &mut SolveStats,
) -> Result<(), SolveError> {
    let tree = LeafTree::new(&leaf.vertices, &leaf.edges, &leaf.interface);
    let tables = refined_tables(problem, &tree, &leaf.edges, true, count, stats)?;
    let children = tree.children();
    let mut work = vec![(tree.len() - 1, entry)];
    while let Some((node, entry)) = work.pop() {
        let table = tables[node].as_ref().expect("kept");
        assign(table, entry, problem, out)?;
        let mut e = entry;
        for (j, &child) in children[node].iter().enumerate().rev() {
            let (prev, chosen) = table.link(j, e).expect("kept tables keep links");
            e = prev as usize;
            work.push((child, chosen as usize));
        }
    }
    count.remove(tables.iter().flatten().count());
    Ok(())
}

/// Fix the assignment of every node of a window from its root entry, and
/// queue the frontier nodes below it. Drops the window's tables.
pub fn descend(
    window: Window,
    entry: usize,
    problem: Problem,
    out: &mut Assignment,
    jobs: &mut Vec<Job>,
    count: &mut TableCount,
    stats: &mut SolveStats,
) -> Result<(), SolveError> {
    let Window { root, kept } = window;
    let mut work = vec![(&root, entry)];
    while let Some((node, entry)) = work.pop() {
        assign(&node.table, entry, problem, out)?;
        if let Some(leaf) = &node.leaf {
            descend_leaf(leaf, entry, problem, out, count, stats)?;
        }
        let mut e = entry;
        for (j, child) in node.children.iter().enumerate().rev() {
            let (prev, chosen) = node.table.link(j, e).expect("kept tables keep links");
            e = prev as usize;
            match child {
                Child::Kept(i) => work.push((&kept[*i], chosen as usize)),
                Child::Frontier { address, vertices } => {
                    jobs.push(Job { address: address.clone(), entry: chosen as usize, vertices: vertices.clone() })
                }
            }
        }
    }
    count.remove(1 + kept.len());
    Ok(())
}
