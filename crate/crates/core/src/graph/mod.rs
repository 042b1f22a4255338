//! The read-only input graph, the graph interface used by every algorithm,
//! and the subgraph stacks.

mod format;
mod minimal_stack;
mod stack;
mod view;

pub use format::{parse_gr, read_gr, write_gr};
pub use minimal_stack::{BitMatrix, MinimalStack, MinimalTop, StackError};
pub use stack::{SubgraphStack, SubgraphTop};
pub use view::{neighbors, DigraphView, GraphView, Neighbors, Pointer, WithTerminals};

use thiserror::Error;

pub type Vertex = usize;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} outside 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Static undirected graph in adjacency-array form. Vertices are `0..n`;
/// every edge is stored as two arcs and each adjacency array is ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<u32>,
    targets: Vec<u32>,
}

impl Graph {
    /// Build from an edge list over `0..n`. Self-loops and duplicate edges are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut deg = vec![0u32; n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w + 1, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            deg[u] += 1;
            deg[v] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0u32);
        for d in &deg {
            let last = *offsets.last().unwrap();
            offsets.push(last + d);
        }
        let mut fill: Vec<u32> = offsets[..n].to_vec();
        let mut targets = vec![0u32; 2 * edges.len()];
        for &(u, v) in edges {
            targets[fill[u] as usize] = v as u32;
            fill[u] += 1;
            targets[fill[v] as usize] = u as u32;
            fill[v] += 1;
        }
        for v in 0..n {
            let adj = &mut targets[offsets[v] as usize..offsets[v + 1] as usize];
            adj.sort_unstable();
            if let Some(w) = adj.windows(2).find(|w| w[0] == w[1]) {
                let (a, b) = (v.min(w[0] as usize), v.max(w[0] as usize));
                return Err(GraphError::DuplicateEdge(a, b));
            }
        }
        Ok(Graph { offsets, targets })
    }

    pub fn empty(n: usize) -> Self {
        Graph { offsets: vec![0; n + 1], targets: Vec::new() }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.targets.len() / 2
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        (self.offsets[v + 1] - self.offsets[v]) as usize
    }

    #[inline]
    pub fn head(&self, v: Vertex, j: usize) -> Vertex {
        self.targets[self.offsets[v] as usize + j] as usize
    }

    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[u32] {
        &self.targets[self.offsets[v] as usize..self.offsets[v + 1] as usize]
    }

    /// Global index of the `j`-th arc leaving `v`.
    #[inline]
    pub fn arc_index(&self, v: Vertex, j: usize) -> usize {
        self.offsets[v] as usize + j
    }

    #[inline]
    pub fn arc_count(&self) -> usize {
        self.targets.len()
    }

    #[inline]
    pub fn first_arc(&self, v: Vertex) -> usize {
        self.offsets[v] as usize
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        let (a, b) = if self.degree(u) <= self.degree(v) { (u, v) } else { (v, u) };
        self.neighbors(a).binary_search(&(b as u32)).is_ok()
    }

    /// Each edge once, as `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.neighbors(u).iter().map(|&v| v as usize).filter(move |&v| u < v).map(move |v| (u, v))
        })
    }

    /// Induced subgraph on `keep` (sorted, distinct), renumbered densely.
    pub fn induced(&self, keep: &[Vertex]) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let edges: Vec<(usize, usize)> = keep
            .iter()
            .flat_map(|&u| self.neighbors(u).iter().map(move |&v| (u, v as usize)))
            .filter(|&(u, v)| u < v && index[v] != usize::MAX)
            .map(|(u, v)| (index[u], index[v]))
            .collect();
        Graph::from_edges(keep.len(), &edges).expect("induced subgraph of a simple graph is simple")
    }
}
