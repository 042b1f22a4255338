use super::PathsError;
use crate::graph::{GraphView, Vertex};

/// Unit-capacity flow network with paired arcs (`e ^ 1` is the reverse).
struct Network {
    head: Vec<usize>,
    cap: Vec<u8>,
    out: Vec<Vec<usize>>,
}

impl Network {
    fn new(nodes: usize) -> Self {
        Network { head: Vec::new(), cap: Vec::new(), out: vec![Vec::new(); nodes] }
    }

    fn arc(&mut self, a: usize, b: usize) {
        self.out[a].push(self.head.len());
        self.head.push(b);
        self.cap.push(1);
        self.out[b].push(self.head.len());
        self.head.push(a);
        self.cap.push(0);
    }

    /// One augmenting path by iterative DFS in arc insertion order.
    fn augment(&mut self, source: usize, sink: usize) -> bool {
        let mut seen = vec![false; self.out.len()];
        let mut stack: Vec<(usize, usize)> = vec![(source, 0)];
        let mut via: Vec<usize> = Vec::new();
        seen[source] = true;
        while let Some(&(node, i)) = stack.last() {
            if node == sink {
                for &e in &via {
                    self.cap[e] -= 1;
                    self.cap[e ^ 1] += 1;
                }
                return true;
            }
            if i == self.out[node].len() {
                stack.pop();
                via.pop();
                continue;
            }
            stack.last_mut().expect("non-empty").1 += 1;
            let e = self.out[node][i];
            let w = self.head[e];
            if self.cap[e] > 0 && !seen[w] {
                seen[w] = true;
                stack.push((w, 0));
                via.push(e);
            }
        }
        false
    }

    fn flow_successor(&self, node: usize) -> Option<usize> {
        self.out[node].iter().find(|&&e| e % 2 == 0 && self.cap[e] == 0).map(|&e| self.head[e])
    }
}

/// Vertex-disjoint paths inside `region` from every vertex of `sources` to
/// `sinks`, by a fixed flow routine: vertices and adjacency lists are taken
/// in ascending order and augmenting paths are found by DFS. The result
/// depends only on the arguments. `allowed(u, w)` restricts the arcs.
///
/// Paths are listed by ascending start vertex.
pub fn region_paths<V, F>(
    view: &V,
    region: &[Vertex],
    sources: &[Vertex],
    sinks: &[Vertex],
    allowed: F,
) -> Result<Vec<Vec<Vertex>>, PathsError>
where
    V: GraphView + ?Sized,
    F: Fn(Vertex, Vertex) -> bool,
{
    let mut verts = region.to_vec();
    verts.sort_unstable();
    verts.dedup();
    let local = |v: Vertex| verts.binary_search(&v).ok();
    let r = verts.len();
    let (src, snk) = (2 * r, 2 * r + 1);
    let mut net = Network::new(2 * r + 2);
    let mut starts: Vec<usize> = sources.iter().filter_map(|&v| local(v)).collect();
    starts.sort_unstable();
    starts.dedup();
    let mut ends: Vec<usize> = sinks.iter().filter_map(|&v| local(v)).collect();
    ends.sort_unstable();
    ends.dedup();
    let wanted = starts.len();
    if ends.len() != wanted || starts.len() != sources.len() {
        return Err(PathsError::RegionFlow { found: ends.len().min(wanted), wanted: sources.len() });
    }
    for &i in &starts {
        net.arc(src, 2 * i);
    }
    let mut adj = Vec::new();
    for (i, &v) in verts.iter().enumerate() {
        net.arc(2 * i, 2 * i + 1);
        adj.clear();
        adj.extend(crate::graph::neighbors(view, v).filter_map(|w| local(w).filter(|_| allowed(v, w))));
        adj.sort_unstable();
        for &j in &adj {
            net.arc(2 * i + 1, 2 * j);
        }
    }
    for &j in &ends {
        net.arc(2 * j + 1, snk);
    }
    let mut found = 0;
    while found < wanted && net.augment(src, snk) {
        found += 1;
    }
    if found < wanted {
        return Err(PathsError::RegionFlow { found, wanted });
    }
    let mut paths = Vec::with_capacity(wanted);
    for &i in &starts {
        let mut path = vec![verts[i]];
        let mut node = 2 * i;
        loop {
            let out = net.flow_successor(node).expect("flow leaves every used in-node");
            debug_assert_eq!(out, node + 1);
            match net.flow_successor(out).expect("flow leaves every used out-node") {
                x if x == snk => break,
                next => {
                    node = next;
                    path.push(verts[next / 2]);
                }
            }
        }
        paths.push(path);
    }
    Ok(paths)
}
