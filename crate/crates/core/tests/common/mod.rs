#![allow(dead_code)]

use spantd::graph::Graph;
use spantd_oracle::OracleGraph;

pub fn to_graph(g: &OracleGraph) -> Graph {
    Graph::from_edges(g.n(), &g.edges()).expect("oracle graphs are simple")
}

pub fn to_oracle(g: &Graph) -> OracleGraph {
    OracleGraph::from_edges(g.n(), &g.edges().collect::<Vec<_>>())
}
