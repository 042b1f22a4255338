//! Measure the peak number of bits the long-lived structures hold while a
//! decomposition is streamed.

use std::error::Error;

use spantd::budget;
use spantd::decomposition::TdIterator;
use spantd::graph::Graph;

pub fn run() -> Result<(), Box<dyn Error>> {
    for n in [256, 512, 1024] {
        let edges: Vec<(usize, usize)> = (0..n).flat_map(|v| [(v, (v + 1) % n), (v, (v + 2) % n)]).collect();
        let g = Graph::from_edges(n, &edges)?;
        let (nodes, report) = budget::measure(|| {
            let mut it = TdIterator::new(&g, 4)?;
            while it.next()? {}
            Ok::<_, spantd::decomposition::DecompositionError>(it.node_count())
        });
        println!("n {n}: {} nodes, peak {} bits ({:.1} per vertex)", nodes?, report.peak, report.peak as f64 / n as f64);
        let at_peak: u64 = report.at_peak.iter().map(|&(_, bits)| bits).sum();
        assert_eq!(at_peak, report.peak);
    }
    print!("{}", budget::report());
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run()
}
