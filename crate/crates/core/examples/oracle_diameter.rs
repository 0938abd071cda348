//! Exact oriented diameters of a few small named graphs.
//!
//!     cargo run --release --example oracle_diameter

use std::time::Instant;

use orient2::oracle::{exact_oriented_diameter, DiameterOutcome, SearchBudget};
use orient2::Graph;

fn petersen() -> orient2::Result<Graph> {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.extend([(i, (i + 1) % 5), (i, i + 5), (i + 5, (i + 2) % 5 + 5)]);
    }
    Graph::from_edges(10, &edges)
}

fn wheel(n: usize) -> orient2::Result<Graph> {
    let mut edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
    edges.extend((1..n).map(|i| (i, i % (n - 1) + 1)));
    Graph::from_edges(n, &edges)
}

fn main() -> orient2::Result<()> {
    let graphs = [
        ("K_4", Graph::complete(4)?),
        ("K_5", Graph::complete(5)?),
        ("C_6", Graph::cycle(6)?),
        ("P_4", Graph::path(4)?),
        ("W_7", wheel(7)?),
        ("Petersen", petersen()?),
    ];
    let budget = SearchBudget::default();
    for (name, g) in &graphs {
        let start = Instant::now();
        let d = match exact_oriented_diameter(g, &budget) {
            DiameterOutcome::Exact(d) => d.to_string(),
            DiameterOutcome::Indeterminate => "indeterminate".into(),
        };
        println!(
            "{name:<9} n={:2} m={:2}  undirected {}  oriented {d:<8} {:.3}s",
            g.order(),
            g.size(),
            g.diameter(),
            start.elapsed().as_secs_f64()
        );
    }
    Ok(())
}
