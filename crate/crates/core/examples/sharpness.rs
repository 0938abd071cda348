//! Confirms that the extremal graphs, one edge below the threshold, have no
//! diameter-two orientation.
//!
//!     cargo run --release --example sharpness

use std::time::Instant;

use orient2::oracle::{extremal_graph, verify_sharpness};
use orient2::threshold_size;

fn main() -> orient2::Result<()> {
    for n in 5..=9 {
        let g = extremal_graph(n)?;
        let start = Instant::now();
        let confirmed = verify_sharpness(n)?;
        println!(
            "n={n}  edges={} (threshold {})  {}  {:.2}s",
            g.size(),
            threshold_size(n),
            if confirmed { "CONFIRMED" } else { "REFUTED" },
            start.elapsed().as_secs_f64()
        );
    }
    Ok(())
}
