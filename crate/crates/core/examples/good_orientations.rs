//! Builds certified good orientations of complete bipartite red graphs, with
//! and without blue edges inside the larger side.
//!
//!     cargo run --example good_orientations

use orient2::good_orient::{
    binomial, orient_bipartite_blue_matchjoin, orient_complete_bipartite, verify_cert,
};
use orient2::Graph;

fn main() -> orient2::Result<()> {
    println!("K_a,b with b up to C(a, a/2):");
    for a in 2..=6 {
        let top = binomial(a, a / 2);
        let ok = (a..=top).all(|b| {
            orient_complete_bipartite(a, b).is_ok_and(|c| c.nontrivial && verify_cert(&c).unwrap())
        });
        println!("  a={a}  b={a}..={top:<3} {}", if ok { "all non-trivially good" } else { "FAILED" });
    }

    // Blue K_3 plus two pendant edges on Y, a = 3, b = 5.
    let blue_y = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 4)])?;
    let cert = orient_bipartite_blue_matchjoin(3, 5, &blue_y)?;
    println!("\nmatch-join a=3 b=5, blue on Y: {:?}", blue_y.edges().collect::<Vec<_>>());
    println!("  classes {:?} / {:?}", cert.host_u1(), cert.host_v1());
    println!("  arcs {:?}", cert.host_arcs().collect::<Vec<_>>());
    println!("  verified: {}", verify_cert(&cert)?);

    // A blue K_4 on Y does not fit when a = 3 and b = 4.
    let k4 = Graph::complete(4)?;
    match orient_bipartite_blue_matchjoin(3, 4, &k4) {
        Ok(_) => println!("unexpected certificate"),
        Err(e) => println!("\na=3 b=4 with a blue K_4: {e}"),
    }
    Ok(())
}
