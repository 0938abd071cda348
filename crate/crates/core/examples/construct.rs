//! Orients a graph at the threshold and prints the orientation together with
//! the reduction steps that produced it.
//!
//!     cargo run --example construct
//!     cargo run --example construct -- 'graph6 string'

use orient2::codec::{parse_graph6, to_digraph6, to_graph6};
use orient2::constructor::{orient_diameter_two, replay, TraceStep};
use orient2::Graph;

fn main() -> orient2::Result<()> {
    let red = match std::env::args().nth(1) {
        Some(s) => parse_graph6(&s)?,
        None => {
            // Blue: K_4, a triangle, two P_2s and seven isolated vertices.
            let blue = Graph::from_edges(
                16,
                &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (4, 5), (5, 6), (4, 6), (7, 8), (9, 10)],
            )?;
            blue.complement()
        }
    };
    println!("input   {} (n={}, m={})", to_graph6(&red), red.order(), red.size());

    let (o, trace) = orient_diameter_two(&red)?;
    for step in &trace.steps {
        match step {
            TraceStep::Pad { deleted } => println!("pad     {} edges set aside", deleted.len()),
            TraceStep::BaseCase { family } => println!("base    {family}"),
            TraceStep::Reduce { w, recipe, .. } => println!("reduce  {recipe} on {w:?}"),
            TraceStep::ContractTriple { x } => println!("triple  {x:?}"),
            TraceStep::FallbackOracle { reason } => println!("search  {reason}"),
        }
    }
    println!("output  {}", to_digraph6(o.dir()));
    println!("diameter {}", o.dir().diameter());
    assert_eq!(replay(&red, &trace)?, o);
    println!("trace replays to the same orientation");
    Ok(())
}
