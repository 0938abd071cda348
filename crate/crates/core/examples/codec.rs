//! Reads and writes graph6, digraph6 and edge lists.
//!
//!     cargo run --example codec

use orient2::codec::{parse_digraph6, parse_edge_list, parse_graph6, to_digraph6, to_graph6};
use orient2::constructor::orient_diameter_two;

fn main() -> orient2::Result<()> {
    let g = parse_edge_list("5 10\n0 1\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n")?;
    let g6 = to_graph6(&g);
    println!("edge list -> graph6 {g6}");
    assert_eq!(parse_graph6(&g6)?, g);

    let (o, _) = orient_diameter_two(&g)?;
    let d6 = to_digraph6(o.dir());
    println!("orientation -> digraph6 {d6}");
    let d = parse_digraph6(&d6)?;
    println!("arcs {:?}", d.arcs().collect::<Vec<_>>());

    match parse_graph6("D?{?") {
        Ok(_) => println!("unexpected"),
        Err(e) => println!("bad input: {e}"),
    }
    Ok(())
}
