//! Classifies the blue components of a graph and looks for the structures
//! the constructor contracts.
//!
//!     cargo run --example classify

use orient2::graph::mask_of;
use orient2::structure::{classify_all, excess, excess_within, find_reduction, find_violating_triple};
use orient2::Graph;

fn main() -> orient2::Result<()> {
    // D_{3,4}, a short dumbbell, K_3, P_3 and isolated vertices.
    let blue = Graph::from_edges(
        24,
        &[
            (0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (3, 5), (3, 6), (4, 5), (4, 6), (5, 6),
            (7, 8), (7, 9), (8, 9), (9, 10), (9, 11), (10, 11),
            (12, 13), (12, 14), (13, 14),
            (15, 16), (16, 17),
        ],
    )?;
    println!("blue graph: n={}, m={}, excess {}", blue.order(), blue.size(), excess(&blue));
    for (comp, class) in classify_all(&blue) {
        if comp.len() > 1 {
            println!("  {:<28} {comp:?}  excess {}", class.to_string(), excess_within(&blue, mask_of(&comp)));
        }
    }
    let singles = classify_all(&blue).iter().filter(|(c, _)| c.len() == 1).count();
    println!("  {singles} isolated vertices");

    match find_reduction(&blue)? {
        Some(plan) => println!("reduction: {} on {:?}", plan.recipe, plan.w),
        None => println!("no reduction"),
    }
    let star = Graph::from_edges(8, &[(0, 1), (0, 2), (0, 3)])?;
    if let Some(t) = find_violating_triple(&star) {
        println!("violating triple in K_1,3 ∪ 4K_1: {:?}", t.x);
    }
    Ok(())
}
