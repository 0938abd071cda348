//! Diameter-two orientations of dense graphs.
//!
//! Every simple graph on `n >= 5` vertices with at least `C(n,2) - n + 5`
//! edges has an orientation in which every vertex reaches every other one
//! along a directed path of length at most two. This crate builds such
//! orientations constructively ([`constructor::orient_diameter_two`]),
//! certifies them, and checks the bound and its sharpness exhaustively for
//! small orders with an exact search ([`oracle`]).
//!
//! The input graph is called *red* and its complement *blue*; all of the
//! structural reasoning happens on the sparse blue side.

pub mod cli;
pub mod codec;
pub mod constructor;
pub mod error;
pub mod good_orient;
pub mod graph;
pub mod oracle;
pub mod structure;

pub use error::{Error, Result};
pub use graph::{Digraph, Distance, Graph, Orientation};

/// Smallest size for which an order-`n` graph is guaranteed a diameter-two
/// orientation: `C(n,2) - n + 5`.
pub fn threshold_size(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2 + 5).saturating_sub(n)
}
