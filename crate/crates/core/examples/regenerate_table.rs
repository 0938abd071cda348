//! Recomputes the stored orientations for the smallest five-path blue graphs
//! and prints them in the form used by `SMALL_CASE_TABLE`.
//!
//!     cargo run --release --example regenerate_table

use orient2::constructor::SMALL_CASE_TABLE;
use orient2::oracle::regenerate_small_table;

fn main() -> orient2::Result<()> {
    let table = regenerate_small_table()?;
    let mut stale = false;
    println!("pub const SMALL_CASE_TABLE: &[(&[usize], &str)] = &[");
    for (orders, code) in &table {
        println!("    (&{orders:?}, {code:?}),");
        let stored = SMALL_CASE_TABLE.iter().find(|(k, _)| *k == orders.as_slice());
        stale |= stored.map(|(_, c)| c) != Some(&code.as_str());
    }
    println!("];");
    if stale {
        eprintln!("stored table differs from the regenerated one");
    }
    Ok(())
}
