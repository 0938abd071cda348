//! Runs the constructor on every graph at the threshold for a range of
//! orders and reports failures and fallback counts.
//!
//!     cargo run --release --example verify_theorem -- 5 10

use orient2::oracle::verify_theorem;

fn main() -> orient2::Result<()> {
    env_logger::init();
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (lo, hi) = match args.as_slice() {
        [lo, hi] => (*lo, *hi),
        [n] => (*n, *n),
        _ => (5, 9),
    };
    for n in lo..=hi {
        let r = verify_theorem(n)?;
        println!(
            "n={:2}  instances={:5}  failures={}  fallbacks={}  time={:.2}s",
            r.n,
            r.instances_checked,
            r.failures.len(),
            r.fallbacks,
            r.wall_time
        );
        for f in &r.failures {
            println!("  failure: {f}");
        }
    }
    Ok(())
}
