//! Exhaustive checks of the threshold theorem and of its sharpness.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use super::{enumerate_blue, exists_orientation_diameter2, Decision, SearchBudget};
use crate::codec::{to_digraph6, to_graph6};
use crate::constructor::{orient_diameter_two, small_case_blue, table_families};
use crate::error::{Error, Result};
use crate::graph::{Distance, Graph};

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub n: usize,
    pub instances_checked: usize,
    /// graph6 of every red graph the constructor failed on.
    pub failures: Vec<String>,
    /// Seconds.
    pub wall_time: f64,
    /// Instances that needed the exhaustive fallback.
    pub fallbacks: usize,
}

impl VerificationReport {
    pub fn confirmed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Runs the constructor on the complement of every blue graph with at most
/// `n - 5` edges (one per isomorphism class) and re-checks each result.
pub fn verify_theorem(n: usize) -> Result<VerificationReport> {
    if !(5..=11).contains(&n) {
        return Err(Error::Precondition(format!("verify_theorem needs 5 <= n <= 11, got {n}")));
    }
    let start = Instant::now();
    let blues = enumerate_blue(n, n - 5)?;
    let outcomes: Vec<(bool, usize)> = blues
        .par_iter()
        .map(|b| {
            let red = b.complement();
            match orient_diameter_two(&red) {
                Ok((o, trace)) => {
                    let ok = o.base() == &red && o.dir().diameter() <= Distance::Finite(2);
                    (ok, trace.fallback_count())
                }
                Err(e) => {
                    log::error!("construction failed on {}: {e}", to_graph6(&red));
                    (false, 0)
                }
            }
        })
        .collect();
    let failures = blues
        .iter()
        .zip(&outcomes)
        .filter(|(_, (ok, _))| !ok)
        .map(|(b, _)| to_graph6(&b.complement()))
        .collect();
    Ok(VerificationReport {
        n,
        instances_checked: blues.len(),
        failures,
        wall_time: start.elapsed().as_secs_f64(),
        fallbacks: outcomes.iter().map(|o| o.1).sum(),
    })
}

/// `K_{n-1}` on `0..n-1` plus vertex `n-1` joined to `0, 1, 2`: one edge
/// short of the threshold.
pub fn extremal_graph(n: usize) -> Result<Graph> {
    if n < 5 {
        return Err(Error::Precondition(format!("extremal graph needs n >= 5, got {n}")));
    }
    let mut g = Graph::empty(n)?;
    for u in 0..n - 1 {
        for v in u + 1..n - 1 {
            g.add_edge(u, v)?;
        }
    }
    for u in 0..3 {
        g.add_edge(u, n - 1)?;
    }
    Ok(g)
}

/// True when the extremal graph on `n` vertices has no diameter-two
/// orientation. Running out of budget is an error, not `false`.
pub fn verify_sharpness(n: usize) -> Result<bool> {
    verify_sharpness_with(n, &SearchBudget::default())
}

pub fn verify_sharpness_with(n: usize, budget: &SearchBudget) -> Result<bool> {
    if !(5..=9).contains(&n) {
        return Err(Error::Precondition(format!("verify_sharpness needs 5 <= n <= 9, got {n}")));
    }
    match exists_orientation_diameter2(&extremal_graph(n)?, budget) {
        Decision::No => Ok(true),
        Decision::Yes(_) => Ok(false),
        Decision::Indeterminate => Err(Error::BudgetExhausted),
    }
}

/// Recomputes the stored five-path table: for each family, the digraph6 of
/// the first diameter-two orientation found by the search.
pub fn regenerate_small_table() -> Result<Vec<(Vec<usize>, String)>> {
    table_families()
        .into_iter()
        .map(|orders| {
            let red = small_case_blue(&orders)?.complement();
            match exists_orientation_diameter2(&red, &SearchBudget::default()) {
                Decision::Yes(o) => Ok((orders, to_digraph6(o.dir()))),
                Decision::No => Err(Error::NoConstruction(format!("{orders:?} has no orientation"))),
                Decision::Indeterminate => Err(Error::BudgetExhausted),
            }
        })
        .collect()
}
