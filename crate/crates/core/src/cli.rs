//! Command-line front end. The `orient2` binary is a thin wrapper around
//! [`run`], which takes its streams as arguments so it can be driven from
//! tests.
//!
//! Exit codes: 0 success, 1 negative or indeterminate answer, 2 bad input,
//! 3 failed internal verification.

use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde_json::json;

use crate::codec::{parse_digraph6, parse_edge_list, parse_graph6, to_digraph6, CodecError};
use crate::constructor::orient_diameter_two_with;
use crate::constructor::ConstructOptions;
use crate::error::Error;
use crate::graph::{Distance, Graph};
use crate::oracle::{
    exact_oriented_diameter, extremal_graph, verify_sharpness_with, verify_theorem,
    DiameterOutcome, SearchBudget,
};
use crate::structure::{classify_all, excess_within};
use crate::{graph::mask_of, threshold_size};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_BAD_INPUT: i32 = 2;
pub const EXIT_VERIFICATION: i32 = 3;

pub const JSON_SCHEMA: &str = "orient2/1";
pub const BUDGET_ENV: &str = "ORIENT2_BUDGET";

#[derive(Parser, Debug)]
#[command(name = "orient2", version, about = "Diameter-two orientations of dense graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Orient each input graph with diameter two.
    Orient {
        /// Read from a file instead of stdin.
        #[arg(long)]
        file: Option<PathBuf>,
        /// Include the construction steps.
        #[arg(long)]
        trace: bool,
        /// One JSON object per graph.
        #[arg(long)]
        json: bool,
    },
    /// Print the oriented diameter of each input graph.
    Diameter {
        #[arg(long)]
        file: Option<PathBuf>,
        /// Always run the exhaustive search.
        #[arg(long)]
        exact: bool,
        /// Search node budget.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Check every graph at the threshold on N vertices.
    Verify {
        #[arg(long)]
        n: usize,
    },
    /// Check that the extremal graph on N vertices has no diameter-two orientation.
    Sharpness {
        #[arg(long)]
        n: usize,
        /// Search node budget.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Classify the components of the complement of each input graph.
    Classify {
        #[arg(long)]
        file: Option<PathBuf>,
    },
}

/// Reads graphs: a single edge list, or one graph6 string per line.
fn read_graphs(file: &Option<PathBuf>, stdin: &mut dyn Read) -> Result<Vec<Graph>, String> {
    let mut text = String::new();
    match file {
        Some(path) => {
            text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?
        }
        None => {
            stdin.read_to_string(&mut text).map_err(|e| format!("stdin: {e}"))?;
        }
    }
    let lines: Vec<&str> =
        text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')).collect();
    let Some(first) = lines.first() else {
        return Err(CodecError::Empty.to_string());
    };
    let words: Vec<&str> = first.split_whitespace().collect();
    if words.len() == 2 && words.iter().all(|w| w.parse::<usize>().is_ok()) {
        return parse_edge_list(&text).map(|g| vec![g]).map_err(|e| e.to_string());
    }
    lines
        .iter()
        .enumerate()
        .map(|(i, l)| parse_graph6(l).map_err(|e| format!("graph {}: {e}", i + 1)))
        .collect()
}

fn budget(flag: Option<u64>, stderr: &mut dyn Write) -> Result<SearchBudget, i32> {
    if let Some(n) = flag {
        return Ok(SearchBudget::nodes(n));
    }
    match std::env::var(BUDGET_ENV) {
        Ok(v) => match v.trim().parse::<u64>() {
            Ok(n) => Ok(SearchBudget::nodes(n)),
            Err(_) => {
                let _ = writeln!(stderr, "error: {BUDGET_ENV} must be a node count, got {v:?}");
                Err(EXIT_BAD_INPUT)
            }
        },
        Err(_) => Ok(SearchBudget::default()),
    }
}

fn orient(
    graphs: &[Graph],
    trace: bool,
    as_json: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> std::io::Result<i32> {
    let options = ConstructOptions::default();
    let mut code = EXIT_OK;
    for g in graphs {
        let (o, steps) = match orient_diameter_two_with(g, &options) {
            Ok(r) => r,
            Err(e @ Error::BelowThreshold { .. }) => {
                writeln!(err, "error: {e}")?;
                code = code.max(EXIT_BAD_INPUT);
                continue;
            }
            Err(e) => {
                writeln!(err, "error: {e}")?;
                code = code.max(EXIT_VERIFICATION);
                continue;
            }
        };
        let line = to_digraph6(o.dir());
        let recheck = parse_digraph6(&line).map(|d| d.underlying() == *g && d.has_diameter_at_most_two());
        if recheck != Ok(true) {
            writeln!(err, "error: output failed re-verification")?;
            code = code.max(EXIT_VERIFICATION);
            continue;
        }
        if as_json {
            let mut doc = json!({
                "schema": JSON_SCHEMA,
                "n": g.order(),
                "arcs": o.dir().arcs().collect::<Vec<_>>(),
                "diameter": 2,
            });
            if trace {
                doc["trace"] = serde_json::to_value(&steps.steps).expect("serializable");
            }
            writeln!(out, "{doc}")?;
        } else {
            writeln!(out, "{line}")?;
            if trace {
                writeln!(err, "{}", serde_json::to_string(&steps.steps).expect("serializable"))?;
            }
        }
    }
    Ok(code)
}

fn diameter(
    graphs: &[Graph],
    exact: bool,
    budget: &SearchBudget,
    out: &mut dyn Write,
) -> std::io::Result<i32> {
    let mut code = EXIT_OK;
    for g in graphs {
        let n = g.order();
        if !exact && n >= 5 && g.size() >= threshold_size(n) {
            // A diameter-one orientation would need arcs both ways.
            writeln!(out, "2")?;
            continue;
        }
        match exact_oriented_diameter(g, budget) {
            DiameterOutcome::Exact(Distance::Finite(d)) => writeln!(out, "{d}")?,
            DiameterOutcome::Exact(Distance::Infinite) => writeln!(out, "infinite")?,
            DiameterOutcome::Indeterminate => {
                writeln!(out, "indeterminate")?;
                code = EXIT_NEGATIVE;
            }
        }
    }
    Ok(code)
}

fn classify(graphs: &[Graph], out: &mut dyn Write) -> std::io::Result<i32> {
    for (i, g) in graphs.iter().enumerate() {
        if i > 0 {
            writeln!(out)?;
        }
        writeln!(out, "component\torder\tclass\texcess")?;
        let blue = g.complement();
        for (comp, class) in classify_all(&blue) {
            let labels: Vec<String> = comp.iter().map(usize::to_string).collect();
            let ex = excess_within(&blue, mask_of(&comp));
            writeln!(out, "{}\t{}\t{class}\t{ex}", labels.join(","), comp.len())?;
        }
    }
    Ok(EXIT_OK)
}

fn dispatch(cli: Cli, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> std::io::Result<i32> {
    let load = |file: &Option<PathBuf>, stdin: &mut dyn Read, err: &mut dyn Write| {
        read_graphs(file, stdin).map_err(|e| {
            let _ = writeln!(err, "error: {e}");
        })
    };
    match cli.command {
        Command::Orient { file, trace, json } => match load(&file, stdin, err) {
            Ok(gs) => orient(&gs, trace, json, out, err),
            Err(()) => Ok(EXIT_BAD_INPUT),
        },
        Command::Diameter { file, exact, budget: b } => {
            let b = match budget(b, err) {
                Ok(b) => b,
                Err(code) => return Ok(code),
            };
            match load(&file, stdin, err) {
                Ok(gs) => diameter(&gs, exact, &b, out),
                Err(()) => Ok(EXIT_BAD_INPUT),
            }
        }
        Command::Verify { n } => match verify_theorem(n) {
            Ok(r) => {
                writeln!(
                    out,
                    "n={}: {} instances checked, {} failures, {} fallbacks, {:.2}s",
                    r.n,
                    r.instances_checked,
                    r.failures.len(),
                    r.fallbacks,
                    r.wall_time
                )?;
                for f in &r.failures {
                    writeln!(out, "failure {f}")?;
                }
                Ok(if r.confirmed() { EXIT_OK } else { EXIT_VERIFICATION })
            }
            Err(e) => {
                writeln!(err, "error: {e}")?;
                Ok(EXIT_BAD_INPUT)
            }
        },
        Command::Sharpness { n, budget: b } => {
            let b = match budget(b, err) {
                Ok(b) => b,
                Err(code) => return Ok(code),
            };
            if extremal_graph(n).is_err() || !(5..=9).contains(&n) {
                writeln!(err, "error: sharpness needs 5 <= n <= 9, got {n}")?;
                return Ok(EXIT_BAD_INPUT);
            }
            match verify_sharpness_with(n, &b) {
                Ok(true) => {
                    writeln!(out, "CONFIRMED")?;
                    Ok(EXIT_OK)
                }
                Ok(false) => {
                    writeln!(out, "REFUTED")?;
                    Ok(EXIT_NEGATIVE)
                }
                Err(e) => {
                    writeln!(out, "indeterminate")?;
                    writeln!(err, "error: {e}")?;
                    Ok(EXIT_NEGATIVE)
                }
            }
        }
        Command::Classify { file } => match load(&file, stdin, err) {
            Ok(gs) => classify(&gs, out),
            Err(()) => Ok(EXIT_BAD_INPUT),
        },
    }
}

/// Runs the command line `args` (program name first) and returns the exit
/// code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_BAD_INPUT
                }
            };
        }
    };
    match dispatch(cli, stdin, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_BAD_INPUT
        }
    }
}
