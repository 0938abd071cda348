//! Canonical forms and isomorph-free enumeration of small sparse graphs.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{bit, Graph};

/// Splits cells by neighbor counts into the other cells until stable.
/// Split order depends only on the counts, so it commutes with relabeling.
fn refine(g: &Graph, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    loop {
        let masks: Vec<u64> = cells.iter().map(|c| c.iter().fold(0, |m, &v| m | bit(v))).collect();
        let mut next: Vec<Vec<usize>> = Vec::with_capacity(cells.len());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| (masks.iter().map(|&m| (g.neighbors(v) & m).count_ones()).collect(), v))
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn twins(g: &Graph, u: usize, v: usize) -> bool {
    g.neighbors(u) & !bit(v) == g.neighbors(v) & !bit(u)
}

fn search(g: &Graph, cells: Vec<Vec<usize>>, best: &mut Option<Graph>) {
    let cells = refine(g, cells);
    let Some(at) = cells.iter().position(|c| c.len() > 1) else {
        let mut perm = vec![0; g.order()];
        for (i, c) in cells.iter().enumerate() {
            perm[c[0]] = i;
        }
        let cand = g.permuted(&perm);
        if best.as_ref().is_none_or(|b| cand < *b) {
            *best = Some(cand);
        }
        return;
    };
    let cell = &cells[at];
    let mut tried: Vec<usize> = Vec::new();
    for &v in cell {
        // Swapping twins is an automorphism, so one of each twin class suffices.
        if tried.iter().any(|&t| twins(g, t, v)) {
            continue;
        }
        tried.push(v);
        let mut next = cells.clone();
        let rest: Vec<usize> = cell.iter().copied().filter(|&w| w != v).collect();
        next.splice(at..=at, [vec![v], rest]);
        search(g, next, best);
    }
}

/// Canonical relabeling of a connected graph: the least adjacency structure
/// among the leaves of an individualisation-refinement search.
fn canonical_connected(g: &Graph) -> Graph {
    let mut best = None;
    search(g, vec![(0..g.order()).collect()], &mut best);
    best.expect("search reaches a leaf")
}

/// Canonical form of `g`: components are put in canonical form and laid out
/// in sorted order. Isomorphic graphs get equal forms.
pub fn canonical_form(g: &Graph) -> Graph {
    let mut parts: Vec<Graph> =
        g.components().iter().map(|c| canonical_connected(&g.induced(c))).collect();
    parts.sort_by(|a, b| b.order().cmp(&a.order()).then_with(|| a.cmp(b)));
    let mut out = Graph::empty(g.order()).expect("same order");
    let mut off = 0;
    for p in &parts {
        for (u, v) in p.edges() {
            out.add_edge(off + u, off + v).expect("in range");
        }
        off += p.order();
    }
    out
}

/// One graph per isomorphism class on `n` vertices with at most `max_edges`
/// edges, in canonical form, by edge count and then canonical order.
pub fn enumerate_blue(n: usize, max_edges: usize) -> Result<Vec<Graph>> {
    if n > 12 || max_edges > n {
        return Err(Error::Precondition(format!(
            "enumeration needs n <= 12 and max_edges <= n (got {n}, {max_edges})"
        )));
    }
    let mut level: BTreeSet<Graph> = BTreeSet::from([Graph::empty(n)?]);
    let mut out: Vec<Graph> = level.iter().cloned().collect();
    for _ in 0..max_edges.min(n * n.saturating_sub(1) / 2) {
        let mut next = BTreeSet::new();
        for g in &level {
            for (u, v) in g.complement().edges() {
                let mut h = g.clone();
                h.add_edge(u, v)?;
                next.insert(canonical_form(&h));
            }
        }
        out.extend(next.iter().cloned());
        level = next;
    }
    Ok(out)
}
