//! Catalogue of blue graphs with a direct diameter-two orientation.
//!
//! The larger families are handled by an explicit quadruple
//! `(U1, V1, U2, V2)` fed to [`quadruple_orient`]; the few smallest path
//! families come from a table of orientations found by exhaustive search.

use std::fmt;

use serde::Serialize;

use crate::codec::parse_digraph6;
use crate::error::{Error, Result};
use crate::good_orient::quadruple_orient;
use crate::graph::{Graph, Orientation};
use crate::structure::{classify_all, ComponentClass};

/// Which catalogue entry served a base case.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BaseFamily {
    /// `Q ∪ 7K_1` with `Q ∈ {K_4, D_{4,2}, D_{4,1}}`.
    Case1,
    /// `D_{4,3} ∪ 8K_1`.
    Case2,
    /// `Q ∪ 6K_1` or `Q ∪ K_2 ∪ 5K_1` with `Q ∈ {D_{3,3}, S_{3,3}}`.
    Case3,
    /// `Q ∪ aP_1 ∪ bP_2`, `a + b = 5`, `Q ∈ {D_{3,2}, C_5, D_{3,1}, K_3}`.
    Case4,
    /// Five paths on at most four vertices each, by quadruple.
    Case5,
    /// Five paths, served from the stored search table.
    Case5Table,
}

impl fmt::Display for BaseFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).expect("unit variant");
        f.write_str(s.as_str().expect("string"))
    }
}

#[derive(Clone, Debug)]
pub struct BaseCase {
    pub family: BaseFamily,
    pub orientation: Orientation,
}

/// Orientations of the red complements of the smallest five-path blue
/// graphs, found by the exact search in `oracle::regenerate_small_table`
/// (`cargo run --example regenerate_table` prints a fresh copy).
///
/// Key: path orders in non-increasing order. The blue graph is laid out with
/// the paths in that order, each on consecutive labels.
pub const SMALL_CASE_TABLE: &[(&[usize], &str)] = &[
    (&[1, 1, 1, 1, 1], "&D[SYW?"),
    (&[2, 1, 1, 1, 1], "&EKIFR`o"),
    (&[2, 2, 1, 1, 1], "&FME_oTFHw?"),
    (&[3, 1, 1, 1, 1], "&FLB@W]ado?"),
    (&[4, 1, 1, 1, 1], "&GEpqIB_]`PV?"),
];

/// Blue graph of the table layout for the given path orders.
pub fn small_case_blue(orders: &[usize]) -> Result<Graph> {
    let n = orders.iter().sum();
    let mut g = Graph::empty(n)?;
    let mut start = 0;
    for &len in orders {
        for v in start + 1..start + len {
            g.add_edge(v - 1, v)?;
        }
        start += len;
    }
    Ok(g)
}

/// Whether the five-path family with these (non-increasing) orders is
/// served by the table rather than by a quadruple.
pub fn is_table_family(orders: &[usize]) -> bool {
    let n: usize = orders.iter().sum();
    orders.len() == 5 && (n < 8 || orders == [4, 1, 1, 1, 1])
}

/// Path orders of the table families, each non-increasing.
pub fn table_families() -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for a in 1..=4 {
        for b in 1..=a {
            for c in 1..=b {
                for d in 1..=c {
                    for e in 1..=d {
                        let orders = vec![a, b, c, d, e];
                        if is_table_family(&orders) {
                            out.push(orders);
                        }
                    }
                }
            }
        }
    }
    out
}

/// Relabels a blue disjoint union of paths onto the table layout.
/// Returns `canon[v]` for every vertex.
fn path_layout(b: &Graph, paths: &[Vec<usize>]) -> Vec<usize> {
    let mut canon = vec![0; b.order()];
    let mut next = 0;
    for p in paths {
        let mut prev = usize::MAX;
        let mut cur = *p.iter().find(|&&v| b.degree(v) <= 1).expect("paths have an end");
        for _ in 0..p.len() {
            canon[cur] = next;
            next += 1;
            let step = crate::graph::bits(b.neighbors(cur)).find(|&w| w != prev);
            prev = cur;
            match step {
                Some(w) => cur = w,
                None => break,
            }
        }
    }
    canon
}

fn table_orientation(b: &Graph, paths: &[Vec<usize>], orders: &[usize]) -> Result<Option<Orientation>> {
    let Some((_, code)) = SMALL_CASE_TABLE.iter().find(|(key, _)| *key == orders) else {
        return Ok(None);
    };
    let stored = parse_digraph6(code)?;
    let canon = path_layout(b, paths);
    let mut back = vec![0; canon.len()];
    for (v, &c) in canon.iter().enumerate() {
        back[c] = v;
    }
    let arcs: Vec<_> = stored.arcs().map(|(p, q)| (back[p], back[q])).collect();
    let red = b.complement();
    if red.size() != stored.arc_count() {
        return Err(Error::Verification("stored table entry does not match its layout".into()));
    }
    Ok(Some(Orientation::with_tiebreak(red, arcs)?))
}

/// Vertex sets of a quadruple.
type Quad = (Vec<usize>, Vec<usize>, Vec<usize>, Vec<usize>);

fn cat(parts: &[&Vec<usize>]) -> Vec<usize> {
    let mut v: Vec<usize> = parts.iter().flat_map(|p| p.iter().copied()).collect();
    v.sort_unstable();
    v
}

/// Quadruple for five blue paths with `n >= 8` outside the table.
fn five_paths_quadruple(paths: &[Vec<usize>]) -> Quad {
    // `paths` is sorted by non-increasing order.
    let orders: Vec<usize> = paths.iter().map(Vec::len).collect();
    let p = |i: usize| &paths[i];
    match orders.as_slice() {
        [3, 2, 1, 1, 1] => (vec![p(1)[0]], vec![p(1)[1]], cat(&[p(2), p(3), p(4)]), p(0).clone()),
        [2, 2, 2, 1, 1] => (vec![p(0)[0]], vec![p(0)[1]], cat(&[p(1), p(3)]), cat(&[p(2), p(4)])),
        [4, 2, 1, 1, 1] => (vec![p(1)[0]], vec![p(1)[1]], cat(&[p(2), p(3), p(4)]), p(0).clone()),
        [3, 3, 1, 1, 1] => (p(2).clone(), p(3).clone(), p(0).clone(), cat(&[p(1), p(4)])),
        [3, 2, 2, 1, 1] => (p(3).clone(), p(4).clone(), p(0).clone(), cat(&[p(1), p(2)])),
        [2, 2, 2, 2, 1] => (vec![p(0)[0]], vec![p(0)[1]], cat(&[p(1), p(2)]), cat(&[p(3), p(4)])),
        [2, 2, 2, 2, 2] => (vec![p(0)[0]], vec![p(0)[1]], cat(&[p(1), p(2)]), cat(&[p(3), p(4)])),
        _ => {
            // Two paths of the smallest repeated order go to Z; the longest
            // remaining path is one class of W and the other two the second.
            let i = (1..=4)
                .find(|&i| orders.iter().filter(|&&o| o == i).count() >= 2)
                .expect("five paths of order at most four repeat an order");
            let pair: Vec<usize> = (0..5).filter(|&k| orders[k] == i).rev().take(2).collect();
            let rest: Vec<usize> = (0..5).filter(|k| !pair.contains(k)).collect();
            (
                p(pair[1]).clone(),
                p(pair[0]).clone(),
                p(rest[0]).clone(),
                cat(&[p(rest[1]), p(rest[2])]),
            )
        }
    }
}

/// Diameter-two orientation of the red complement of `b` when `b` is one of
/// the catalogue graphs (up to isomorphism).
pub fn base_case_orient(b: &Graph) -> Result<Option<BaseCase>> {
    let classes = classify_all(b);
    let mut paths: Vec<Vec<usize>> = Vec::new();
    let mut others: Vec<(Vec<usize>, ComponentClass)> = Vec::new();
    for (c, class) in classes {
        match class {
            ComponentClass::Path(_) => paths.push(c),
            _ => others.push((c, class)),
        }
    }
    paths.sort_by_key(|c| (std::cmp::Reverse(c.len()), c[0]));
    let orders: Vec<usize> = paths.iter().map(Vec::len).collect();
    let singles: Vec<usize> = paths.iter().filter(|p| p.len() == 1).map(|p| p[0]).collect();
    let count = |k: usize| orders.iter().filter(|&&o| o == k).count();

    let (family, quad): (BaseFamily, Quad) = match others.as_slice() {
        [] => {
            if orders.len() != 5 || orders.iter().any(|&o| o > 4) {
                return Ok(None);
            }
            if is_table_family(&orders) {
                return Ok(table_orientation(b, &paths, &orders)?
                    .map(|orientation| BaseCase { family: BaseFamily::Case5Table, orientation }));
            }
            (BaseFamily::Case5, five_paths_quadruple(&paths))
        }
        [(q, class)] => {
            use ComponentClass::*;
            let s = |r: std::ops::Range<usize>| singles[r].to_vec();
            match class {
                Complete(4) | ProperDumbbell(2, 4) | ProperDumbbell(1, 4)
                    if orders.len() == 7 && count(1) == 7 =>
                {
                    (BaseFamily::Case1, (s(0..1), s(1..2), q.clone(), s(2..7)))
                }
                ProperDumbbell(3, 4) if orders.len() == 8 && count(1) == 8 => {
                    (BaseFamily::Case2, (s(0..1), s(1..2), s(2..8), q.clone()))
                }
                ProperDumbbell(3, 3) | ProperShortDumbbell(3, 3)
                    if orders.len() == 6 && count(1) == 6 =>
                {
                    (BaseFamily::Case3, (s(0..1), s(1..2), s(2..6), q.clone()))
                }
                ProperDumbbell(3, 3) | ProperShortDumbbell(3, 3)
                    if orders.len() == 6 && count(2) == 1 && count(1) == 5 =>
                {
                    let k2 = &paths[0];
                    (BaseFamily::Case3, (vec![k2[0]], vec![k2[1]], s(0..5), q.clone()))
                }
                ProperDumbbell(2, 3) | FiveCycle | ProperDumbbell(1, 3) | Complete(3)
                    if orders.len() == 5 && count(1) + count(2) == 5 =>
                {
                    let i = if count(1) >= 2 { 1 } else { 2 };
                    let pair: Vec<usize> = (0..5).filter(|&k| orders[k] == i).rev().take(2).collect();
                    let h: Vec<&Vec<usize>> =
                        (0..5).filter(|k| !pair.contains(k)).map(|k| &paths[k]).collect();
                    (
                        BaseFamily::Case4,
                        (paths[pair[1]].clone(), paths[pair[0]].clone(), cat(&h), q.clone()),
                    )
                }
                _ => return Ok(None),
            }
        }
        _ => return Ok(None),
    };
    let (u1, v1, u2, v2) = quad;
    let orientation = quadruple_orient(b, &u1, &v1, &u2, &v2)?;
    Ok(Some(BaseCase { family, orientation }))
}
