//! Structural analysis of the blue graph.
//!
//! Covers excess bookkeeping, classification of blue components into the
//! families that survive in a smallest counterexample, independent triples
//! whose contraction shrinks the instance, tree-forest selection, and the
//! ordered search for reductions: unions of whole blue components with
//! excess at least `-1` whose red graph carries a non-trivial good
//! orientation.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::good_orient::{certify_split, GoodOrientationCert};
use crate::graph::{bit, bits, mask_of, Graph};

/// `m - n`.
pub fn excess(g: &Graph) -> i64 {
    g.size() as i64 - g.order() as i64
}

/// Excess of the subgraph induced by `mask`.
pub fn excess_within(g: &Graph, mask: u64) -> i64 {
    g.size_within(mask) as i64 - mask.count_ones() as i64
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ComponentClass {
    Path(usize),
    Complete(usize),
    /// `D_{k,l}` with `k <= l` and `l >= 3`.
    ProperDumbbell(usize, usize),
    /// `S_{k,l}` with `3 <= k <= l`.
    ProperShortDumbbell(usize, usize),
    FiveCycle,
    Other,
}

impl fmt::Display for ComponentClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComponentClass::Path(i) => write!(f, "PATH({i})"),
            ComponentClass::Complete(i) => write!(f, "COMPLETE({i})"),
            ComponentClass::ProperDumbbell(k, l) => write!(f, "PROPER_DUMBBELL({k},{l})"),
            ComponentClass::ProperShortDumbbell(k, l) => write!(f, "PROPER_SHORT_DUMBBELL({k},{l})"),
            ComponentClass::FiveCycle => f.write_str("FIVE_CYCLE"),
            ComponentClass::Other => f.write_str("OTHER"),
        }
    }
}

fn is_component(g: &Graph, comp: &[usize]) -> bool {
    let m = mask_of(comp);
    !comp.is_empty()
        && comp.iter().all(|&v| v < g.order())
        && m.count_ones() as usize == comp.len()
        && g.reach(comp[0]) == m
}

/// Splits `h` minus the vertices/edge already removed into its components
/// and reports their orders if there are exactly two and both are cliques.
fn two_cliques(h: &Graph, within: u64) -> Option<(usize, usize)> {
    let first = within.trailing_zeros() as usize;
    let reach = |start: usize| {
        let mut seen = bit(start);
        let mut frontier = seen;
        while frontier != 0 {
            let next = bits(frontier).fold(0, |acc, u| acc | h.neighbors(u)) & within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    };
    let a = reach(first);
    let rest = within & !a;
    if rest == 0 {
        return None;
    }
    let b = reach(rest.trailing_zeros() as usize);
    if a | b != within || !h.is_clique(a) || !h.is_clique(b) {
        return None;
    }
    let (x, y) = (a.count_ones() as usize, b.count_ones() as usize);
    Some((x.min(y), x.max(y)))
}

/// Classifies the blue component `comp` of `g`.
///
/// Tests run in the order path, complete, five-cycle, short dumbbell,
/// dumbbell; the families are disjoint so the first hit is the only one.
pub fn classify_component(g: &Graph, comp: &[usize]) -> Result<ComponentClass> {
    if !is_component(g, comp) {
        return Err(Error::Precondition("vertex set is not a connected component".into()));
    }
    let h = g.induced(comp);
    let (n, m) = (h.order(), h.size());
    let max_deg = (0..n).map(|v| h.degree(v)).max().unwrap_or(0);
    if m + 1 == n {
        return Ok(if max_deg <= 2 { ComponentClass::Path(n) } else { ComponentClass::Other });
    }
    if 2 * m == n * (n - 1) {
        return Ok(ComponentClass::Complete(n));
    }
    if n == 5 && (0..n).all(|v| h.degree(v) == 2) {
        return Ok(ComponentClass::FiveCycle);
    }
    let all = h.vertex_mask();
    for v in (0..n).filter(|&v| h.degree(v) == n - 1) {
        if let Some((s, t)) = two_cliques(&h, all & !bit(v)) {
            if s >= 2 {
                return Ok(ComponentClass::ProperShortDumbbell(s + 1, t + 1));
            }
        }
    }
    for (u, v) in h.bridges() {
        let mut cut = h.clone();
        cut.remove_edge(u, v);
        if let Some((k, l)) = two_cliques(&cut, all) {
            if l >= 3 {
                return Ok(ComponentClass::ProperDumbbell(k, l));
            }
        }
    }
    Ok(ComponentClass::Other)
}

/// Every component with its class, in [`Graph::components`] order.
pub fn classify_all(g: &Graph) -> Vec<(Vec<usize>, ComponentClass)> {
    g.components()
        .into_iter()
        .map(|c| {
            let class = classify_component(g, &c).expect("components are components");
            (c, class)
        })
        .collect()
}

/// An independent blue triple together with the outside vertices having
/// exactly two (`n2`) or three (`n3`) blue neighbors in it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TripleWitness {
    pub x: [usize; 3],
    pub n2: Vec<usize>,
    pub n3: Vec<usize>,
}

impl TripleWitness {
    pub fn is_violating(&self) -> bool {
        self.n2.len() >= 2 || !self.n3.is_empty()
    }
}

/// Neighborhood profile of the triple `x`, which must be blue-independent.
pub fn triple_profile(b: &Graph, x: [usize; 3]) -> TripleWitness {
    let [a, c, d] = x.map(|v| b.neighbors(v));
    let n3 = a & c & d;
    let n2 = ((a & c) | (a & d) | (c & d)) & !n3;
    TripleWitness { x, n2: bits(n2).collect(), n3: bits(n3).collect() }
}

/// First blue-independent triple, in lexicographic order, with
/// `|N2| >= 2` or `N3 ≠ ∅`.
pub fn find_violating_triple(b: &Graph) -> Option<TripleWitness> {
    let n = b.order();
    for x1 in 0..n {
        for x2 in x1 + 1..n {
            if b.has_edge(x1, x2) {
                continue;
            }
            for x3 in x2 + 1..n {
                if b.has_edge(x1, x3) || b.has_edge(x2, x3) {
                    continue;
                }
                let w = triple_profile(b, [x1, x2, x3]);
                if w.is_violating() {
                    return Some(w);
                }
            }
        }
    }
    None
}

fn is_tree(g: &Graph, comp: &[usize]) -> bool {
    g.size_within(mask_of(comp)) + 1 == comp.len()
}

/// Tree components, listed as in [`Graph::components`].
pub fn tree_components(b: &Graph) -> Vec<Vec<usize>> {
    b.components().into_iter().filter(|c| is_tree(b, c)).collect()
}

/// Checks `#trees = -ex(B) + Σ ex(non-tree components)`.
pub fn tree_accounting_holds(b: &Graph) -> bool {
    let comps = b.components();
    let trees = comps.iter().filter(|c| is_tree(b, c)).count() as i64;
    let non_tree_excess: i64 =
        comps.iter().filter(|c| !is_tree(b, c)).map(|c| excess_within(b, mask_of(c))).sum();
    trees == -excess(b) + non_tree_excess
}

/// Union of tree components of order close to `t`, chosen greedily from the
/// `t` largest trees with at most `m0` edges: the shortest prefix reaching
/// `t` vertices. Returns the chosen components.
pub fn select_forest(b: &Graph, t: usize, m0: usize) -> Result<Vec<Vec<usize>>> {
    if t == 0 {
        return Err(Error::Precondition("forest order must be positive".into()));
    }
    let mut trees: Vec<Vec<usize>> =
        tree_components(b).into_iter().filter(|c| c.len() <= m0 + 1).collect();
    if trees.len() < t {
        return Err(Error::Precondition(format!(
            "need {t} tree components with at most {m0} edges, found {}",
            trees.len()
        )));
    }
    trees.sort_by_key(|c| (std::cmp::Reverse(c.len()), c[0]));
    trees.truncate(t);
    let mut chosen = Vec::new();
    let mut order = 0;
    for c in trees {
        order += c.len();
        chosen.push(c);
        if order >= t {
            break;
        }
    }
    Ok(chosen)
}

/// Named reduction recipes, tried in this order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Recipe {
    /// Non-tree component on at least seven vertices plus a forest of order
    /// about `n1 - 2`.
    LargeComponentForest,
    /// `D_{3,4}` plus a forest of order about five.
    D34Forest,
    /// `D_{3,4}` against another non-tree component and two isolated vertices.
    D34WithNonTree,
    /// Two non-tree components against each other.
    TwoNonTrees,
    /// A non-tree component against one tree component.
    NonTreeWithTree,
    /// Two non-tree components and one tree component.
    TwoNonTreesWithTree,
    /// A small non-tree component against a few tree components.
    SmallTreesForest,
}

impl fmt::Display for Recipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).expect("unit variant");
        f.write_str(s.as_str().expect("string"))
    }
}

#[derive(Clone, Debug)]
pub struct ReductionPlan {
    /// Sorted union of the two classes.
    pub w: Vec<usize>,
    pub x: Vec<usize>,
    pub y: Vec<usize>,
    pub recipe: Recipe,
    pub excess_of_w: i64,
    pub cert: GoodOrientationCert,
}

fn union(parts: &[&[usize]]) -> Vec<usize> {
    let mut v: Vec<usize> = parts.iter().flat_map(|p| p.iter().copied()).collect();
    v.sort_unstable();
    v
}

/// Groups tree components by (order, degree sequence), keeping label order.
fn tree_types(b: &Graph, trees: &[Vec<usize>]) -> Vec<Vec<Vec<usize>>> {
    let mut keyed: Vec<((usize, Vec<usize>), Vec<Vec<usize>>)> = Vec::new();
    for t in trees {
        let mut degs: Vec<usize> = t.iter().map(|&v| b.degree(v)).collect();
        degs.sort_unstable();
        let key = (t.len(), degs);
        match keyed.iter_mut().find(|(k, _)| *k == key) {
            Some((_, group)) => group.push(t.clone()),
            None => keyed.push((key, vec![t.clone()])),
        }
    }
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    keyed.into_iter().map(|(_, g)| g).collect()
}

/// Multisets of tree types with exactly `k` members, as count vectors in
/// lexicographically decreasing order.
fn count_vectors(avail: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn rec(avail: &[usize], k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == avail.len() {
            if k == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let i = cur.len();
        for c in (0..=avail[i].min(k)).rev() {
            cur.push(c);
            rec(avail, k - c, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(avail, k, &mut Vec::new(), &mut out);
    out
}

struct Candidate {
    recipe: Recipe,
    x: Vec<usize>,
    y: Vec<usize>,
}

fn candidates(b: &Graph) -> Vec<Candidate> {
    let comps = b.components();
    let trees: Vec<Vec<usize>> = comps.iter().filter(|c| is_tree(b, c)).cloned().collect();
    let non_trees: Vec<Vec<usize>> = comps.iter().filter(|c| !is_tree(b, c)).cloned().collect();
    let types = tree_types(b, &trees);
    let max_tree_size = trees.iter().map(|t| t.len() - 1).max();
    let class = |c: &[usize]| classify_component(b, c).expect("component");
    let mut out = Vec::new();
    let mut push = |recipe, x: Vec<usize>, y: Vec<usize>| out.push(Candidate { recipe, x, y });

    // A component on seven or more vertices.
    for b1 in non_trees.iter().filter(|c| c.len() >= 7) {
        if class(b1) == ComponentClass::ProperDumbbell(3, 4) {
            continue;
        }
        let t = b1.len() - 2;
        if let Some(m0) = max_tree_size {
            if let Ok(f) = select_forest(b, t, m0) {
                let f: Vec<&[usize]> = f.iter().map(Vec::as_slice).collect();
                push(Recipe::LargeComponentForest, b1.clone(), union(&f));
            }
        }
    }
    for b1 in non_trees.iter().filter(|c| class(c) == ComponentClass::ProperDumbbell(3, 4)) {
        if let Some(m0) = max_tree_size.filter(|&m| m >= 1) {
            if let Ok(f) = select_forest(b, 5, m0) {
                let f: Vec<&[usize]> = f.iter().map(Vec::as_slice).collect();
                push(Recipe::D34Forest, b1.clone(), union(&f));
            }
        }
        let singles: Vec<&[usize]> =
            trees.iter().filter(|t| t.len() == 1).take(2).map(Vec::as_slice).collect();
        if singles.len() == 2 {
            for b2 in non_trees.iter().filter(|c| *c != b1) {
                push(Recipe::D34WithNonTree, b1.clone(), union(&[b2, singles[0], singles[1]]));
            }
        }
    }

    // Two non-tree components.
    for (i, b1) in non_trees.iter().enumerate() {
        for b2 in &non_trees[i + 1..] {
            push(Recipe::TwoNonTrees, b1.clone(), b2.clone());
        }
    }
    for b1 in &non_trees {
        for group in &types {
            push(Recipe::NonTreeWithTree, b1.clone(), group[0].clone());
        }
    }
    for (i, b1) in non_trees.iter().enumerate() {
        for b2 in &non_trees[i + 1..] {
            for group in &types {
                let t = group[0].as_slice();
                push(Recipe::TwoNonTreesWithTree, b1.clone(), union(&[b2, t]));
                push(Recipe::TwoNonTreesWithTree, union(&[b1, t]), b2.clone());
            }
        }
    }

    // A small non-tree component against the fewest trees of suitable order.
    let avail: Vec<usize> = types.iter().map(Vec::len).collect();
    for b1 in non_trees.iter().filter(|c| c.len() <= 6) {
        let lo = b1.len().min(4);
        for k in 1..=4 {
            for counts in count_vectors(&avail, k) {
                let order: usize =
                    counts.iter().zip(&types).map(|(&c, g)| c * g[0].len()).sum();
                if order < lo || order > 6 {
                    continue;
                }
                let parts: Vec<&[usize]> = counts
                    .iter()
                    .zip(&types)
                    .flat_map(|(&c, g)| g[..c].iter().map(Vec::as_slice))
                    .collect();
                push(Recipe::SmallTreesForest, b1.clone(), union(&parts));
            }
        }
    }
    out
}

/// First reduction found by the recipe search, if any.
///
/// Each candidate is kept only if its union `W` is a proper subset of the
/// vertices, `ex(B[W]) >= -1`, and the explicit constructions produce a
/// verified non-trivial certificate for the two classes.
pub fn find_reduction(b: &Graph) -> Result<Option<ReductionPlan>> {
    debug_assert!(tree_accounting_holds(b));
    let red = b.complement();
    let all = b.vertex_mask();
    for Candidate { recipe, x, y } in candidates(b) {
        let w = union(&[&x, &y]);
        let wm = mask_of(&w);
        if wm == all {
            continue;
        }
        let ex = excess_within(b, wm);
        if ex < -1 {
            continue;
        }
        match certify_split(&red, &x, &y) {
            Ok(cert) if cert.nontrivial => {
                return Ok(Some(ReductionPlan { w, x, y, recipe, excess_of_w: ex, cert }));
            }
            Ok(_) | Err(Error::NoConstruction(_)) | Err(Error::Precondition(_)) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(None)
}

/// Rebuilds the plan for classes recorded earlier, checking every condition
/// again.
pub fn plan_for_split(b: &Graph, recipe: Recipe, x: &[usize], y: &[usize]) -> Result<ReductionPlan> {
    let w = union(&[x, y]);
    let wm = mask_of(&w);
    if wm == b.vertex_mask() || w.len() != x.len() + y.len() {
        return Err(Error::Precondition("reduction must be a proper subset".into()));
    }
    if bits(wm).any(|v| b.neighbors(v) & !wm != 0) {
        return Err(Error::Precondition("reduction must be a union of blue components".into()));
    }
    let ex = excess_within(b, wm);
    if ex < -1 {
        return Err(Error::Precondition(format!("reduction has excess {ex} < -1")));
    }
    let cert = certify_split(&b.complement(), x, y)?;
    if !cert.nontrivial {
        return Err(Error::Precondition("reduction certificate must be non-trivial".into()));
    }
    Ok(ReductionPlan { w, x: x.to_vec(), y: y.to_vec(), recipe, excess_of_w: ex, cert })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::good_orient::verify_cert;

    /// Disjoint union of graphs given by (order, edges).
    pub(crate) fn disjoint(parts: &[(usize, Vec<(usize, usize)>)]) -> Graph {
        let n: usize = parts.iter().map(|p| p.0).sum();
        let mut g = Graph::empty(n).unwrap();
        let mut off = 0;
        for (k, edges) in parts {
            for &(u, v) in edges {
                g.add_edge(off + u, off + v).unwrap();
            }
            off += k;
        }
        g
    }

    fn clique_edges(k: usize, off: usize) -> Vec<(usize, usize)> {
        (0..k).flat_map(|u| (u + 1..k).map(move |v| (off + u, off + v))).collect()
    }

    fn dumbbell(k: usize, l: usize) -> (usize, Vec<(usize, usize)>) {
        let mut e = clique_edges(k, 0);
        e.extend(clique_edges(l, k));
        e.push((0, k));
        (k + l, e)
    }

    fn path(k: usize) -> (usize, Vec<(usize, usize)>) {
        (k, (1..k).map(|i| (i - 1, i)).collect())
    }

    #[test]
    fn excess_values() {
        assert_eq!(excess(&Graph::path(6).unwrap()), -1);
        assert_eq!(excess(&Graph::cycle(5).unwrap()), 0);
        assert_eq!(excess(&disjoint(&[dumbbell(3, 4)])), 3);
    }

    #[test]
    fn classification() {
        let g = Graph::cycle(5).unwrap();
        assert_eq!(classify_component(&g, &[0, 1, 2, 3, 4]).unwrap(), ComponentClass::FiveCycle);
        let bowtie = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        assert_eq!(
            classify_component(&bowtie, &[0, 1, 2, 3, 4]).unwrap(),
            ComponentClass::ProperShortDumbbell(3, 3)
        );
        let p4 = Graph::path(4).unwrap();
        assert_eq!(classify_component(&p4, &[0, 1, 2, 3]).unwrap(), ComponentClass::Path(4));
        let d43 = disjoint(&[dumbbell(4, 3)]);
        assert_eq!(
            classify_component(&d43, &(0..7).collect::<Vec<_>>()).unwrap(),
            ComponentClass::ProperDumbbell(3, 4)
        );
        let d13 = disjoint(&[dumbbell(1, 3)]);
        assert_eq!(classify_component(&d13, &[0, 1, 2, 3]).unwrap(), ComponentClass::ProperDumbbell(1, 3));
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(classify_component(&k4, &[0, 1, 2, 3]).unwrap(), ComponentClass::Complete(4));
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(classify_component(&star, &[0, 1, 2, 3]).unwrap(), ComponentClass::Other);
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(classify_component(&c4, &[0, 1, 2, 3]).unwrap(), ComponentClass::Other);
        assert_eq!(classify_component(&Graph::empty(1).unwrap(), &[0]).unwrap(), ComponentClass::Path(1));
        assert!(classify_component(&p4, &[0, 1]).is_err());
    }

    #[test]
    fn triples() {
        // x1=0 and x2=1 share the blue neighbors 2 and 3; 4 is isolated.
        let b = Graph::from_edges(5, &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let w = find_violating_triple(&b).unwrap();
        assert_eq!(w.x, [0, 1, 4]);
        assert_eq!(w.n2, vec![2, 3]);
        assert!(find_violating_triple(&Graph::empty(5).unwrap()).is_none());
        // The leaves of a star K_{1,3} see the centre three times.
        let b = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let w = find_violating_triple(&b).unwrap();
        assert_eq!((w.x, w.n3), ([1, 2, 3], vec![0]));
        // P_3 plus two isolated vertices: N2 never exceeds one vertex.
        let b = Graph::from_edges(5, &[(0, 1), (1, 2)]).unwrap();
        assert!(find_violating_triple(&b).is_none());
    }

    #[test]
    fn forests() {
        let b = Graph::empty(8).unwrap();
        let f = select_forest(&b, 5, 0).unwrap();
        assert_eq!(f.len(), 5);
        let b = disjoint(&[path(3), path(2), path(1), path(1), path(1)]);
        let f = select_forest(&b, 3, 2).unwrap();
        let n: usize = f.iter().map(Vec::len).sum();
        assert!((3..=5).contains(&n));
        let m = mask_of(&f.concat());
        assert!(excess_within(&b, m) >= -3);
        assert!(select_forest(&Graph::complete(3).unwrap(), 1, 5).is_err());
    }

    #[test]
    fn reduction_for_d33_with_path() {
        let b = disjoint(&[dumbbell(3, 3), path(3), path(1), path(1), path(1), path(1), path(1)]);
        let plan = find_reduction(&b).unwrap().expect("a reduction");
        assert!(plan.excess_of_w >= -1);
        assert!(plan.cert.nontrivial && verify_cert(&plan.cert).unwrap());
        let wm = mask_of(&plan.w);
        assert!(bits(wm).all(|v| b.neighbors(v) & !wm == 0));
        assert!(plan.w.len() < b.order());
    }

    #[test]
    fn lone_triangle_has_no_reduction() {
        assert!(find_reduction(&Graph::complete(3).unwrap()).unwrap().is_none());
    }

    #[test]
    fn accounting() {
        let b = disjoint(&[dumbbell(3, 4), path(1), path(1), path(1), path(1), path(1), path(1), path(1), path(1)]);
        assert_eq!(excess(&b), -5);
        assert!(tree_accounting_holds(&b));
        assert_eq!(tree_components(&b).len(), 8);
    }
}
