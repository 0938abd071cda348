//! Good orientations of red vertex sets and the rules that glue them into
//! diameter-two orientations.
//!
//! A good orientation of `R[W]` comes with a split of `W` into two classes
//! such that any two vertices of the same class are joined by a directed path
//! of length at most two. It is non-trivial when every vertex also has both
//! an in-neighbor and an out-neighbor in the opposite class.
//!
//! Certificates are stored on local labels `0..|W|`; `vertices[i]` is the
//! label of local vertex `i` in the host graph.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bit, bits, mask_of, Graph, Orientation};

/// Split of a certified vertex set into two classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Partition2 {
    pub u1: Vec<usize>,
    pub v1: Vec<usize>,
}

/// Which explicit construction produced a certificate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Construction {
    /// A single red edge; good but never non-trivial.
    SingleEdge,
    /// Spanning `K_{a,b}` oriented through the window injection.
    CompleteBipartite { a: usize, b: usize },
    /// Spanning `K_{a,b}` whose larger side is blue-embedded in `K_a ⊞ K_{b-a}`.
    MatchJoin { a: usize, b: usize },
}

#[derive(Clone, Debug)]
pub struct GoodOrientationCert {
    pub vertices: Vec<usize>,
    pub world: Graph,
    pub orientation: Orientation,
    pub classes: Partition2,
    pub nontrivial: bool,
    pub construction: Construction,
}

impl GoodOrientationCert {
    pub fn order(&self) -> usize {
        self.world.order()
    }

    /// Host labels of the first class.
    pub fn host_u1(&self) -> Vec<usize> {
        self.classes.u1.iter().map(|&i| self.vertices[i]).collect()
    }

    /// Host labels of the second class.
    pub fn host_v1(&self) -> Vec<usize> {
        self.classes.v1.iter().map(|&i| self.vertices[i]).collect()
    }

    /// Arcs in host labels.
    pub fn host_arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.orientation.dir().arcs().map(|(u, v)| (self.vertices[u], self.vertices[v]))
    }

    /// Same certificate over a red world with extra edges, which are oriented
    /// by the tie-break rule. Extra arcs never lengthen a path.
    pub fn extended(self, world: Graph) -> Result<Self> {
        if world.order() != self.order() {
            return Err(Error::OrderMismatch { expected: self.order(), found: world.order() });
        }
        if self.world.edges().any(|(u, v)| !world.has_edge(u, v)) {
            return Err(Error::Precondition("extended world must contain the old one".into()));
        }
        let arcs: Vec<_> = self.orientation.dir().arcs().collect();
        let orientation = Orientation::with_tiebreak(world.clone(), arcs)?;
        Ok(GoodOrientationCert { world, orientation, ..self })
    }
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Checks both defining conditions of a (non-trivial) good orientation.
///
/// Returns `Ok(false)` when a distance or neighbor condition fails and an
/// error when the certificate is malformed.
pub fn verify_cert(cert: &GoodOrientationCert) -> Result<bool> {
    let n = cert.world.order();
    if cert.orientation.base() != &cert.world {
        return Err(Error::Precondition("orientation is not of the certified world".into()));
    }
    if cert.vertices.len() != n {
        return Err(Error::OrderMismatch { expected: n, found: cert.vertices.len() });
    }
    let u = mask_of(&cert.classes.u1);
    let v = mask_of(&cert.classes.v1);
    let in_range = cert.classes.u1.iter().chain(&cert.classes.v1).all(|&x| x < n);
    if !in_range
        || u & v != 0
        || u | v != cert.world.vertex_mask()
        || cert.classes.u1.len() + cert.classes.v1.len() != n
    {
        return Err(Error::Precondition("classes do not partition the certified set".into()));
    }
    let dir = cert.orientation.dir();
    for class in [u, v] {
        for x in bits(class) {
            let dist = dir.distances_from(x);
            if bits(class).any(|y| !dist[y].at_most(2)) {
                return Ok(false);
            }
        }
    }
    if cert.nontrivial {
        for (own, other) in [(u, v), (v, u)] {
            for x in bits(own) {
                if dir.out_neighbors(x) & other == 0 || dir.in_neighbors(x) & other == 0 {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Window injection `f: [b] -> C([a], c+1)` with `c = floor(a/2) - 1`.
/// The first `a` values are cyclic windows; later ones are the
/// lexicographically smallest unused subsets.
fn window_injection(a: usize, b: usize) -> Vec<u64> {
    let k = a / 2;
    let mut sets: Vec<u64> = (0..a.min(b))
        .map(|i| (0..k).fold(0u64, |m, t| m | bit((i + t) % a)))
        .collect();
    if b > a {
        let mut combo: Vec<usize> = (0..k).collect();
        while sets.len() < b {
            let m = mask_of(&combo);
            if !sets.contains(&m) {
                sets.push(m);
            }
            // next k-combination of 0..a in lexicographic order
            let mut i = k;
            while i > 0 && combo[i - 1] == a - k + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            combo[i - 1] += 1;
            for j in i..k {
                combo[j] = combo[j - 1] + 1;
            }
        }
    }
    sets
}

/// Arcs of the window construction on `x = 0..a`, `y = a..a+b`.
fn complete_bipartite_arcs(a: usize, b: usize) -> Vec<(usize, usize)> {
    let f = window_injection(a, b);
    debug_assert_eq!(f.len(), b);
    let mut arcs = Vec::with_capacity(a * b);
    for (i, &fi) in f.iter().enumerate() {
        let y = a + i;
        for j in 0..a {
            if fi & bit(j) != 0 {
                arcs.push((y, j));
            } else {
                arcs.push((j, y));
            }
        }
    }
    arcs
}

fn complete_bipartite_domain(a: usize, b: usize) -> bool {
    (a, b) == (1, 1) || (2 <= a && a <= b && b <= binomial(a, a / 2))
}

fn finish(
    vertices: Vec<usize>,
    world: Graph,
    arcs: Vec<(usize, usize)>,
    classes: Partition2,
    nontrivial: bool,
    construction: Construction,
) -> Result<GoodOrientationCert> {
    let orientation = Orientation::with_tiebreak(world.clone(), arcs)?;
    let cert = GoodOrientationCert { vertices, world, orientation, classes, nontrivial, construction };
    if verify_cert(&cert)? {
        Ok(cert)
    } else {
        Err(Error::Verification(format!("{construction:?} certificate failed its check")))
    }
}

/// Good orientation of `K_{a,b}` with classes `x = 0..a` and `y = a..a+b`.
pub fn orient_complete_bipartite(a: usize, b: usize) -> Result<GoodOrientationCert> {
    if !complete_bipartite_domain(a, b) {
        return Err(Error::Precondition(format!(
            "need (a,b) = (1,1) or 2 <= a <= b <= C(a, a/2), got ({a},{b})"
        )));
    }
    let mut world = Graph::empty(a + b)?;
    for x in 0..a {
        for y in a..a + b {
            world.add_edge(x, y)?;
        }
    }
    let (arcs, nontrivial, construction) = if (a, b) == (1, 1) {
        (vec![(0, 1)], false, Construction::SingleEdge)
    } else {
        (complete_bipartite_arcs(a, b), true, Construction::CompleteBipartite { a, b })
    };
    let classes = Partition2 { u1: (0..a).collect(), v1: (a..a + b).collect() };
    finish((0..a + b).collect(), world, arcs, classes, nontrivial, construction)
}

/// Places the vertices of `blue` (order `b`) into the slots of
/// `K_a ⊞ K_{b-a}`: slots `0..a` form the large clique, slot `a + i` is
/// matched to slot `i`. Returns `slot[v]` for the lexicographically first
/// choice of second-clique vertices that works.
pub fn matchjoin_embedding(blue: &Graph, a: usize) -> Option<Vec<usize>> {
    let b = blue.order();
    if a > b || b - a > a {
        return None;
    }
    let k = b - a;
    let all = blue.vertex_mask();
    let mut combo: Vec<usize> = (0..k).collect();
    loop {
        let second = mask_of(&combo);
        let first = all & !second;
        let matching_ok = (0..b).all(|v| {
            let other = if second & bit(v) != 0 { first } else { second };
            (blue.neighbors(v) & other).count_ones() <= 1
        });
        if matching_ok {
            let mut slot = vec![usize::MAX; b];
            let mut free_first: Vec<usize> =
                bits(first).filter(|&v| blue.neighbors(v) & second == 0).collect();
            free_first.reverse();
            for (i, &s) in combo.iter().enumerate() {
                slot[s] = a + i;
                let partner = match bits(blue.neighbors(s) & first).next() {
                    Some(p) => p,
                    None => free_first.pop().expect("enough unmatched first-clique vertices"),
                };
                slot[partner] = i;
            }
            let mut next = k;
            for v in bits(first) {
                if slot[v] == usize::MAX {
                    slot[v] = next;
                    next += 1;
                }
            }
            return Some(slot);
        }
        if k == 0 {
            return None;
        }
        let mut i = k;
        while i > 0 && combo[i - 1] == b - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return None;
        }
        combo[i - 1] += 1;
        for j in i..k {
            combo[j] = combo[j - 1] + 1;
        }
    }
}

/// Arcs of the match-join construction with `x = 0..a` and the `y` side at
/// local labels `a..a+b`, where `slot[v]` places `y` vertex `a + v`.
fn matchjoin_arcs(a: usize, b: usize, slot: &[usize], red: &Graph) -> Vec<(usize, usize)> {
    let mut by_slot = vec![0; b];
    for (v, &s) in slot.iter().enumerate() {
        by_slot[s] = a + v;
    }
    let y = |s: usize| by_slot[s];
    let k = b - a;
    let mut arcs = Vec::new();
    for i in 0..a {
        arcs.push((i, y(i)));
        for j in (0..a).filter(|&j| j != i) {
            arcs.push((y(j), i));
        }
    }
    for i in 0..k {
        arcs.push((y(a + i), i));
    }
    for i in 0..a {
        for j in (0..k).filter(|&j| j != i) {
            arcs.push((i, y(a + j)));
        }
    }
    for i in 0..k {
        for j in (0..a).filter(|&j| j != i) {
            if red.has_edge(y(a + i), y(j)) {
                arcs.push((y(a + i), y(j)));
            }
        }
    }
    arcs
}

/// Non-trivial good orientation of `x ∪ y` (`|x| = a`, `|y| = b`) when the
/// blue graph on `y` embeds into `K_a ⊞ K_{b-a}`. The red world is the
/// complete bipartite graph plus the red edges inside `y`.
pub fn orient_bipartite_blue_matchjoin(
    a: usize,
    b: usize,
    blue_y: &Graph,
) -> Result<GoodOrientationCert> {
    if !(3 <= a && a <= b && b <= 2 * a) {
        return Err(Error::Precondition(format!("need 3 <= a <= b <= 2a, got ({a},{b})")));
    }
    if blue_y.order() != b {
        return Err(Error::OrderMismatch { expected: b, found: blue_y.order() });
    }
    let slot = matchjoin_embedding(blue_y, a).ok_or_else(|| {
        Error::Precondition(format!("blue graph on Y does not embed in K_{a} ⊞ K_{}", b - a))
    })?;
    let mut world = Graph::empty(a + b)?;
    for x in 0..a {
        for y in a..a + b {
            world.add_edge(x, y)?;
        }
    }
    for (u, v) in blue_y.complement().edges() {
        world.add_edge(a + u, a + v)?;
    }
    let arcs = matchjoin_arcs(a, b, &slot, &world);
    let classes = Partition2 { u1: (0..a).collect(), v1: (a..a + b).collect() };
    finish((0..a + b).collect(), world, arcs, classes, true, Construction::MatchJoin { a, b })
}

/// Good orientation of `R[x ∪ y]` with classes `x` and `y`, using whichever
/// explicit construction fits. Every `x`–`y` pair must be red.
///
/// Fails with [`Error::NoConstruction`] when none applies.
pub fn certify_split(red: &Graph, x: &[usize], y: &[usize]) -> Result<GoodOrientationCert> {
    let (xm, ym) = (mask_of(x), mask_of(y));
    if x.is_empty() || y.is_empty() || xm & ym != 0 {
        return Err(Error::Precondition("classes must be disjoint and non-empty".into()));
    }
    if x.iter().any(|&u| red.neighbors(u) & ym != ym) {
        return Err(Error::NoConstruction("a blue edge joins the two classes".into()));
    }
    let swap = y.len() < x.len();
    let (small, large) = if swap { (y, x) } else { (x, y) };
    let (a, b) = (small.len(), large.len());
    let vertices: Vec<usize> = small.iter().chain(large).copied().collect();
    let world = red.induced(&vertices);
    let (arcs, nontrivial, construction) = if complete_bipartite_domain(a, b) {
        if (a, b) == (1, 1) {
            (vec![(0, 1)], false, Construction::SingleEdge)
        } else {
            (complete_bipartite_arcs(a, b), true, Construction::CompleteBipartite { a, b })
        }
    } else if 3 <= a && a <= b && b <= 2 * a {
        let blue_large = red.induced(large).complement();
        let slot = matchjoin_embedding(&blue_large, a).ok_or_else(|| {
            Error::NoConstruction(format!("larger class does not embed in K_{a} ⊞ K_{}", b - a))
        })?;
        (matchjoin_arcs(a, b, &slot, &world), true, Construction::MatchJoin { a, b })
    } else {
        return Err(Error::NoConstruction(format!("class sizes ({a},{b}) fit no construction")));
    };
    let (first, second): (Vec<usize>, Vec<usize>) = ((0..a).collect(), (a..a + b).collect());
    let classes = if swap {
        Partition2 { u1: second, v1: first }
    } else {
        Partition2 { u1: first, v1: second }
    };
    finish(vertices, world, arcs, classes, nontrivial, construction)
}

/// Non-trivial good orientation for a blue disjoint union of paths split
/// into the groups `x` and `y` (path orders). The group sizes are counted
/// in vertices and must satisfy `3 <= a <= b <= 2a`.
///
/// Local labels lay the `x` paths out first, then the `y` paths, each path
/// on consecutive labels.
pub fn orient_path_components(x: &[usize], y: &[usize]) -> Result<GoodOrientationCert> {
    if x.iter().chain(y).any(|&p| p == 0) {
        return Err(Error::Precondition("paths must have at least one vertex".into()));
    }
    let a: usize = x.iter().sum();
    let b: usize = y.iter().sum();
    if !(3 <= a && a <= b && b <= 2 * a) {
        return Err(Error::Precondition(format!("need 3 <= a <= b <= 2a, got ({a},{b})")));
    }
    let mut blue = Graph::empty(a + b)?;
    let mut start = 0;
    for &len in x.iter().chain(y) {
        for v in start + 1..start + len {
            blue.add_edge(v - 1, v)?;
        }
        start += len;
    }
    // Y laid out end to end is a subgraph of P_b, hence of K_a ⊞ K_{b-a}.
    let y_vertices: Vec<usize> = (a..a + b).collect();
    let blue_y = blue.induced(&y_vertices);
    let cert = orient_bipartite_blue_matchjoin(a, b, &blue_y)?;
    cert.extended(blue.complement())
}

/// How the second part `Z` is handled when gluing.
#[derive(Clone, Debug)]
pub enum ZCase {
    /// `Z` carries its own non-trivial good orientation.
    Nontrivial(GoodOrientationCert),
    /// `|Z| = 3` and all of `Z` is blue-isolated.
    ThreeIsolated,
    /// `|Z| = 2`; the pair may or may not be blue.
    Two,
}

/// Glues a non-trivial certificate on `W` with the rest `Z` of the vertex
/// set of `red` into a diameter-two orientation of `red`. No blue edge may
/// join `W` and `Z`.
pub fn combine(
    red: &Graph,
    cert_w: &GoodOrientationCert,
    z: &[usize],
    zcase: &ZCase,
) -> Result<Orientation> {
    let n = red.order();
    let w_mask = mask_of(&cert_w.vertices);
    let z_mask = mask_of(z);
    if w_mask & z_mask != 0
        || w_mask | z_mask != red.vertex_mask()
        || cert_w.vertices.len() + z.len() != n
    {
        return Err(Error::Precondition("W and Z must partition the vertex set".into()));
    }
    if !cert_w.nontrivial || !verify_cert(cert_w)? {
        return Err(Error::Precondition("certificate on W must be non-trivial and valid".into()));
    }
    if red.induced(&cert_w.vertices) != cert_w.world {
        return Err(Error::Precondition("certificate world differs from R[W]".into()));
    }
    if bits(w_mask).any(|w| red.neighbors(w) & z_mask != z_mask) {
        return Err(Error::Precondition("a blue edge joins W and Z".into()));
    }
    let u1 = mask_of(&cert_w.host_u1());
    let v1 = mask_of(&cert_w.host_v1());
    let mut arcs: Vec<(usize, usize)> = cert_w.host_arcs().collect();
    let cross = |from: u64, to: u64, arcs: &mut Vec<(usize, usize)>| {
        for s in bits(from) {
            for t in bits(to) {
                arcs.push((s, t));
            }
        }
    };
    match zcase {
        ZCase::Nontrivial(cert_z) => {
            let mut zs = cert_z.vertices.clone();
            zs.sort_unstable();
            let mut want = z.to_vec();
            want.sort_unstable();
            if zs != want || !cert_z.nontrivial || !verify_cert(cert_z)? {
                return Err(Error::Precondition("certificate on Z must be non-trivial on Z".into()));
            }
            if red.induced(&cert_z.vertices) != cert_z.world {
                return Err(Error::Precondition("certificate world differs from R[Z]".into()));
            }
            arcs.extend(cert_z.host_arcs());
            let u2 = mask_of(&cert_z.host_u1());
            let v2 = mask_of(&cert_z.host_v1());
            cross(u1, u2, &mut arcs);
            cross(u2, v1, &mut arcs);
            cross(v1, v2, &mut arcs);
            cross(v2, u1, &mut arcs);
        }
        ZCase::ThreeIsolated | ZCase::Two => {
            let mut ys = z.to_vec();
            ys.sort_unstable();
            match (zcase, ys.len()) {
                (ZCase::ThreeIsolated, 3) => {
                    if ys.iter().any(|&y| red.degree(y) != n - 1) {
                        return Err(Error::Precondition("vertices of Z must be blue-isolated".into()));
                    }
                    arcs.extend([(ys[0], ys[1]), (ys[1], ys[2]), (ys[2], ys[0])]);
                }
                (ZCase::Two, 2) => {}
                _ => return Err(Error::Precondition("Z has the wrong size for its case".into())),
            }
            cross(u1, bit(ys[0]), &mut arcs);
            cross(bit(ys[0]), v1, &mut arcs);
            for &y in &ys[1..] {
                cross(bit(y), u1, &mut arcs);
                cross(v1, bit(y), &mut arcs);
            }
        }
    }
    let o = Orientation::with_tiebreak(red.clone(), arcs)?;
    if !o.dir().has_diameter_at_most_two() {
        return Err(Error::Verification("glued orientation has diameter above two".into()));
    }
    Ok(o)
}

/// Orientation of the red complement of `blue` from a quadruple
/// `(U1, V1, U2, V2)` of vertex sets partitioning `V`, each a union of whole
/// blue components. `(U2, V2)` must admit a non-trivial certificate; `U1 ∪ V1`
/// is handled by the matching gluing case.
pub fn quadruple_orient(
    blue: &Graph,
    u1: &[usize],
    v1: &[usize],
    u2: &[usize],
    v2: &[usize],
) -> Result<Orientation> {
    let red = blue.complement();
    let cert_w = certify_split(&red, u2, v2)?;
    if !cert_w.nontrivial {
        return Err(Error::NoConstruction("(U2, V2) has only a trivial certificate".into()));
    }
    let z: Vec<usize> = u1.iter().chain(v1).copied().collect();
    let z_mask = mask_of(&z);
    let zcase = if z.len() == 2 {
        ZCase::Two
    } else if z.len() == 3 && bits(z_mask).all(|v| blue.degree(v) == 0) {
        ZCase::ThreeIsolated
    } else {
        let cert_z = certify_split(&red, u1, v1)?;
        if !cert_z.nontrivial {
            return Err(Error::NoConstruction("(U1, V1) has only a trivial certificate".into()));
        }
        ZCase::Nontrivial(cert_z)
    };
    combine(&red, &cert_w, &z, &zcase)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Distance;

    #[test]
    fn single_edge_is_good_but_trivial() {
        let c = orient_complete_bipartite(1, 1).unwrap();
        assert!(!c.nontrivial);
        assert!(verify_cert(&c).unwrap());
        let mut strict = c.clone();
        strict.nontrivial = true;
        assert!(!verify_cert(&strict).unwrap());
    }

    #[test]
    fn k22_is_a_directed_four_cycle() {
        // x1, x2 = 0, 1 and y1, y2 = 2, 3: y1->x1, x1->y2, y2->x2, x2->y1.
        let c = orient_complete_bipartite(2, 2).unwrap();
        let o = &c.orientation;
        assert!(o.points(2, 0) && o.points(0, 3) && o.points(3, 1) && o.points(1, 2));
        assert_eq!(o.diameter(), Distance::Finite(3));
        assert!(c.nontrivial && verify_cert(&c).unwrap());
    }

    #[test]
    fn k33_window_arcs() {
        // c = 0: y_i -> x_i and x_j -> y_i for j != i.
        let c = orient_complete_bipartite(3, 3).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(c.orientation.points(3 + i, j), i == j);
            }
        }
    }

    #[test]
    fn all_arcs_one_way_is_not_good() {
        let mut world = Graph::empty(6).unwrap();
        let mut arcs = vec![];
        for x in 0..3 {
            for y in 3..6 {
                world.add_edge(x, y).unwrap();
                arcs.push((x, y));
            }
        }
        let orientation = Orientation::with_tiebreak(world.clone(), arcs).unwrap();
        let cert = GoodOrientationCert {
            vertices: (0..6).collect(),
            world,
            orientation,
            classes: Partition2 { u1: vec![0, 1, 2], v1: vec![3, 4, 5] },
            nontrivial: false,
            construction: Construction::CompleteBipartite { a: 3, b: 3 },
        };
        assert!(!verify_cert(&cert).unwrap());
    }

    #[test]
    fn verify_rejects_bad_partition() {
        let mut c = orient_complete_bipartite(2, 2).unwrap();
        c.classes.v1.pop();
        assert!(verify_cert(&c).is_err());
    }

    #[test]
    fn window_degrees() {
        for a in 2..=6 {
            for b in a..=binomial(a, a / 2).min(20) {
                let c = orient_complete_bipartite(a, b).unwrap();
                for y in a..a + b {
                    let ins = (c.orientation.dir().in_neighbors(y) & ((1 << a) - 1)).count_ones();
                    let outs = (c.orientation.dir().out_neighbors(y) & ((1 << a) - 1)).count_ones();
                    assert_eq!(outs as usize, a / 2, "a={a} b={b}");
                    assert_eq!(ins as usize, a - a / 2, "a={a} b={b}");
                }
            }
        }
    }

    #[test]
    fn complete_bipartite_domain_errors() {
        assert!(orient_complete_bipartite(2, 3).is_err());
        assert!(orient_complete_bipartite(3, 4).is_err());
        assert!(orient_complete_bipartite(1, 2).is_err());
        assert!(orient_complete_bipartite(4, 7).is_err());
        assert!(orient_complete_bipartite(6, 20).is_ok());
    }

    fn k_boxplus(a: usize, k: usize) -> Graph {
        let mut g = Graph::empty(a + k).unwrap();
        for u in 0..a {
            for v in u + 1..a {
                g.add_edge(u, v).unwrap();
            }
        }
        for u in a..a + k {
            for v in u + 1..a + k {
                g.add_edge(u, v).unwrap();
            }
            g.add_edge(u, u - a).unwrap();
        }
        g
    }

    #[test]
    fn matchjoin_examples() {
        let c = orient_bipartite_blue_matchjoin(3, 5, &k_boxplus(3, 2)).unwrap();
        assert!(c.nontrivial && verify_cert(&c).unwrap());
        let c = orient_bipartite_blue_matchjoin(3, 3, &Graph::complete(3).unwrap()).unwrap();
        assert!(verify_cert(&c).unwrap());
        let c = orient_bipartite_blue_matchjoin(3, 5, &Graph::cycle(5).unwrap()).unwrap();
        assert!(verify_cert(&c).unwrap());
    }

    #[test]
    fn matchjoin_rejects_non_embeddable() {
        // K_{1,3} fits K_3 ⊞ K_1 with one leaf in the small clique.
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(matchjoin_embedding(&star, 3).is_some());
        // K_4 with a = 2 cannot be split into K_2 ⊞ K_2.
        assert!(matchjoin_embedding(&Graph::complete(4).unwrap(), 2).is_none());
        // 2K_3 does not fit K_3 ⊞ K_3 when extra cross edges exist.
        let two_tri_joined = Graph::from_edges(
            6,
            &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (0, 4)],
        )
        .unwrap();
        assert!(matchjoin_embedding(&two_tri_joined, 3).is_none());
        assert!(orient_bipartite_blue_matchjoin(3, 6, &Graph::complete(6).unwrap()).is_err());
    }

    #[test]
    fn path_components() {
        let c = orient_path_components(&[1, 1, 1], &[1, 1, 1]).unwrap();
        assert_eq!(c.order(), 6);
        assert!(c.nontrivial && verify_cert(&c).unwrap());
        let c = orient_path_components(&[1, 1, 2], &[2, 2, 1, 1]).unwrap();
        assert!(verify_cert(&c).unwrap());
        assert!(orient_path_components(&[1, 1], &[1, 1, 1]).is_err());
    }

    #[test]
    fn combine_with_two_vertices() {
        // W = K_{3,3} certificate on 0..6, Z = {6, 7} blue-adjacent.
        let mut blue = Graph::empty(8).unwrap();
        for (u, v) in [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (6, 7)] {
            blue.add_edge(u, v).unwrap();
        }
        let red = blue.complement();
        let cert = certify_split(&red, &[0, 1, 2], &[3, 4, 5]).unwrap();
        let o = combine(&red, &cert, &[6, 7], &ZCase::Two).unwrap();
        assert!(o.diameter().at_most(2));
    }

    #[test]
    fn combine_two_nontrivial_halves() {
        // Blue 4K_2: the halves {0,1,2,3} and {4,5,6,7} each have classes
        // made of one blue edge apiece.
        let blue = Graph::from_edges(8, &[(0, 1), (2, 3), (4, 5), (6, 7)]).unwrap();
        let red = blue.complement();
        let cw = certify_split(&red, &[0, 1], &[2, 3]).unwrap();
        let cz = certify_split(&red, &[4, 5], &[6, 7]).unwrap();
        let o = combine(&red, &cw, &[4, 5, 6, 7], &ZCase::Nontrivial(cz)).unwrap();
        assert!(o.diameter().at_most(2));
    }

    #[test]
    fn combine_rejects_non_isolated_triple() {
        let blue = Graph::from_edges(9, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (6, 7)])
            .unwrap();
        let red = blue.complement();
        let cert = certify_split(&red, &[0, 1, 2], &[3, 4, 5]).unwrap();
        assert!(combine(&red, &cert, &[6, 7, 8], &ZCase::ThreeIsolated).is_err());
        assert!(combine(&red, &cert, &[6, 7, 8], &ZCase::Two).is_err());
    }

    #[test]
    fn quadruples_from_the_catalog() {
        // K_4 ∪ 7K_1 with quadruple (K_1, K_1, K_4, 5K_1).
        let blue = Graph::from_edges(11, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let o = quadruple_orient(&blue, &[4], &[5], &[0, 1, 2, 3], &[6, 7, 8, 9, 10]).unwrap();
        assert!(o.diameter().at_most(2));
        // 2P_3 ∪ 3P_1 with (P_1, P_1, P_3, P_3 ∪ P_1).
        let blue = Graph::from_edges(9, &[(0, 1), (1, 2), (3, 4), (4, 5)]).unwrap();
        let o = quadruple_orient(&blue, &[7], &[8], &[0, 1, 2], &[3, 4, 5, 6]).unwrap();
        assert!(o.diameter().at_most(2));
    }
}
