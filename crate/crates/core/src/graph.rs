//! Simple graphs, digraphs and orientations on at most [`MAX_ORDER`] vertices.
//!
//! Vertices are the dense labels `0..n`. Adjacency is stored as one `u64`
//! bit row per vertex, so neighborhood intersections and breadth-first
//! frontiers are single word operations.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest supported vertex count.
pub const MAX_ORDER: usize = 62;

/// Iterator over the set bits of a word, lowest first.
#[derive(Clone, Copy, Debug)]
pub struct Bits(u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Bits {}

#[inline]
pub fn bits(mask: u64) -> Bits {
    Bits(mask)
}

#[inline]
pub fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Bit mask with the vertices of `set` switched on.
pub fn mask_of(set: &[usize]) -> u64 {
    set.iter().fold(0, |m, &v| m | bit(v))
}

#[inline]
fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_ORDER {
        Err(Error::TooManyVertices(n))
    } else {
        Ok(())
    }
}

/// A directed distance; `Infinite` compares above every finite value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Distance {
    Finite(u32),
    Infinite,
}

impl Distance {
    pub fn is_finite(self) -> bool {
        matches!(self, Distance::Finite(_))
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }

    /// True when the distance is finite and at most `d`.
    pub fn at_most(self, d: u32) -> bool {
        matches!(self, Distance::Finite(x) if x <= d)
    }
}

impl PartialOrd for Distance {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Distance {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Distance::Finite(a), Distance::Finite(b)) => a.cmp(b),
            (Distance::Finite(_), Distance::Infinite) => Ordering::Less,
            (Distance::Infinite, Distance::Finite(_)) => Ordering::Greater,
            (Distance::Infinite, Distance::Infinite) => Ordering::Equal,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => f.write_str("infinite"),
        }
    }
}

/// Simple undirected graph.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn complete(n: usize) -> Result<Self> {
        check_order(n)?;
        let all = full_mask(n);
        Ok(Graph { n, adj: (0..n).map(|v| all & !bit(v)).collect() })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Path on the vertices in the given order.
    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        if n >= 3 {
            edges.push((n - 1, 0));
        }
        Graph::from_edges(n, &edges)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn vertex_mask(&self) -> u64 {
        full_mask(self.n)
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, order: self.n })
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !bit(v);
        self.adj[v] &= !bit(u);
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & bit(v) != 0
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| bits(self.adj[u] & !full_mask(u + 1)).map(move |v| (u, v)))
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertex_mask();
        Graph { n: self.n, adj: (0..self.n).map(|v| !self.adj[v] & all & !bit(v)).collect() }
    }

    /// Subgraph induced by `vertices`, relabeled so that `vertices[i]` becomes `i`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph { n: vertices.len(), adj: vec![0; vertices.len()] };
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate() {
                if self.has_edge(u, v) {
                    g.adj[i] |= bit(j);
                }
            }
        }
        g
    }

    /// Number of edges with both ends in `mask`.
    pub fn size_within(&self, mask: u64) -> usize {
        bits(mask).map(|v| (self.adj[v] & mask).count_ones() as usize).sum::<usize>() / 2
    }

    /// Graph with vertex `v` renamed to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let mut g = Graph { n: self.n, adj: vec![0; self.n] };
        for (u, v) in self.edges() {
            g.adj[perm[u]] |= bit(perm[v]);
            g.adj[perm[v]] |= bit(perm[u]);
        }
        g
    }

    /// Vertices reachable from `v` (including `v`).
    pub fn reach(&self, v: usize) -> u64 {
        let mut seen = bit(v);
        let mut frontier = seen;
        while frontier != 0 {
            let next = bits(frontier).fold(0, |acc, u| acc | self.adj[u]) & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Connected components, each sorted ascending, listed by (size, smallest label).
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut left = self.vertex_mask();
        let mut comps = Vec::new();
        while left != 0 {
            let v = left.trailing_zeros() as usize;
            let c = self.reach(v);
            left &= !c;
            comps.push(bits(c).collect::<Vec<_>>());
        }
        comps.sort_by_key(|c| (c.len(), c[0]));
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.reach(0) == self.vertex_mask()
    }

    /// Edges whose removal disconnects their component.
    pub fn bridges(&self) -> Vec<(usize, usize)> {
        let mut g = self.clone();
        let mut out = Vec::new();
        for (u, v) in self.edges() {
            g.remove_edge(u, v);
            if g.reach(u) & bit(v) == 0 {
                out.push((u, v));
            }
            g.adj[u] |= bit(v);
            g.adj[v] |= bit(u);
        }
        out
    }

    pub fn is_bridgeless(&self) -> bool {
        self.bridges().is_empty()
    }

    /// The graph seen as a digraph with both arc directions on every edge.
    pub fn symmetric_digraph(&self) -> Digraph {
        Digraph { n: self.n, out: self.adj.clone() }
    }

    /// Undirected diameter; infinite when disconnected.
    pub fn diameter(&self) -> Distance {
        self.symmetric_digraph().diameter()
    }

    pub fn is_clique(&self, mask: u64) -> bool {
        bits(mask).all(|v| self.adj[v] & mask == mask & !bit(v))
    }

    /// Adjacency row of `v` as a mask.
    pub fn row(&self, v: usize) -> u64 {
        self.adj[v]
    }
}

/// Simple digraph without self arcs. Opposite arcs may both be present.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    out: Vec<u64>,
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Digraph(n={}, arcs={:?})", self.n, self.arcs().collect::<Vec<_>>())
    }
}

impl Digraph {
    pub fn empty(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(Digraph { n, out: vec![0; n] })
    }

    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut d = Digraph::empty(n)?;
        for &(u, v) in arcs {
            d.add_arc(u, v)?;
        }
        Ok(d)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(|r| r.count_ones() as usize).sum()
    }

    pub fn add_arc(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange { vertex: w, order: self.n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.out[u] |= bit(v);
        Ok(())
    }

    #[inline]
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out[u] & bit(v) != 0
    }

    #[inline]
    pub fn out_neighbors(&self, v: usize) -> u64 {
        self.out[v]
    }

    pub fn in_neighbors(&self, v: usize) -> u64 {
        (0..self.n).filter(|&u| self.has_arc(u, v)).fold(0, |m, u| m | bit(u))
    }

    /// Arcs in row-major order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| bits(self.out[u]).map(move |v| (u, v)))
    }

    /// Underlying undirected graph.
    pub fn underlying(&self) -> Graph {
        let mut g = Graph { n: self.n, adj: self.out.clone() };
        for (u, v) in self.arcs() {
            g.adj[v] |= bit(u);
        }
        g
    }

    /// Breadth-first distances from `source`.
    pub fn distances_from(&self, source: usize) -> Vec<Distance> {
        let mut dist = vec![Distance::Infinite; self.n];
        dist[source] = Distance::Finite(0);
        let mut seen = bit(source);
        let mut frontier = seen;
        let mut d = 0;
        while frontier != 0 {
            d += 1;
            let next = bits(frontier).fold(0, |acc, u| acc | self.out[u]) & !seen;
            for v in bits(next) {
                dist[v] = Distance::Finite(d);
            }
            seen |= next;
            frontier = next;
        }
        dist
    }

    pub fn distance(&self, u: usize, v: usize) -> Result<Distance> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange { vertex: w, order: self.n });
            }
        }
        Ok(self.distances_from(u)[v])
    }

    /// Eccentricity of `v` as a source.
    pub fn out_eccentricity(&self, v: usize) -> Distance {
        self.distances_from(v).into_iter().max().unwrap_or(Distance::Finite(0))
    }

    pub fn diameter(&self) -> Distance {
        (0..self.n).map(|v| self.out_eccentricity(v)).max().unwrap_or(Distance::Finite(0))
    }

    /// Fast check for `diameter() <= 2`.
    pub fn has_diameter_at_most_two(&self) -> bool {
        let all = full_mask(self.n);
        (0..self.n).all(|u| {
            let two = bits(self.out[u]).fold(self.out[u] | bit(u), |acc, w| acc | self.out[w]);
            two & all == all
        })
    }
}

/// An orientation of `base`: every edge carries exactly one direction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Orientation {
    base: Graph,
    dir: Digraph,
}

impl Orientation {
    /// Validates that `dir` orients each edge of `base` exactly once.
    pub fn new(base: Graph, dir: Digraph) -> Result<Self> {
        if base.n != dir.n {
            return Err(Error::OrderMismatch { expected: base.n, found: dir.n });
        }
        for u in 0..base.n {
            let stray = dir.out[u] & !base.adj[u];
            if stray != 0 {
                let v = stray.trailing_zeros() as usize;
                return Err(Error::NotAnOrientation(format!("arc {u}->{v} is not an edge")));
            }
        }
        for (u, v) in base.edges() {
            match (dir.has_arc(u, v), dir.has_arc(v, u)) {
                (true, false) | (false, true) => {}
                (true, true) => {
                    return Err(Error::NotAnOrientation(format!("edge {u}{v} oriented both ways")))
                }
                (false, false) => {
                    return Err(Error::NotAnOrientation(format!("edge {u}{v} left unoriented")))
                }
            }
        }
        Ok(Orientation { base, dir })
    }

    /// Orients `base` using `arcs` where given and from lower to higher label
    /// elsewhere. Arcs must be edges of `base`; a later arc contradicting an
    /// earlier one is an error.
    pub fn with_tiebreak<I>(base: Graph, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut dir = Digraph::empty(base.n)?;
        for (u, v) in arcs {
            base.check_vertex(u)?;
            base.check_vertex(v)?;
            if !base.has_edge(u, v) {
                return Err(Error::NotAnOrientation(format!("arc {u}->{v} is not an edge")));
            }
            if dir.has_arc(v, u) {
                return Err(Error::NotAnOrientation(format!("conflicting directions on {u}{v}")));
            }
            dir.out[u] |= bit(v);
        }
        for (u, v) in base.edges() {
            if !dir.has_arc(u, v) && !dir.has_arc(v, u) {
                dir.out[u] |= bit(v);
            }
        }
        Ok(Orientation { base, dir })
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn dir(&self) -> &Digraph {
        &self.dir
    }

    pub fn order(&self) -> usize {
        self.base.n
    }

    /// True if the edge `uv` is oriented from `u` to `v`.
    pub fn points(&self, u: usize, v: usize) -> bool {
        self.dir.has_arc(u, v)
    }

    pub fn diameter(&self) -> Distance {
        self.dir.diameter()
    }

    pub fn into_parts(self) -> (Graph, Digraph) {
        (self.base, self.dir)
    }
}
