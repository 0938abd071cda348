//! Slow, independent reference implementations used by the integration
//! tests. None of these call into the crate beyond building `Graph` values.

#![allow(dead_code)]

use orient2::Graph;
use rand::seq::SliceRandom;
use rand::Rng;

/// Directed distances by plain BFS over an adjacency matrix; `None` is
/// unreachable.
pub fn all_distances(n: usize, arcs: &[(usize, usize)]) -> Vec<Vec<Option<u32>>> {
    let mut adj = vec![vec![false; n]; n];
    for &(u, v) in arcs {
        adj[u][v] = true;
    }
    (0..n)
        .map(|s| {
            let mut dist = vec![None; n];
            dist[s] = Some(0);
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for v in 0..n {
                    if adj[u][v] && dist[v].is_none() {
                        dist[v] = Some(dist[u].unwrap() + 1);
                        queue.push_back(v);
                    }
                }
            }
            dist
        })
        .collect()
}

/// Directed diameter, `None` when some pair is unreachable.
pub fn naive_diameter(n: usize, arcs: &[(usize, usize)]) -> Option<u32> {
    let d = all_distances(n, arcs);
    let mut worst = 0;
    for row in &d {
        for x in row {
            worst = worst.max((*x)?);
        }
    }
    Some(worst)
}

/// Minimum diameter over all `2^m` orientations.
pub fn naive_oriented_diameter(g: &Graph) -> Option<u32> {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let m = edges.len();
    assert!(m <= 24, "too many edges for full enumeration");
    let mut best: Option<u32> = None;
    let mut arcs = Vec::with_capacity(m);
    for mask in 0u64..1 << m {
        arcs.clear();
        for (i, &(u, v)) in edges.iter().enumerate() {
            arcs.push(if mask >> i & 1 == 1 { (v, u) } else { (u, v) });
        }
        if let Some(d) = naive_diameter(g.order(), &arcs) {
            best = Some(best.map_or(d, |b| b.min(d)));
        }
    }
    if g.order() <= 1 {
        return Some(0);
    }
    best
}

fn connected_without(g: &Graph, skip: Option<(usize, usize)>) -> bool {
    let n = g.order();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for v in 0..n {
            let skipped = skip == Some((u.min(v), u.max(v)));
            if g.has_edge(u, v) && !skipped && !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    seen.iter().all(|&s| s)
}

pub fn naive_connected(g: &Graph) -> bool {
    connected_without(g, None)
}

/// Connected and every edge lies on a cycle.
pub fn naive_connected_bridgeless(g: &Graph) -> bool {
    naive_connected(g) && g.edges().all(|e| connected_without(g, Some(e)))
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// Random spanning tree plus `extra` further random edges (as many as fit).
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, extra: usize) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    for i in 1..n {
        let j = rng.gen_range(0..i);
        g.add_edge(order[i], order[j]).unwrap();
    }
    let mut missing: Vec<(usize, usize)> = g.complement().edges().collect();
    missing.shuffle(rng);
    for &(u, v) in missing.iter().take(extra) {
        g.add_edge(u, v).unwrap();
    }
    g
}

/// Random blue graph on `n` vertices with exactly `m` edges.
pub fn random_blue<R: Rng>(rng: &mut R, n: usize, m: usize) -> Graph {
    let mut all: Vec<(usize, usize)> = Graph::complete(n).unwrap().edges().collect();
    all.shuffle(rng);
    Graph::from_edges(n, &all[..m]).unwrap()
}

pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// Edge set as a bitmask over the pairs `u < v` of `n <= 11` vertices.
fn edge_code(n: usize, edges: impl Iterator<Item = (usize, usize)>) -> u64 {
    let mut code = 0;
    for (u, v) in edges {
        let (u, v) = (u.min(v), u.max(v));
        code |= 1 << (v * (v - 1) / 2 + u);
    }
    debug_assert!(n * (n - 1) / 2 <= 64);
    code
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Least edge code over all `n!` relabelings.
pub fn brute_canonical_code(g: &Graph) -> u64 {
    let n = g.order();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut p: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    loop {
        best = best.min(edge_code(n, edges.iter().map(|&(u, v)| (p[u], p[v]))));
        if !next_permutation(&mut p) {
            return best;
        }
    }
}

/// Number of isomorphism classes of graphs on `n` vertices with at most
/// `max_edges` edges, by labeled enumeration and brute-force dedup.
pub fn labeled_class_count(n: usize, max_edges: usize) -> usize {
    let pairs: Vec<(usize, usize)> = Graph::complete(n).unwrap().edges().collect();
    let mut seen = std::collections::HashSet::new();
    let mut chosen = Vec::new();
    fn rec(
        pairs: &[(usize, usize)],
        start: usize,
        left: usize,
        n: usize,
        chosen: &mut Vec<(usize, usize)>,
        seen: &mut std::collections::HashSet<u64>,
    ) {
        let g = Graph::from_edges(n, chosen).unwrap();
        seen.insert(brute_canonical_code(&g));
        if left == 0 {
            return;
        }
        for i in start..pairs.len() {
            chosen.push(pairs[i]);
            rec(pairs, i + 1, left - 1, n, chosen, seen);
            chosen.pop();
        }
    }
    rec(&pairs, 0, max_edges, n, &mut chosen, &mut seen);
    seen.len()
}
