//! Exact oriented diameter by exhaustive search, plus enumeration and the
//! verification harness built on it.

mod canon;
mod verify;

use std::time::{Duration, Instant};

pub use canon::{canonical_form, enumerate_blue};
pub use verify::{
    extremal_graph, regenerate_small_table, verify_sharpness, verify_sharpness_with,
    verify_theorem, VerificationReport,
};

use crate::graph::{bit, bits, Distance, Graph, Orientation};

/// Limits for one exhaustive search. Running out yields
/// [`Decision::Indeterminate`], never a wrong answer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_nodes: u64,
    pub time_limit: Option<Duration>,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { max_nodes: 100_000_000, time_limit: None }
    }
}

impl SearchBudget {
    pub fn nodes(max_nodes: u64) -> Self {
        SearchBudget { max_nodes, time_limit: None }
    }
}

#[derive(Clone, Debug)]
pub enum Decision {
    Yes(Orientation),
    No,
    Indeterminate,
}

impl Decision {
    pub fn is_yes(&self) -> bool {
        matches!(self, Decision::Yes(_))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiameterOutcome {
    Exact(Distance),
    Indeterminate,
}

struct Meter {
    nodes: u64,
    max_nodes: u64,
    deadline: Option<Instant>,
}

impl Meter {
    fn new(budget: &SearchBudget) -> Self {
        Meter {
            nodes: 0,
            max_nodes: budget.max_nodes,
            deadline: budget.time_limit.map(|t| Instant::now() + t),
        }
    }

    /// Counts a node; false once the budget is spent.
    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return false;
        }
        match self.deadline {
            Some(d) if self.nodes.is_multiple_of(1024) => Instant::now() < d,
            _ => true,
        }
    }
}

enum Search {
    Found(Vec<u64>),
    Exhausted,
    OutOfBudget,
}

/// Partial orientation: decided arcs in both directions plus the still
/// undecided edges.
#[derive(Clone)]
struct State {
    out: Vec<u64>,
    inn: Vec<u64>,
    open: Vec<u64>,
}

impl State {
    fn new(g: &Graph) -> Self {
        let n = g.order();
        State { out: vec![0; n], inn: vec![0; n], open: (0..n).map(|v| g.neighbors(v)).collect() }
    }

    fn orient(&mut self, u: usize, v: usize) -> bool {
        if self.open[u] >> v & 1 == 0 {
            return self.out[u] >> v & 1 == 1;
        }
        self.open[u] &= !bit(v);
        self.open[v] &= !bit(u);
        self.out[u] |= bit(v);
        self.inn[v] |= bit(u);
        true
    }

    fn is_complete(&self) -> bool {
        self.open.iter().all(|&m| m == 0)
    }
}

/// Propagates the pair conditions for diameter two: every ordered pair needs
/// a direct arc or a two-path that can still be realised. A pair with one
/// remaining option forces it. Returns false on a contradiction.
fn propagate2(s: &mut State) -> bool {
    let n = s.out.len();
    loop {
        let mut changed = false;
        for u in 0..n {
            for v in 0..n {
                if u == v || s.out[u] >> v & 1 == 1 || s.out[u] & s.inn[v] != 0 {
                    continue;
                }
                let may_out = s.out[u] | s.open[u];
                let may_in = s.inn[v] | s.open[v];
                let direct = s.open[u] >> v & 1 == 1;
                let via = may_out & may_in;
                let options = direct as u32 + via.count_ones();
                if options == 0 {
                    return false;
                }
                if options == 1 {
                    let ok = if direct {
                        s.orient(u, v)
                    } else {
                        let w = via.trailing_zeros() as usize;
                        s.orient(u, w) && s.orient(w, v)
                    };
                    if !ok {
                        return false;
                    }
                    changed = true;
                }
            }
        }
        if !changed {
            return true;
        }
    }
}

/// Undecided edge at the lowest-degree vertex that still has one, towards
/// its lowest-labelled open neighbor.
fn branch_edge(g: &Graph, s: &State) -> Option<(usize, usize)> {
    (0..s.open.len())
        .filter(|&v| s.open[v] != 0)
        .min_by_key(|&v| (g.degree(v), v))
        .map(|v| (v, s.open[v].trailing_zeros() as usize))
}

fn search2(g: &Graph, mut s: State, meter: &mut Meter) -> Search {
    if !meter.tick() {
        return Search::OutOfBudget;
    }
    if !propagate2(&mut s) {
        return Search::Exhausted;
    }
    let Some((u, v)) = branch_edge(g, &s) else {
        return Search::Found(s.out);
    };
    for (a, b) in [(u, v), (v, u)] {
        let mut next = s.clone();
        next.orient(a, b);
        match search2(g, next, meter) {
            Search::Exhausted => {}
            other => return other,
        }
    }
    Search::Exhausted
}

/// Lower bound on the distance from `u` to every vertex when every open edge
/// may be used in either direction; true if all are within `d`.
fn optimistic_within(s: &State, d: u32) -> bool {
    let n = s.out.len();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    (0..n).all(|u| {
        let mut seen = bit(u);
        let mut frontier = bit(u);
        for _ in 0..d {
            let mut next = 0;
            for w in bits(frontier) {
                next |= s.out[w] | s.open[w];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == all
    })
}

fn search_d(g: &Graph, s: State, d: u32, meter: &mut Meter) -> Search {
    if !meter.tick() {
        return Search::OutOfBudget;
    }
    if !optimistic_within(&s, d) {
        return Search::Exhausted;
    }
    if s.is_complete() {
        return Search::Found(s.out);
    }
    let (u, v) = branch_edge(g, &s).expect("incomplete state has an open edge");
    for (a, b) in [(u, v), (v, u)] {
        let mut next = s.clone();
        next.orient(a, b);
        match search_d(g, next, d, meter) {
            Search::Exhausted => {}
            other => return other,
        }
    }
    Search::Exhausted
}

fn witness(g: &Graph, out: Vec<u64>) -> Orientation {
    let arcs: Vec<(usize, usize)> =
        out.iter().enumerate().flat_map(|(u, &m)| bits(m).map(move |v| (u, v))).collect();
    Orientation::with_tiebreak(g.clone(), arcs).expect("search arcs orient the graph")
}

/// Whether some orientation of `g` has every vertex within `d` of every
/// other, by a pruned search over edge orientations.
pub fn exists_orientation_diameter_at_most(g: &Graph, d: u32, budget: &SearchBudget) -> Decision {
    decide(g, d, &mut Meter::new(budget))
}

fn decide(g: &Graph, d: u32, meter: &mut Meter) -> Decision {
    let n = g.order();
    if n <= 1 {
        return Decision::Yes(Orientation::with_tiebreak(g.clone(), []).expect("no edges"));
    }
    if d == 0 || !g.is_bridgeless() || !g.diameter().at_most(d) {
        return Decision::No;
    }
    let state = State::new(g);
    let result = if d == 2 { search2(g, state, meter) } else { search_d(g, state, d, meter) };
    match result {
        Search::Found(out) => {
            let o = witness(g, out);
            assert!(o.dir().diameter().at_most(d), "search produced an invalid witness");
            Decision::Yes(o)
        }
        Search::Exhausted => Decision::No,
        Search::OutOfBudget => Decision::Indeterminate,
    }
}

/// Whether `g` has an orientation of diameter at most two.
pub fn exists_orientation_diameter2(g: &Graph, budget: &SearchBudget) -> Decision {
    exists_orientation_diameter_at_most(g, 2, budget)
}

/// Minimum directed diameter over all orientations of `g`; infinite exactly
/// when `g` is disconnected or has a bridge. The budget is shared by all the
/// decision searches.
pub fn exact_oriented_diameter(g: &Graph, budget: &SearchBudget) -> DiameterOutcome {
    if g.order() <= 1 {
        return DiameterOutcome::Exact(Distance::Finite(0));
    }
    if !g.is_connected() || !g.is_bridgeless() {
        return DiameterOutcome::Exact(Distance::Infinite);
    }
    let start = g.diameter().finite().expect("connected");
    let mut meter = Meter::new(budget);
    for d in start.. {
        match decide(g, d, &mut meter) {
            Decision::Yes(_) => return DiameterOutcome::Exact(Distance::Finite(d)),
            Decision::No => {}
            Decision::Indeterminate => return DiameterOutcome::Indeterminate,
        }
    }
    unreachable!("bridgeless connected graphs have a strong orientation")
}
