//! Diameter-two orientations for graphs at or above the size threshold.
//!
//! The driver pads the input down to exactly the threshold, then repeatedly
//! tries a catalogue base case, a reduction, or a violating-triple
//! contraction on the blue complement. Contractions are pushed on an explicit
//! stack and expanded back once a base case is solved. Every step is
//! recorded in a [`ConstructionTrace`] that [`replay`] can re-execute.

pub mod base_case;

use serde::Serialize;

pub use base_case::{
    base_case_orient, small_case_blue, table_families, BaseCase, BaseFamily, SMALL_CASE_TABLE,
};

use crate::error::{Error, Result};
use crate::good_orient::{verify_cert, GoodOrientationCert};
use crate::graph::{mask_of, Graph, Orientation};
use crate::oracle::{exists_orientation_diameter2, Decision, SearchBudget};
use crate::structure::{
    find_reduction, find_violating_triple, plan_for_split, triple_profile, Recipe, ReductionPlan,
    TripleWitness,
};
use crate::threshold_size;

/// One decision of the driver.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "step", rename_all = "kebab-case")]
pub enum TraceStep {
    /// Red edges removed to reach the threshold exactly.
    Pad { deleted: Vec<(usize, usize)> },
    BaseCase { family: BaseFamily },
    /// `w` is the union of the classes `x` and `y`.
    Reduce { w: Vec<usize>, x: Vec<usize>, y: Vec<usize>, recipe: Recipe },
    ContractTriple { x: [usize; 3] },
    FallbackOracle { reason: String },
}

/// Steps taken by one construction, outermost level first. Vertex labels in
/// each step refer to the graph of that level.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ConstructionTrace {
    pub steps: Vec<TraceStep>,
}

impl ConstructionTrace {
    pub fn fallback_count(&self) -> usize {
        self.steps.iter().filter(|s| matches!(s, TraceStep::FallbackOracle { .. })).count()
    }

    /// Number of instances solved, the input included.
    pub fn levels(&self) -> usize {
        self.steps.iter().filter(|s| matches!(s, TraceStep::Pad { .. })).count()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FrameKind {
    Reduction,
    Triple,
}

/// Everything needed to undo one contraction.
///
/// Child vertex `i < kept.len()` is parent vertex `kept[i]`; the vertices
/// after those are the added ones (`u1, v1` for a reduction, `x` for a
/// triple).
#[derive(Clone, Debug)]
pub struct ContractionFrame {
    pub kind: FrameKind,
    /// Red graph before contraction.
    pub parent: Graph,
    /// Parent labels of the removed vertices, sorted.
    pub removed: Vec<usize>,
    pub kept: Vec<usize>,
    /// Certificate on the removed set (reductions only).
    pub cert: Option<GoodOrientationCert>,
}

impl ContractionFrame {
    /// Child labels of the added vertices.
    pub fn added(&self) -> Vec<usize> {
        let k = self.kept.len();
        match self.kind {
            FrameKind::Reduction => vec![k, k + 1],
            FrameKind::Triple => vec![k],
        }
    }

    /// Red graph after contraction.
    pub fn child(&self) -> Result<Graph> {
        let blue = self.parent.complement();
        let k = self.kept.len();
        let gone = mask_of(&self.removed);
        let mut b = Graph::empty(k + self.added().len())?;
        for (i, &u) in self.kept.iter().enumerate() {
            for (j, &v) in self.kept.iter().enumerate().skip(i + 1) {
                if blue.has_edge(u, v) {
                    b.add_edge(i, j)?;
                }
            }
        }
        match self.kind {
            FrameKind::Reduction => b.add_edge(k, k + 1)?,
            FrameKind::Triple => {
                for (i, &u) in self.kept.iter().enumerate() {
                    if blue.neighbors(u) & gone != 0 {
                        b.add_edge(i, k)?;
                    }
                }
            }
        }
        Ok(b.complement())
    }
}

/// Removes the lexicographically smallest edges until exactly the threshold
/// number of edges is left.
pub fn normalize_to_threshold(g: &Graph) -> Result<(Graph, Vec<(usize, usize)>)> {
    let n = g.order();
    let required = threshold_size(n);
    if n < 5 || g.size() < required {
        return Err(Error::BelowThreshold { order: n, size: g.size(), required });
    }
    let deleted: Vec<(usize, usize)> = g.edges().take(g.size() - required).collect();
    let mut padded = g.clone();
    for &(u, v) in &deleted {
        padded.remove_edge(u, v);
    }
    Ok((padded, deleted))
}

fn complement_of_rest(n: usize, removed: &[usize]) -> Vec<usize> {
    let gone = mask_of(removed);
    (0..n).filter(|&v| gone >> v & 1 == 0).collect()
}

fn sorted(v: &[usize]) -> Vec<usize> {
    let mut v = v.to_vec();
    v.sort_unstable();
    v
}

/// Replaces the reduction set by a blue edge `u1 v1`.
pub fn contract_reduction(red: &Graph, plan: &ReductionPlan) -> Result<(Graph, ContractionFrame)> {
    let frame = ContractionFrame {
        kind: FrameKind::Reduction,
        parent: red.clone(),
        removed: sorted(&plan.w),
        kept: complement_of_rest(red.order(), &plan.w),
        cert: Some(plan.cert.clone()),
    };
    Ok((frame.child()?, frame))
}

/// Identifies the blue-independent triple to one vertex.
pub fn contract_triple(red: &Graph, triple: &TripleWitness) -> Result<(Graph, ContractionFrame)> {
    let x = sorted(&triple.x);
    if x.windows(2).any(|p| p[0] == p[1]) || x.iter().any(|&v| v >= red.order()) {
        return Err(Error::Precondition("triple must be three distinct vertices".into()));
    }
    let frame = ContractionFrame {
        kind: FrameKind::Triple,
        parent: red.clone(),
        removed: x,
        kept: complement_of_rest(red.order(), &triple.x),
        cert: None,
    };
    Ok((frame.child()?, frame))
}

fn check_child(o_star: &Orientation, frame: &ContractionFrame, kind: FrameKind) -> Result<()> {
    if frame.kind != kind {
        return Err(Error::Precondition(format!("expected a {kind:?} frame")));
    }
    if frame.kept.len() + frame.removed.len() != frame.parent.order()
        || sorted(&[frame.kept.as_slice(), &frame.removed].concat())
            != (0..frame.parent.order()).collect::<Vec<_>>()
    {
        return Err(Error::Precondition("frame does not partition the parent vertices".into()));
    }
    if *o_star.base() != frame.child()? {
        return Err(Error::Precondition("orientation is not of the contracted graph".into()));
    }
    if !o_star.dir().has_diameter_at_most_two() {
        return Err(Error::Precondition("contracted orientation has diameter above two".into()));
    }
    Ok(())
}

/// Arcs of `o_star` between kept vertices, in parent labels.
fn outside_arcs<'a>(
    o_star: &'a Orientation,
    kept: &'a [usize],
) -> impl Iterator<Item = (usize, usize)> + 'a {
    o_star
        .dir()
        .arcs()
        .filter(move |&(i, j)| i < kept.len() && j < kept.len())
        .map(move |(i, j)| (kept[i], kept[j]))
}

fn finish(parent: &Graph, arcs: Vec<(usize, usize)>) -> Result<Orientation> {
    let o = Orientation::with_tiebreak(parent.clone(), arcs)?;
    if !o.dir().has_diameter_at_most_two() {
        return Err(Error::Verification("expanded orientation has diameter above two".into()));
    }
    Ok(o)
}

/// Undoes a reduction: the certificate orients the removed set and each
/// edge from an outside vertex to a class follows its edge to `u1` or `v1`.
pub fn expand_reduction(o_star: &Orientation, frame: &ContractionFrame) -> Result<Orientation> {
    check_child(o_star, frame, FrameKind::Reduction)?;
    let cert = frame
        .cert
        .as_ref()
        .ok_or_else(|| Error::Precondition("reduction frame without certificate".into()))?;
    if sorted(&cert.vertices) != frame.removed || !cert.nontrivial || !verify_cert(cert)? {
        return Err(Error::Precondition("certificate does not match the removed set".into()));
    }
    let parent = &frame.parent;
    if cert.world != parent.induced(&cert.vertices) {
        return Err(Error::Precondition("certificate world differs from the removed set".into()));
    }
    let gone = mask_of(&frame.removed);
    if frame.kept.iter().any(|&v| parent.neighbors(v) & gone != gone) {
        return Err(Error::Precondition("a blue edge leaves the removed set".into()));
    }
    let k = frame.kept.len();
    let (u1, v1) = (cert.host_u1(), cert.host_v1());
    let mut arcs: Vec<(usize, usize)> = cert.host_arcs().collect();
    arcs.extend(outside_arcs(o_star, &frame.kept));
    for (i, &x) in frame.kept.iter().enumerate() {
        for (hub, class) in [(k, &u1), (k + 1, &v1)] {
            let out = o_star.points(i, hub);
            arcs.extend(class.iter().map(|&w| if out { (x, w) } else { (w, x) }));
        }
    }
    finish(parent, arcs)
}

/// Undoes a triple contraction: the triple becomes a directed triangle and
/// each edge `u x_i` follows `u x` when that edge exists.
pub fn expand_triple_contraction(o_star: &Orientation, frame: &ContractionFrame) -> Result<Orientation> {
    check_child(o_star, frame, FrameKind::Triple)?;
    let x = &frame.removed;
    if x.len() != 3 {
        return Err(Error::Precondition("triple frame must remove three vertices".into()));
    }
    let k = frame.kept.len();
    let mut arcs = vec![(x[0], x[1]), (x[1], x[2]), (x[2], x[0])];
    arcs.extend(outside_arcs(o_star, &frame.kept));
    for (i, &u) in frame.kept.iter().enumerate() {
        if o_star.base().has_edge(i, k) {
            let out = o_star.points(i, k);
            arcs.extend(x.iter().map(|&xi| if out { (u, xi) } else { (xi, u) }));
        }
    }
    finish(&frame.parent, arcs)
}

/// What the driver does with one padded instance.
enum Action {
    Base(BaseCase),
    Reduce(ReductionPlan),
    Triple(TripleWitness),
    Fallback(Orientation, String),
}

#[derive(Clone, Debug, Default)]
pub struct ConstructOptions {
    /// Budget for the exhaustive fallback search.
    pub budget: SearchBudget,
}

struct Level {
    original: Graph,
    frame: Option<ContractionFrame>,
}

fn oracle_fallback(padded: &Graph, budget: &SearchBudget, reason: &str) -> Result<Action> {
    log::warn!(
        "no rule applies to blue graph {}; {reason}, using exhaustive search",
        crate::codec::to_graph6(&padded.complement())
    );
    match exists_orientation_diameter2(padded, budget) {
        Decision::Yes(o) => Ok(Action::Fallback(o, reason.to_string())),
        Decision::No => Err(Error::Verification(format!(
            "threshold graph {} has no diameter-two orientation",
            crate::codec::to_graph6(padded)
        ))),
        Decision::Indeterminate => Err(Error::BudgetExhausted),
    }
}

const NO_RULE: &str = "no base case, reduction or violating triple";

fn decide_live(padded: &Graph, budget: &SearchBudget) -> Result<Action> {
    let blue = padded.complement();
    if let Some(base) = base_case_orient(&blue)? {
        return Ok(Action::Base(base));
    }
    if let Some(plan) = find_reduction(&blue)? {
        return Ok(Action::Reduce(plan));
    }
    if blue.order() >= 7 {
        if let Some(t) = find_violating_triple(&blue) {
            return Ok(Action::Triple(t));
        }
    }
    oracle_fallback(padded, budget, NO_RULE)
}

fn check_threshold(child: &Graph, kind: FrameKind) -> Result<()> {
    let n = child.order();
    let blue_edges = n * n.saturating_sub(1) / 2 - child.size();
    let min_order = if kind == FrameKind::Reduction { 6 } else { 5 };
    if n < min_order || blue_edges + 5 > n {
        return Err(Error::Verification(format!(
            "contraction left the threshold regime (order {n}, {blue_edges} blue edges)"
        )));
    }
    Ok(())
}

fn drive<F>(g: &Graph, mut decide: F) -> Result<(Orientation, ConstructionTrace)>
where
    F: FnMut(&Graph, &[(usize, usize)]) -> Result<Action>,
{
    let mut trace = ConstructionTrace::default();
    let mut stack: Vec<Level> = Vec::new();
    let mut current = g.clone();
    let leaf = loop {
        let (padded, deleted) = normalize_to_threshold(&current)?;
        let action = decide(&padded, &deleted)?;
        trace.steps.push(TraceStep::Pad { deleted });
        let (child, frame) = match action {
            Action::Base(base) => {
                trace.steps.push(TraceStep::BaseCase { family: base.family });
                stack.push(Level { original: current, frame: None });
                break base.orientation;
            }
            Action::Fallback(o, reason) => {
                trace.steps.push(TraceStep::FallbackOracle { reason });
                stack.push(Level { original: current, frame: None });
                break o;
            }
            Action::Reduce(plan) => {
                trace.steps.push(TraceStep::Reduce {
                    w: plan.w.clone(),
                    x: plan.x.clone(),
                    y: plan.y.clone(),
                    recipe: plan.recipe,
                });
                contract_reduction(&padded, &plan)?
            }
            Action::Triple(t) => {
                trace.steps.push(TraceStep::ContractTriple { x: t.x });
                contract_triple(&padded, &t)?
            }
        };
        check_threshold(&child, frame.kind)?;
        log::debug!("contracted order {} to {}", padded.order(), child.order());
        stack.push(Level { original: current, frame: Some(frame) });
        current = child;
    };
    let mut o = leaf;
    while let Some(level) = stack.pop() {
        if let Some(frame) = &level.frame {
            o = match frame.kind {
                FrameKind::Reduction => expand_reduction(&o, frame)?,
                FrameKind::Triple => expand_triple_contraction(&o, frame)?,
            };
        }
        // Padding edges are restored from lower to higher label.
        o = Orientation::with_tiebreak(level.original, o.dir().arcs().collect::<Vec<_>>())?;
    }
    if o.base() != g || !o.dir().has_diameter_at_most_two() {
        return Err(Error::Verification("final orientation failed the diameter check".into()));
    }
    Ok((o, trace))
}

/// Diameter-two orientation of `g`, which needs at least five vertices and
/// at least `C(n,2) - n + 5` edges.
pub fn orient_diameter_two(g: &Graph) -> Result<(Orientation, ConstructionTrace)> {
    orient_diameter_two_with(g, &ConstructOptions::default())
}

pub fn orient_diameter_two_with(
    g: &Graph,
    options: &ConstructOptions,
) -> Result<(Orientation, ConstructionTrace)> {
    drive(g, |padded, _| decide_live(padded, &options.budget))
}

/// Re-executes a recorded construction on `g`, checking each recorded
/// decision against the instance it is applied to. The result equals the
/// orientation of the original run.
pub fn replay(g: &Graph, trace: &ConstructionTrace) -> Result<Orientation> {
    let mut steps = trace.steps.iter();
    let mismatch = |what: &str| Error::Precondition(format!("trace does not match: {what}"));
    let (o, again) = drive(g, |padded, deleted| {
        match steps.next() {
            Some(TraceStep::Pad { deleted: d }) if d.as_slice() == deleted => {}
            _ => return Err(mismatch("padding")),
        }
        let blue = padded.complement();
        match steps.next() {
            Some(TraceStep::BaseCase { family }) => match base_case_orient(&blue)? {
                Some(base) if base.family == *family => Ok(Action::Base(base)),
                _ => Err(mismatch("base case")),
            },
            Some(TraceStep::Reduce { w, x, y, recipe }) => {
                let plan = plan_for_split(&blue, *recipe, x, y)?;
                if plan.w != *w {
                    return Err(mismatch("reduction set"));
                }
                Ok(Action::Reduce(plan))
            }
            Some(TraceStep::ContractTriple { x }) => {
                let t = triple_profile(&blue, *x);
                let independent = x.iter().all(|&a| x.iter().all(|&b| !blue.has_edge(a, b)));
                if !independent || !t.is_violating() {
                    return Err(mismatch("triple"));
                }
                Ok(Action::Triple(t))
            }
            Some(TraceStep::FallbackOracle { reason }) => {
                oracle_fallback(padded, &SearchBudget::default(), reason)
            }
            _ => Err(mismatch("missing step")),
        }
    })?;
    if again != *trace {
        return Err(mismatch("steps left over"));
    }
    Ok(o)
}

/// Vertices of `frame.parent` whose edges to the triple were oriented by the
/// tie-break rather than copied.
pub fn tiebreak_vertices(frame: &ContractionFrame) -> Vec<usize> {
    let x = mask_of(&frame.removed);
    frame
        .kept
        .iter()
        .copied()
        .filter(|&u| {
            let reds = frame.parent.neighbors(u) & x;
            reds != 0 && reds != x
        })
        .collect()
}
