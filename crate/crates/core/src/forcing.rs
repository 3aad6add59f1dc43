//! The zero forcing color-change rule.
//!
//! A blue vertex with exactly one white neighbor forces that neighbor blue.
//! [`closure`] runs the rule to its fixed point and records the forces it
//! used; [`zero_forcing_number`] finds a minimum zero forcing set by exact
//! search.

use std::fmt;

use thiserror::Error;

use crate::budget::{Budget, BudgetExceeded};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// One application of the color-change rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Force {
    pub forcer: usize,
    pub forced: usize,
}

/// Ordered record of forces starting from some initial blue set.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ForcingTrace {
    pub steps: Vec<Force>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TraceError {
    #[error("step {step}: forcer {forcer} is not blue")]
    ForcerNotBlue { step: usize, forcer: usize },
    #[error("step {step}: {forced} is not a neighbor of {forcer}")]
    NotAdjacent { step: usize, forcer: usize, forced: usize },
    #[error("step {step}: {forced} is already blue")]
    AlreadyBlue { step: usize, forced: usize },
    #[error("step {step}: forcer {forcer} has {white} white neighbors")]
    NotUnique { step: usize, forcer: usize, white: usize },
}

impl ForcingTrace {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Replays the trace from `initial`, checking each step against the rule.
    /// Returns the blue set after the last step.
    pub fn replay(&self, g: &Graph, initial: VertexSet) -> Result<VertexSet, TraceError> {
        let mut blue = initial;
        for (step, &Force { forcer, forced }) in self.steps.iter().enumerate() {
            if !blue.contains(forcer) {
                return Err(TraceError::ForcerNotBlue { step, forcer });
            }
            if !g.has_edge(forcer, forced) {
                return Err(TraceError::NotAdjacent { step, forcer, forced });
            }
            if blue.contains(forced) {
                return Err(TraceError::AlreadyBlue { step, forced });
            }
            let white = g.neighbors(forcer).difference(blue).len();
            if white != 1 {
                return Err(TraceError::NotUnique { step, forcer, white });
            }
            blue.insert(forced);
        }
        Ok(blue)
    }
}

impl fmt::Display for ForcingTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.steps.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}->{}", s.forcer, s.forced)?;
        }
        Ok(())
    }
}

/// A blue coloring of a graph's vertices.
#[derive(Debug, Clone)]
pub struct ColorState<'g> {
    graph: &'g Graph,
    blue: VertexSet,
}

impl<'g> ColorState<'g> {
    /// # Panics
    /// If `blue` names a vertex outside the graph.
    pub fn new(graph: &'g Graph, blue: VertexSet) -> Self {
        assert!(
            blue.is_subset(graph.vertices()),
            "blue set {blue} is not contained in the vertex set of a {}-vertex graph",
            graph.n()
        );
        ColorState { graph, blue }
    }

    pub fn blue(&self) -> VertexSet {
        self.blue
    }

    pub fn white(&self) -> VertexSet {
        self.graph.vertices().difference(self.blue)
    }

    pub fn is_complete(&self) -> bool {
        self.blue == self.graph.vertices()
    }

    /// The force the lowest-index eligible forcer would perform now.
    pub fn next_force(&self) -> Option<Force> {
        self.blue.iter().find_map(|v| {
            let white = self.graph.neighbors(v).difference(self.blue);
            (white.len() == 1).then(|| Force {
                forcer: v,
                forced: white.first().expect("one white neighbor"),
            })
        })
    }

    pub fn apply(&mut self, force: Force) {
        debug_assert!(self.blue.contains(force.forcer));
        self.blue.insert(force.forced);
    }

    /// Runs the rule to its fixed point, lowest-index forcer first.
    pub fn run(&mut self) -> ForcingTrace {
        let mut trace = ForcingTrace::default();
        while let Some(force) = self.next_force() {
            self.apply(force);
            trace.steps.push(force);
        }
        trace
    }
}

/// Fixed point of the color-change rule together with the trace that reached it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Closure {
    pub final_set: VertexSet,
    pub trace: ForcingTrace,
}

impl Closure {
    pub fn is_complete(&self, g: &Graph) -> bool {
        self.final_set == g.vertices()
    }
}

/// Runs the forcing process from `initial` with the deterministic
/// lowest-index-forcer order.
pub fn closure(g: &Graph, initial: VertexSet) -> Closure {
    let mut state = ColorState::new(g, initial);
    let trace = state.run();
    Closure {
        final_set: state.blue(),
        trace,
    }
}

/// Fixed point of the color-change rule without recording a trace.
///
/// The fixed point does not depend on the order forces are applied in, so
/// this sweeps repeatedly over vertices that still have white neighbors.
pub fn closure_set(g: &Graph, initial: VertexSet) -> VertexSet {
    let all = g.vertices();
    let mut blue = initial;
    let mut active = blue;
    loop {
        let mut changed = false;
        for v in active {
            let white = g.neighbors(v).difference(blue);
            match white.len() {
                0 => active.remove(v),
                1 => {
                    blue = blue.union(white);
                    active.remove(v);
                    active = active.union(white);
                    changed = true;
                }
                _ => {}
            }
        }
        if !changed || blue == all {
            return blue;
        }
    }
}

pub fn is_forcing_set(g: &Graph, b: VertexSet) -> bool {
    closure_set(g, b) == g.vertices()
}

/// Minimum zero forcing set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZeroForcing {
    pub z: usize,
    pub witness: VertexSet,
}

/// Exact zero forcing number.
///
/// Sizes are tried in increasing order starting at the minimum degree (no set
/// smaller than `δ` can make a first force, and `Z(K_1) = 1`). Within a size,
/// subsets are visited in lexicographic order and the first forcing set wins,
/// so the witness is the lexicographically least minimum zero forcing set.
/// Every closure evaluation is charged to `budget`.
pub fn zero_forcing_number(g: &Graph, budget: &Budget) -> Result<ZeroForcing, BudgetExceeded> {
    let n = g.n();
    let start = g.min_degree().max(1);
    for size in start..=n {
        let mut found = None;
        for_each_subset(n, size, |set| {
            budget.charge()?;
            if is_forcing_set(g, set) {
                found = Some(set);
                return Ok(false);
            }
            Ok(true)
        })?;
        if let Some(witness) = found {
            return Ok(ZeroForcing { z: size, witness });
        }
    }
    unreachable!("the full vertex set is always a zero forcing set")
}

/// Visits the `size`-subsets of `0..n` in lexicographic order until `visit`
/// returns `Ok(false)`.
pub(crate) fn for_each_subset<E>(
    n: usize,
    size: usize,
    mut visit: impl FnMut(VertexSet) -> Result<bool, E>,
) -> Result<(), E> {
    if size > n {
        return Ok(());
    }
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        let set: VertexSet = idx.iter().copied().collect();
        if !visit(set)? {
            return Ok(());
        }
        // advance to the next combination
        let mut i = size;
        loop {
            if i == 0 {
                return Ok(());
            }
            i -= 1;
            if idx[i] < n - size + i {
                break;
            }
            if i == 0 {
                return Ok(());
            }
        }
        idx[i] += 1;
        for k in i + 1..size {
            idx[k] = idx[k - 1] + 1;
        }
    }
}
