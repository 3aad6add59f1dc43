//! Constructive zero forcing sets built from a minimum vertex cover.
//!
//! [`clawfree_forcing_set`] returns a forcing set of size exactly `β(G)` for
//! a connected claw-free graph. [`delta_bound_forcing_set`] returns a forcing
//! set of size at most `(Δ−2)β(G)+1` for any connected graph with `Δ ≥ 3`,
//! by repairing the initial set `S₀` with one-for-one swaps and at most one
//! greedy addition.
//!
//! Both procedures are polynomial once the cover is known; the `*_from_cover`
//! variants take the cover as input. Every choice is made lowest index first.

use std::fmt;

use thiserror::Error;

use crate::budget::{Budget, BudgetExceeded};
use crate::cover::{self, CoverError, CoverPartition};
use crate::forcing::{self, ForcingTrace};
use crate::graph::{Claw, Graph};
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("graph is not claw-free: {0}")]
    NotClawFree(Claw),
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph must have at least two vertices")]
    Trivial,
    #[error("maximum degree {0} is below 3")]
    MaxDegreeTooSmall(usize),
    #[error(transparent)]
    Cover(#[from] CoverError),
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
    #[error("construction invariant violated: {0}")]
    Invariant(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Procedure {
    ClawFree,
    DeltaBound,
}

impl Procedure {
    pub fn name(self) -> &'static str {
        match self {
            Procedure::ClawFree => "clawfree",
            Procedure::DeltaBound => "delta-bound",
        }
    }
}

/// Which rule triggered a swap.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SwapRule {
    /// Cover vertex with two white independent-side neighbors.
    Class2,
    /// Class-3 vertex with one of its three white neighbors turned blue.
    Class3,
    /// The claw-free initialization when no cover vertex has exactly one
    /// neighbor outside the cover.
    ClawFreeInit,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Swap {
    pub removed: usize,
    pub added: usize,
    pub rule: SwapRule,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionReport {
    pub procedure: Procedure,
    pub n: usize,
    pub max_degree: usize,
    /// Minimum vertex cover the construction started from.
    pub cover: VertexSet,
    pub partition: CoverPartition,
    pub initial_set: VertexSet,
    pub final_set: VertexSet,
    pub swaps: Vec<Swap>,
    pub greedy_additions: Vec<usize>,
    /// Forces from `final_set` under the lowest-index-first order.
    pub closure_trace: ForcingTrace,
    pub size_bound: usize,
    pub valid: bool,
}

impl ConstructionReport {
    pub fn beta(&self) -> usize {
        self.cover.len()
    }

    pub fn size(&self) -> usize {
        self.final_set.len()
    }

    /// Renders the line-oriented text report.
    pub fn to_text(&self, id: &str) -> String {
        self.to_string_with_id(id)
    }

    fn to_string_with_id(&self, id: &str) -> String {
        use std::fmt::Write;
        let mut s = String::new();
        let _ = writeln!(s, "graph: {id}");
        let _ = writeln!(s, "procedure: {}", self.procedure.name());
        let _ = writeln!(s, "n: {}", self.n);
        let _ = writeln!(s, "max_degree: {}", self.max_degree);
        let _ = writeln!(s, "beta: {}", self.beta());
        let _ = writeln!(s, "cover: {}", self.cover);
        let _ = writeln!(
            s,
            "classes: c1={} c2={} c3={}",
            self.partition.class1, self.partition.class2, self.partition.class3
        );
        let _ = writeln!(s, "initial: {}", self.initial_set);
        for sw in &self.swaps {
            let rule = match sw.rule {
                SwapRule::Class2 => "class2",
                SwapRule::Class3 => "class3",
                SwapRule::ClawFreeInit => "init",
            };
            let _ = writeln!(s, "swap: -{} +{} ({rule})", sw.removed, sw.added);
        }
        for g in &self.greedy_additions {
            let _ = writeln!(s, "greedy: +{g}");
        }
        let _ = writeln!(s, "final: {}", self.final_set);
        let _ = writeln!(s, "size: {}", self.size());
        let _ = writeln!(s, "bound: {}", self.size_bound);
        let _ = writeln!(s, "valid: {}", self.valid);
        let _ = writeln!(s, "trace: {}", self.closure_trace);
        s
    }
}

impl fmt::Display for ConstructionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with_id("-"))
    }
}

fn require_connected(g: &Graph) -> Result<(), ConstructionError> {
    if g.n() < 2 {
        return Err(ConstructionError::Trivial);
    }
    if !g.is_connected() {
        return Err(ConstructionError::Disconnected);
    }
    Ok(())
}

/// Rejects covers with an uncovered edge or a vertex that has no neighbor
/// outside the cover (such a cover is never minimum).
fn check_cover(g: &Graph, cover: VertexSet) -> Result<CoverPartition, ConstructionError> {
    let p = cover::classify_by_x(g, cover)?;
    if let Some(v) = p.unclassified().first() {
        return Err(CoverError::NotMinimal(v).into());
    }
    Ok(p)
}

#[allow(clippy::too_many_arguments)]
fn finish(
    g: &Graph,
    procedure: Procedure,
    cover: VertexSet,
    partition: CoverPartition,
    initial_set: VertexSet,
    final_set: VertexSet,
    swaps: Vec<Swap>,
    greedy_additions: Vec<usize>,
    size_bound: usize,
) -> Result<ConstructionReport, ConstructionError> {
    let closure = forcing::closure(g, final_set);
    let valid = closure.is_complete(g);
    let report = ConstructionReport {
        procedure,
        n: g.n(),
        max_degree: g.max_degree(),
        cover,
        partition,
        initial_set,
        final_set,
        swaps,
        greedy_additions,
        closure_trace: closure.trace,
        size_bound,
        valid,
    };
    if !report.valid {
        return Err(ConstructionError::Invariant(format!(
            "final set {final_set} is not a zero forcing set"
        )));
    }
    if report.size() > size_bound {
        return Err(ConstructionError::Invariant(format!(
            "final set has {} vertices, bound is {size_bound}",
            report.size()
        )));
    }
    Ok(report)
}

/// Zero forcing set of size `β(G)` for a connected claw-free graph.
pub fn clawfree_forcing_set(g: &Graph, budget: &Budget) -> Result<ConstructionReport, ConstructionError> {
    require_connected(g)?;
    if let Some(claw) = g.find_claw() {
        return Err(ConstructionError::NotClawFree(claw));
    }
    let vc = cover::vertex_cover_number(g, budget)?;
    clawfree_forcing_set_from_cover(g, vc.cover)
}

/// The claw-free construction from a given minimum vertex cover `C`.
///
/// If some cover vertex has exactly one neighbor in `X = V ∖ C`, the cover
/// itself is returned. Otherwise the lowest cover vertex `v` (which then has
/// two `X`-neighbors) is exchanged for its lowest `X`-neighbor.
pub fn clawfree_forcing_set_from_cover(
    g: &Graph,
    cover: VertexSet,
) -> Result<ConstructionReport, ConstructionError> {
    require_connected(g)?;
    if let Some(claw) = g.find_claw() {
        return Err(ConstructionError::NotClawFree(claw));
    }
    let partition = check_cover(g, cover)?;
    if !partition.class3.is_empty() {
        return Err(ConstructionError::Invariant(format!(
            "cover vertices {} have three or more independent neighbors in a claw-free graph",
            partition.class3
        )));
    }
    let (set, swaps) = if !partition.class1.is_empty() {
        (cover, Vec::new())
    } else {
        let v = partition
            .class2
            .first()
            .ok_or_else(|| ConstructionError::Invariant("empty cover".into()))?;
        let w = g
            .neighbors(v)
            .intersection(partition.independent)
            .first()
            .expect("class-2 vertex has independent neighbors");
        let swap = Swap {
            removed: v,
            added: w,
            rule: SwapRule::ClawFreeInit,
        };
        (cover.without(v).with(w), vec![swap])
    };
    finish(
        g,
        Procedure::ClawFree,
        cover,
        partition,
        set,
        set,
        swaps,
        Vec::new(),
        cover.len(),
    )
}

/// Builds `S₀` from a minimum cover `C`.
///
/// Each cover vertex `v` colors its `i(v) = min(|N(v) ∩ X|, max(0, d(v) − 3))`
/// lowest-index `X`-neighbors blue. The returned partition counts, for each
/// cover vertex, its `X`-neighbors left white by `S₀`; it is not updated by
/// later swaps. Afterwards no cover vertex has more than three white
/// `X`-neighbors, and one with exactly three has no neighbor in `C`.
pub fn build_s0(g: &Graph, cover: VertexSet) -> Result<(VertexSet, CoverPartition), ConstructionError> {
    let delta = g.max_degree();
    if delta < 3 {
        return Err(ConstructionError::MaxDegreeTooSmall(delta));
    }
    let base = check_cover(g, cover)?;
    let x = base.independent;
    let mut s0 = cover;
    for v in cover {
        let x_nb = g.neighbors(v).intersection(x);
        let i = x_nb.len().min(g.degree(v).saturating_sub(3));
        s0 = s0.union(x_nb.iter().take(i).collect());
    }
    let partition = CoverPartition::from_counts(cover, x, |v| {
        g.neighbors(v).intersection(x).difference(s0).len()
    });
    Ok((s0, partition))
}

/// Zero forcing set of size at most `(Δ−2)β(G)+1` for a connected graph
/// with `Δ ≥ 3`; at most `(Δ−2)β(G)` when `S₀` leaves some cover vertex with
/// one or two white neighbors.
pub fn delta_bound_forcing_set(g: &Graph, budget: &Budget) -> Result<ConstructionReport, ConstructionError> {
    require_connected(g)?;
    let delta = g.max_degree();
    if delta < 3 {
        return Err(ConstructionError::MaxDegreeTooSmall(delta));
    }
    let vc = cover::vertex_cover_number(g, budget)?;
    delta_bound_forcing_set_from_cover(g, vc.cover)
}

/// The `(Δ−2)β+1` construction from a given minimum vertex cover.
///
/// Starting at `S₀`, while the closure of `S` is not everything:
/// 1. a class-2 vertex `v ∈ S` with both `X`-neighbors white is replaced by
///    its lowest white `X`-neighbor;
/// 2. otherwise a class-3 vertex `a ∈ S` with exactly two white
///    `X`-neighbors is replaced by the lower of them;
/// 3. otherwise, if every cover vertex is class 3, one white `X`-neighbor of
///    the lowest class-3 vertex is added (once per run).
///
/// Every step must strictly enlarge the closure. A step that does not, or a
/// stall with no applicable rule, is reported as
/// [`ConstructionError::Invariant`].
pub fn delta_bound_forcing_set_from_cover(
    g: &Graph,
    cover: VertexSet,
) -> Result<ConstructionReport, ConstructionError> {
    require_connected(g)?;
    let (s0, partition) = build_s0(g, cover)?;
    let delta = g.max_degree();
    let beta = cover.len();
    let x = partition.independent;
    let n = g.n();

    let mut set = s0;
    let mut reached = forcing::closure_set(g, set);
    let mut swaps = Vec::new();
    let mut greedy = Vec::new();
    let mut steps = 0usize;

    while reached != g.vertices() {
        steps += 1;
        if steps > n {
            return Err(ConstructionError::Invariant(format!(
                "no zero forcing set after {n} repair steps"
            )));
        }
        let white_x = |v: usize| g.neighbors(v).intersection(x).difference(reached);

        let class2_pick = partition
            .class2
            .iter()
            .find(|&v| white_x(v).len() == 2)
            .map(|v| (v, SwapRule::Class2));
        let pick = class2_pick.or_else(|| {
            partition
                .class3
                .iter()
                .find(|&a| white_x(a).len() == 2)
                .map(|a| (a, SwapRule::Class3))
        });

        if let Some((v, rule)) = pick {
            if !set.contains(v) {
                return Err(ConstructionError::Invariant(format!(
                    "swap candidate {v} is not in the current set {set}"
                )));
            }
            let w = white_x(v).first().expect("two white neighbors");
            set = set.without(v).with(w);
            swaps.push(Swap {
                removed: v,
                added: w,
                rule,
            });
        } else if partition.class3 == cover && greedy.is_empty() {
            let a = partition
                .class3
                .iter()
                .find(|&a| white_x(a).len() == 3)
                .ok_or_else(|| {
                    ConstructionError::Invariant("bipartite case without a fully white class-3 vertex".into())
                })?;
            let b = white_x(a).first().expect("three white neighbors");
            set = set.with(b);
            greedy.push(b);
        } else {
            return Err(ConstructionError::Invariant(format!(
                "no admissible repair step; closure of {set} is {reached}"
            )));
        }

        let next = forcing::closure_set(g, set);
        if !(reached.is_subset(next) && next != reached) {
            return Err(ConstructionError::Invariant(format!(
                "closure {next} after step {steps} does not strictly contain previous closure {reached}"
            )));
        }
        reached = next;
    }

    let tight = !partition.class1.union(partition.class2).is_empty();
    if tight && !greedy.is_empty() {
        return Err(ConstructionError::Invariant(
            "greedy addition used although class 1 or class 2 is nonempty".into(),
        ));
    }
    let bound = (delta - 2) * beta + 1;
    finish(
        g,
        Procedure::DeltaBound,
        cover,
        partition,
        s0,
        set,
        swaps,
        greedy,
        bound,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forcing::zero_forcing_number;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    fn budget() -> Budget {
        Budget::unlimited()
    }

    #[test]
    fn clawfree_on_triangle_and_c5() {
        let r = clawfree_forcing_set(&Graph::complete(3), &budget()).unwrap();
        assert_eq!(r.size(), 2);
        assert!(r.valid);

        let c5 = Graph::cycle(5);
        let r = clawfree_forcing_set(&c5, &budget()).unwrap();
        assert_eq!(r.size(), 3);
        assert!(r.valid);
        assert_eq!(zero_forcing_number(&c5, &budget()).unwrap().z, 2);
    }

    #[test]
    fn clawfree_swap_branch() {
        // C6 with cover {1,3,5}: every cover vertex has two X-neighbors
        let c6 = Graph::cycle(6);
        let r = clawfree_forcing_set_from_cover(&c6, set(&[1, 3, 5])).unwrap();
        assert_eq!(
            r.swaps,
            vec![Swap {
                removed: 1,
                added: 0,
                rule: SwapRule::ClawFreeInit
            }]
        );
        assert_eq!(r.final_set, set(&[0, 3, 5]));
        assert!(r.valid);
    }

    #[test]
    fn clawfree_hypothesis_errors() {
        assert!(matches!(
            clawfree_forcing_set(&Graph::star(3), &budget()),
            Err(ConstructionError::NotClawFree(Claw { center: 0, .. }))
        ));
        assert_eq!(
            clawfree_forcing_set(&Graph::empty(2), &budget()).unwrap_err(),
            ConstructionError::Disconnected
        );
        assert_eq!(
            clawfree_forcing_set(&Graph::empty(1), &budget()).unwrap_err(),
            ConstructionError::Trivial
        );
    }

    #[test]
    fn s0_on_star_and_cubic() {
        let k14 = Graph::star(4);
        let (s0, p) = build_s0(&k14, set(&[0])).unwrap();
        assert_eq!(s0, set(&[0, 1]));
        assert_eq!(p.class3, set(&[0]));

        let pet = Graph::petersen();
        let cover = cover::vertex_cover_number(&pet, &budget()).unwrap().cover;
        let (s0, _) = build_s0(&pet, cover).unwrap();
        assert_eq!(s0, cover);

        let k23 = Graph::complete_bipartite(2, 3);
        let (s0, p) = build_s0(&k23, set(&[0, 1])).unwrap();
        assert_eq!(s0, set(&[0, 1]));
        assert_eq!(p.class3, set(&[0, 1]));
    }

    #[test]
    fn s0_rejects_bad_input() {
        assert_eq!(
            build_s0(&Graph::cycle(5), set(&[0, 2, 4])).unwrap_err(),
            ConstructionError::MaxDegreeTooSmall(2)
        );
        assert!(matches!(
            build_s0(&Graph::star(3), set(&[1, 2])),
            Err(ConstructionError::Cover(CoverError::NotACover(..)))
        ));
        // K4 with cover of all vertices: not minimum
        assert!(matches!(
            build_s0(&Graph::complete(4), set(&[0, 1, 2, 3])),
            Err(ConstructionError::Cover(CoverError::NotMinimal(0)))
        ));
    }

    #[test]
    fn delta_bound_star_and_k23_reach_equality() {
        let r = delta_bound_forcing_set(&Graph::star(4), &budget()).unwrap();
        assert_eq!(r.size(), 3);
        assert_eq!(r.size_bound, 3);
        assert_eq!(r.greedy_additions.len(), 1);

        let r = delta_bound_forcing_set(&Graph::complete_bipartite(2, 3), &budget()).unwrap();
        assert_eq!(r.size(), 3);
        assert_eq!(r.size_bound, 3);
        assert_eq!(r.greedy_additions, vec![2]);
        assert_eq!(r.swaps.len(), 1);
        assert_eq!(r.swaps[0].rule, SwapRule::Class3);
    }

    #[test]
    fn delta_bound_petersen() {
        let r = delta_bound_forcing_set(&Graph::petersen(), &budget()).unwrap();
        assert!(r.valid);
        assert!(r.size() <= 7);
        assert!(r.swaps.len() <= 10);
    }

    #[test]
    fn delta_bound_rejects_low_degree() {
        assert_eq!(
            delta_bound_forcing_set(&Graph::cycle(6), &budget()).unwrap_err(),
            ConstructionError::MaxDegreeTooSmall(2)
        );
    }

    #[test]
    fn report_text_lists_every_field() {
        let r = delta_bound_forcing_set(&Graph::complete_bipartite(2, 3), &budget()).unwrap();
        let text = r.to_text("K23");
        for key in [
            "graph: K23",
            "procedure: delta-bound",
            "initial: {0, 1}",
            "greedy: +2",
            "swap: -0 +3 (class3)",
            "final: {1, 2, 3}",
            "size: 3",
            "bound: 3",
            "valid: true",
        ] {
            assert!(text.contains(key), "missing {key:?} in\n{text}");
        }
    }

    #[test]
    fn delta_bound_reports_stall_as_invariant_error() {
        // the only path from class 3 to class 1 passes through an X-vertex
        // that S0 already colored, so no repair rule applies
        let g = crate::graph::parse_graph6("H???~?{").unwrap();
        let err = delta_bound_forcing_set(&g, &budget()).unwrap_err();
        assert!(matches!(err, ConstructionError::Invariant(_)), "{err}");
        let z = forcing::zero_forcing_number(&g, &budget()).unwrap().z;
        let beta = cover::vertex_cover_number(&g, &budget()).unwrap().beta;
        assert!(z <= (g.max_degree() - 2) * beta + 1);
    }
}
