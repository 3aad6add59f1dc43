//! Invariant tables, linear upper-bound fitting ranked by touch count, and
//! verification of the named inequalities over a corpus.

mod bounds;
mod fit;
mod named;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use thiserror::Error;

use crate::budget::{Budget, BudgetExceeded};
use crate::cover;
use crate::forcing;
use crate::graph::Graph;

pub use bounds::{caro_pepper_bound, check_join_theorem, JoinCheck};
pub use fit::{check_conjecture, fit_linear_upper_bounds, ConjectureRecord, Status};
pub use named::{check_named_statements, NamedReport, Statement, StatementResult};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConjectureError {
    #[error("{support} rows satisfy hypothesis {hypothesis}, at least 2 are needed")]
    TooFewRows { hypothesis: Hypothesis, support: usize },
    #[error("hypothesis not met: {0}")]
    Hypothesis(String),
    #[error("unknown {kind} {name:?}")]
    UnknownName { kind: &'static str, name: String },
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
}

/// One graph's invariants and property flags.
///
/// CSV columns, in order: `id,n,max_degree,min_degree,alpha,beta,z,
/// connected,claw_free,cubic_or_less,is_k4,is_tree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantRow {
    pub id: String,
    pub n: usize,
    pub max_degree: usize,
    pub min_degree: usize,
    pub alpha: usize,
    pub beta: usize,
    pub z: usize,
    pub connected: bool,
    pub claw_free: bool,
    pub cubic_or_less: bool,
    pub is_k4: bool,
    pub is_tree: bool,
}

impl InvariantRow {
    pub const CSV_HEADER: &'static str =
        "id,n,max_degree,min_degree,alpha,beta,z,connected,claw_free,cubic_or_less,is_k4,is_tree";

    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{}",
            self.id,
            self.n,
            self.max_degree,
            self.min_degree,
            self.alpha,
            self.beta,
            self.z,
            self.connected,
            self.claw_free,
            self.cubic_or_less,
            self.is_k4,
            self.is_tree
        )
    }
}

/// Computes every field with the exact solvers, charging one shared budget.
pub fn compute_invariants(g: &Graph, id: &str, budget: &Budget) -> Result<InvariantRow, BudgetExceeded> {
    let alpha = cover::independence_number(g, budget)?;
    let z = forcing::zero_forcing_number(g, budget)?.z;
    Ok(InvariantRow {
        id: id.to_string(),
        n: g.n(),
        max_degree: g.max_degree(),
        min_degree: g.min_degree(),
        alpha,
        beta: g.n() - alpha,
        z,
        connected: g.is_connected(),
        claw_free: g.is_claw_free(),
        cubic_or_less: g.max_degree() <= 3,
        is_k4: g.is_k4(),
        is_tree: g.is_tree(),
    })
}

/// A row that could not be computed within budget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Unavailable {
    pub id: String,
    pub reason: BudgetExceeded,
}

/// Computes rows in parallel, each graph with its own budget of
/// `budget_limit` steps. Output order matches input order.
pub fn compute_rows(graphs: &[(String, Graph)], budget_limit: u64) -> Vec<Result<InvariantRow, Unavailable>> {
    graphs
        .par_iter()
        .map(|(id, g)| {
            compute_invariants(g, id, &Budget::new(budget_limit)).map_err(|reason| Unavailable {
                id: id.clone(),
                reason,
            })
        })
        .collect()
}

/// Named hypothesis classes. All of them require `n ≥ 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Hypothesis {
    Connected,
    ClawFreeConnected,
    /// Connected with `Δ ≥ 3`.
    ConnectedMaxDegree3Plus,
    /// Connected with `Δ ≤ 3` and not `K₄`.
    Subcubic,
}

impl Hypothesis {
    pub const ALL: [Hypothesis; 4] = [
        Hypothesis::Connected,
        Hypothesis::ClawFreeConnected,
        Hypothesis::ConnectedMaxDegree3Plus,
        Hypothesis::Subcubic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Hypothesis::Connected => "connected",
            Hypothesis::ClawFreeConnected => "clawfree-connected",
            Hypothesis::ConnectedMaxDegree3Plus => "connected-maxdeg3plus",
            Hypothesis::Subcubic => "subcubic",
        }
    }

    pub fn holds(self, row: &InvariantRow) -> bool {
        let base = row.connected && row.n >= 2;
        base && match self {
            Hypothesis::Connected => true,
            Hypothesis::ClawFreeConnected => row.claw_free,
            Hypothesis::ConnectedMaxDegree3Plus => row.max_degree >= 3,
            Hypothesis::Subcubic => row.cubic_or_less && !row.is_k4,
        }
    }
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Hypothesis {
    type Err = ConjectureError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Hypothesis::ALL
            .into_iter()
            .find(|h| h.name() == s)
            .ok_or_else(|| ConjectureError::UnknownName {
                kind: "hypothesis",
                name: s.to_string(),
            })
    }
}

/// Integer invariants available as either side of an inequality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Invariant {
    N,
    MaxDegree,
    MinDegree,
    Alpha,
    Beta,
    Z,
}

impl Invariant {
    pub const ALL: [Invariant; 6] = [
        Invariant::N,
        Invariant::MaxDegree,
        Invariant::MinDegree,
        Invariant::Alpha,
        Invariant::Beta,
        Invariant::Z,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Invariant::N => "n",
            Invariant::MaxDegree => "maxdeg",
            Invariant::MinDegree => "mindeg",
            Invariant::Alpha => "alpha",
            Invariant::Beta => "beta",
            Invariant::Z => "z",
        }
    }

    pub fn value(self, row: &InvariantRow) -> usize {
        match self {
            Invariant::N => row.n,
            Invariant::MaxDegree => row.max_degree,
            Invariant::MinDegree => row.min_degree,
            Invariant::Alpha => row.alpha,
            Invariant::Beta => row.beta,
            Invariant::Z => row.z,
        }
    }
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Invariant {
    type Err = ConjectureError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Invariant::ALL
            .into_iter()
            .find(|i| i.name() == s)
            .ok_or_else(|| ConjectureError::UnknownName {
                kind: "invariant",
                name: s.to_string(),
            })
    }
}
