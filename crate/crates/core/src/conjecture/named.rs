//! The named inequalities, checked over an invariant table.

use std::fmt;

use super::{Hypothesis, InvariantRow};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Statement {
    /// `Z ≤ β` for connected claw-free graphs.
    Theorem1,
    /// `Z ≤ (Δ−2)β + 1` for connected graphs with `Δ ≥ 3`.
    Theorem2,
    /// `Z ≤ β + 1` for connected graphs with `Δ = 3`.
    Corollary,
    /// `Z ≤ α + 1` for connected graphs with `Δ ≤ 3` other than `K₄` (open).
    ConjectureAlpha,
    /// `Z ≤ β` over all connected graphs; expected to fail, reported for
    /// information only.
    ConnectedZBeta,
}

impl Statement {
    pub const ALL: [Statement; 5] = [
        Statement::Theorem1,
        Statement::Theorem2,
        Statement::Corollary,
        Statement::ConjectureAlpha,
        Statement::ConnectedZBeta,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Statement::Theorem1 => "theorem1",
            Statement::Theorem2 => "theorem2",
            Statement::Corollary => "corollary",
            Statement::ConjectureAlpha => "conjecture-alpha",
            Statement::ConnectedZBeta => "connected-z-beta",
        }
    }

    pub fn formula(self) -> &'static str {
        match self {
            Statement::Theorem1 | Statement::ConnectedZBeta => "z <= beta",
            Statement::Theorem2 => "z <= (maxdeg-2)*beta+1",
            Statement::Corollary => "z <= beta+1",
            Statement::ConjectureAlpha => "z <= alpha+1",
        }
    }

    pub fn class(self) -> &'static str {
        match self {
            Statement::Theorem1 => Hypothesis::ClawFreeConnected.name(),
            Statement::Theorem2 => Hypothesis::ConnectedMaxDegree3Plus.name(),
            Statement::Corollary => "connected-maxdeg3",
            Statement::ConjectureAlpha => Hypothesis::Subcubic.name(),
            Statement::ConnectedZBeta => Hypothesis::Connected.name(),
        }
    }

    /// Proven statements; a violation signals a bug.
    pub fn is_theorem(self) -> bool {
        matches!(self, Statement::Theorem1 | Statement::Theorem2 | Statement::Corollary)
    }

    pub fn applies(self, r: &InvariantRow) -> bool {
        match self {
            Statement::Theorem1 => Hypothesis::ClawFreeConnected.holds(r),
            Statement::Theorem2 => Hypothesis::ConnectedMaxDegree3Plus.holds(r),
            Statement::Corollary => Hypothesis::Connected.holds(r) && r.max_degree == 3,
            Statement::ConjectureAlpha => Hypothesis::Subcubic.holds(r),
            Statement::ConnectedZBeta => Hypothesis::Connected.holds(r),
        }
    }

    pub fn bound(self, r: &InvariantRow) -> usize {
        match self {
            Statement::Theorem1 | Statement::ConnectedZBeta => r.beta,
            Statement::Theorem2 => (r.max_degree - 2) * r.beta + 1,
            Statement::Corollary => r.beta + 1,
            Statement::ConjectureAlpha => r.alpha + 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StatementResult {
    pub statement: Statement,
    pub support: usize,
    /// Ids of rows attaining equality, in corpus order.
    pub equality: Vec<String>,
    /// How many equality rows are trees.
    pub equality_trees: usize,
    /// Ids of violating rows, in corpus order.
    pub violations: Vec<String>,
}

impl StatementResult {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedReport {
    pub results: Vec<StatementResult>,
}

impl NamedReport {
    pub fn get(&self, s: Statement) -> &StatementResult {
        self.results
            .iter()
            .find(|r| r.statement == s)
            .expect("every statement is checked")
    }

    /// A proven statement failed somewhere in the corpus.
    pub fn theorem_violation(&self) -> bool {
        self.results
            .iter()
            .any(|r| r.statement.is_theorem() && !r.holds())
    }

    pub fn alpha_counterexamples(&self) -> &[String] {
        &self.get(Statement::ConjectureAlpha).violations
    }
}

impl fmt::Display for NamedReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for w in self.alpha_counterexamples() {
            writeln!(f, "HEADLINE: counterexample to z <= alpha+1 (subcubic, not K4): {w}")?;
        }
        for r in &self.results {
            let s = r.statement;
            let verdict = if r.holds() { "holds" } else { "refuted" };
            writeln!(
                f,
                "{}: {} over {}: {} support={} equality={}",
                s.name(),
                s.formula(),
                s.class(),
                verdict,
                r.support,
                r.equality.len()
            )?;
            if s == Statement::Theorem2 {
                writeln!(
                    f,
                    "  equality trees={} non-trees={}",
                    r.equality_trees,
                    r.equality.len() - r.equality_trees
                )?;
            }
            if !r.equality.is_empty() {
                writeln!(f, "  equality: {}", r.equality.join(" "))?;
            }
            if !r.violations.is_empty() {
                writeln!(f, "  violations: {}", r.violations.join(" "))?;
            }
        }
        Ok(())
    }
}

pub fn check_named_statements(rows: &[InvariantRow]) -> NamedReport {
    let results = Statement::ALL
        .into_iter()
        .map(|statement| {
            let mut res = StatementResult {
                statement,
                support: 0,
                equality: Vec::new(),
                equality_trees: 0,
                violations: Vec::new(),
            };
            for r in rows.iter().filter(|r| statement.applies(r)) {
                res.support += 1;
                let bound = statement.bound(r);
                if r.z == bound {
                    res.equality.push(r.id.clone());
                    res.equality_trees += usize::from(r.is_tree);
                } else if r.z > bound {
                    res.violations.push(r.id.clone());
                }
            }
            res
        })
        .collect();
    NamedReport { results }
}
