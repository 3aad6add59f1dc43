//! Closed-form bounds and the join formula, checked against exact solvers.

use crate::budget::Budget;
use crate::cover;
use crate::families;
use crate::forcing;
use crate::graph::Graph;
use crate::scalar::ExactScalar;

use super::ConjectureError;

/// `((Δ−2)n − (Δ−δ) + 2) / (Δ−1)` for a connected graph, exactly.
/// `K₂` (the only connected graph with `Δ = 1`) gives 1.
pub fn caro_pepper_bound<S: ExactScalar>(g: &Graph) -> Result<S, ConjectureError> {
    if !g.is_connected() {
        return Err(ConjectureError::Hypothesis("graph is not connected".into()));
    }
    let delta = g.max_degree() as i64;
    let min = g.min_degree() as i64;
    match delta {
        0 => Err(ConjectureError::Hypothesis("maximum degree is 0".into())),
        1 => Ok(S::one()),
        _ => Ok(S::ratio((delta - 2) * g.n() as i64 - (delta - min) + 2, delta - 1)),
    }
}

/// Exact values for a join `G ∨ H` next to the two join theorems.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct JoinCheck {
    pub z_join: usize,
    /// `min{n(G)+Z(H), n(H)+Z(G)}`.
    pub formula: usize,
    pub beta_join: usize,
    /// `Z = β` holds for both operands.
    pub operands_tight: bool,
}

impl JoinCheck {
    pub fn formula_holds(&self) -> bool {
        self.z_join == self.formula
    }

    /// `Z(G∨H) = β(G∨H)`, or `None` when the operands are not both tight.
    pub fn equality_preserved(&self) -> Option<bool> {
        self.operands_tight.then_some(self.z_join == self.beta_join)
    }
}

pub fn check_join_theorem(g: &Graph, h: &Graph, budget: &Budget) -> Result<JoinCheck, ConjectureError> {
    let joined = families::join(g, h).map_err(|e| ConjectureError::Hypothesis(e.to_string()))?;
    let z = |x: &Graph| forcing::zero_forcing_number(x, budget).map(|r| r.z);
    let beta = |x: &Graph| cover::vertex_cover_number(x, budget).map(|r| r.beta);
    let (zg, zh) = (z(g)?, z(h)?);
    Ok(JoinCheck {
        z_join: z(&joined)?,
        formula: (g.n() + zh).min(h.n() + zg),
        beta_join: beta(&joined)?,
        operands_tight: zg == beta(g)? && zh == beta(h)?,
    })
}
