//! Maximum independent sets, minimum vertex covers, and the classification
//! of cover vertices by their neighbors in the independent complement.

use thiserror::Error;

use crate::budget::{Budget, BudgetExceeded};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoverError {
    #[error("edge ({0}, {1}) has no endpoint in the cover")]
    NotACover(usize, usize),
    #[error("cover vertex {0} has no neighbor outside the cover, so the cover is not minimum")]
    NotMinimal(usize),
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
}

/// A vertex cover `C`, its independent complement `X`, and the cover
/// vertices grouped by how many of their `X`-neighbors are counted.
///
/// `class3` holds vertices with three or more counted neighbors. Cover
/// vertices with none are in no class (see [`CoverPartition::unclassified`]).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoverPartition {
    pub cover: VertexSet,
    pub independent: VertexSet,
    pub class1: VertexSet,
    pub class2: VertexSet,
    pub class3: VertexSet,
}

impl CoverPartition {
    pub fn unclassified(&self) -> VertexSet {
        self.cover
            .difference(self.class1)
            .difference(self.class2)
            .difference(self.class3)
    }

    pub(crate) fn from_counts(
        cover: VertexSet,
        independent: VertexSet,
        mut count: impl FnMut(usize) -> usize,
    ) -> Self {
        let mut p = CoverPartition {
            cover,
            independent,
            class1: VertexSet::EMPTY,
            class2: VertexSet::EMPTY,
            class3: VertexSet::EMPTY,
        };
        for v in cover {
            match count(v) {
                0 => {}
                1 => p.class1.insert(v),
                2 => p.class2.insert(v),
                _ => p.class3.insert(v),
            }
        }
        p
    }
}

/// Minimum vertex cover.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VertexCover {
    pub beta: usize,
    pub cover: VertexSet,
}

/// Upper bound on the independence number of `G[cand]`: the number of
/// cliques in a greedy clique partition.
fn clique_cover_bound(g: &Graph, mut cand: VertexSet) -> usize {
    let mut cliques = 0;
    while let Some(v) = cand.first() {
        cand.remove(v);
        let mut common = g.neighbors(v).intersection(cand);
        while let Some(u) = common.first() {
            cand.remove(u);
            common = common.intersection(g.neighbors(u));
        }
        cliques += 1;
    }
    cliques
}

/// Branch and bound for `α(G[cand])`, branching on a maximum-degree vertex.
/// Returns `None` when no independent set larger than `floor` exists.
fn alpha_above(
    g: &Graph,
    cand: VertexSet,
    floor: usize,
    budget: &Budget,
) -> Result<Option<usize>, BudgetExceeded> {
    let mut best = floor;
    let mut found = false;
    branch(g, cand, 0, &mut best, &mut found, budget)?;
    Ok(found.then_some(best))
}

fn branch(
    g: &Graph,
    mut cand: VertexSet,
    mut size: usize,
    best: &mut usize,
    found: &mut bool,
    budget: &Budget,
) -> Result<(), BudgetExceeded> {
    budget.charge()?;
    // vertices with at most one neighbor in cand can always be taken
    loop {
        let low = cand
            .iter()
            .find(|&v| g.neighbors(v).intersection(cand).len() <= 1);
        match low {
            Some(v) => {
                size += 1;
                cand = cand.difference(g.closed_neighborhood(v));
            }
            None => break,
        }
    }
    if cand.is_empty() {
        if size > *best {
            *best = size;
            *found = true;
        }
        return Ok(());
    }
    if size + clique_cover_bound(g, cand) <= *best {
        return Ok(());
    }
    let v = cand
        .iter()
        .max_by_key(|&v| (g.neighbors(v).intersection(cand).len(), std::cmp::Reverse(v)))
        .expect("nonempty candidate set");
    branch(g, cand.difference(g.closed_neighborhood(v)), size + 1, best, found, budget)?;
    branch(g, cand.without(v), size, best, found, budget)
}

/// Independence number of `G[cand]`.
fn alpha_of(g: &Graph, cand: VertexSet, budget: &Budget) -> Result<usize, BudgetExceeded> {
    Ok(alpha_above(g, cand, 0, budget)?.unwrap_or(0))
}

/// A maximum independent set; the lexicographically least one.
///
/// Computes `α` by branch and bound, then builds the set greedily in vertex
/// order, keeping a vertex whenever the remaining graph can still complete an
/// independent set of size `α`.
pub fn max_independent_set(g: &Graph, budget: &Budget) -> Result<VertexSet, BudgetExceeded> {
    let alpha = alpha_of(g, g.vertices(), budget)?;
    let mut chosen = VertexSet::EMPTY;
    let mut cand = g.vertices();
    for v in 0..g.n() {
        if !cand.contains(v) {
            continue;
        }
        let need = alpha - chosen.len() - 1;
        let rest = cand.difference(g.closed_neighborhood(v));
        let fits = need == 0 || alpha_above(g, rest, need - 1, budget)?.is_some_and(|a| a >= need);
        if fits {
            chosen.insert(v);
            cand = rest;
            if chosen.len() == alpha {
                break;
            }
        } else {
            cand.remove(v);
        }
    }
    debug_assert_eq!(chosen.len(), alpha);
    debug_assert!(g.is_independent(chosen));
    Ok(chosen)
}

pub fn independence_number(g: &Graph, budget: &Budget) -> Result<usize, BudgetExceeded> {
    alpha_of(g, g.vertices(), budget)
}

/// `β = n − α`, with the cover taken as the complement of
/// [`max_independent_set`].
pub fn vertex_cover_number(g: &Graph, budget: &Budget) -> Result<VertexCover, BudgetExceeded> {
    let independent = max_independent_set(g, budget)?;
    let cover = g.vertices().difference(independent);
    Ok(VertexCover {
        beta: cover.len(),
        cover,
    })
}

/// Classifies cover vertices by their number of neighbors in `X = V ∖ cover`.
pub fn classify_by_x(g: &Graph, cover: VertexSet) -> Result<CoverPartition, CoverError> {
    let cover = cover.intersection(g.vertices());
    if let Some((u, v)) = g
        .edges()
        .find(|&(u, v)| !cover.contains(u) && !cover.contains(v))
    {
        return Err(CoverError::NotACover(u, v));
    }
    let independent = g.vertices().difference(cover);
    Ok(CoverPartition::from_counts(cover, independent, |v| {
        g.neighbors(v).intersection(independent).len()
    }))
}
