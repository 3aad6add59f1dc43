//! Generators for the extremal families of the two bounds, plus the join
//! and leaf-support-vertex-addition (LSVA) operations they are built from.
//!
//! Vertex numbering is fixed: original vertices keep their indices and new
//! vertices are appended in the order they are created.

use std::fmt;

use thiserror::Error;

use crate::graph::Graph;
use crate::vertex_set::MAX_VERTICES;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("invalid parameters: {0}")]
    Parameter(String),
}

fn param_err(msg: impl Into<String>) -> FamilyError {
    FamilyError::Parameter(msg.into())
}

fn check_capacity(n: usize) -> Result<(), FamilyError> {
    if n > MAX_VERTICES {
        return Err(param_err(format!("result would have {n} vertices, capacity is {MAX_VERTICES}")));
    }
    Ok(())
}

/// `K_n` with one pendant vertex on each of the first `p` clique vertices.
///
/// Layout: clique on `0..n`, pendant `n + j` attached to clique vertex `j`.
pub fn construction1(n: usize, p: usize) -> Result<Graph, FamilyError> {
    if n < 3 {
        return Err(param_err(format!("clique size {n} must be at least 3")));
    }
    if p > n - 1 {
        return Err(param_err(format!("{p} pendants exceeds clique size minus one ({})", n - 1)));
    }
    check_capacity(n + p)?;
    let mut edges: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    edges.extend((0..p).map(|j| (j, n + j)));
    Ok(Graph::from_edges(n + p, edges).expect("valid construction"))
}

/// Cycle `v_0 … v_{k−1}` plus cliques `K_{n_i}` whose vertices are all
/// adjacent to `v_i` and `v_{i+1 mod k}`.
///
/// Layout: cycle on `0..k`, then the cliques in order, each on consecutive
/// indices.
pub fn construction2(k: usize, sizes: &[usize]) -> Result<Graph, FamilyError> {
    if k < 3 {
        return Err(param_err(format!("cycle length {k} must be at least 3")));
    }
    if sizes.len() != k {
        return Err(param_err(format!("expected {k} clique sizes, got {}", sizes.len())));
    }
    if let Some(i) = sizes.iter().position(|&s| s == 0) {
        return Err(param_err(format!("clique {i} has size 0")));
    }
    let n = k + sizes.iter().sum::<usize>();
    check_capacity(n)?;
    let mut edges: Vec<(usize, usize)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    let mut next = k;
    for (i, &s) in sizes.iter().enumerate() {
        let members: Vec<usize> = (next..next + s).collect();
        for (a, &u) in members.iter().enumerate() {
            edges.push((u, i));
            edges.push((u, (i + 1) % k));
            for &v in &members[a + 1..] {
                edges.push((u, v));
            }
        }
        next += s;
    }
    Ok(Graph::from_edges(n, edges).expect("valid construction"))
}

/// `G ∨ H`: disjoint union plus every edge between the two sides. `G` keeps
/// indices `0..n(G)`, `H` is shifted by `n(G)`.
pub fn join(g: &Graph, h: &Graph) -> Result<Graph, FamilyError> {
    let a = g.n();
    check_capacity(a + h.n())?;
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    edges.extend(h.edges().map(|(u, v)| (u + a, v + a)));
    for u in 0..a {
        edges.extend((0..h.n()).map(|v| (u, v + a)));
    }
    Ok(Graph::from_edges(a + h.n(), edges).expect("valid join"))
}

fn attach_support_vertex(g: &Graph, v: usize, leaves: usize) -> Result<Graph, FamilyError> {
    let n = g.n();
    check_capacity(n + 1 + leaves)?;
    let w = n;
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    edges.push((v, w));
    edges.extend((1..=leaves).map(|j| (w, w + j)));
    Ok(Graph::from_edges(n + 1 + leaves, edges).expect("valid LSVA"))
}

/// `k`-LSVA: attach a new vertex `w` (index `n`) to `v`, then `k` new leaves
/// (indices `n+1..=n+k`) to `w`. Requires `d(v) ≤ k − 1`.
pub fn k_lsva(g: &Graph, v: usize, k: usize) -> Result<Graph, FamilyError> {
    if v >= g.n() {
        return Err(param_err(format!("vertex {v} out of range")));
    }
    if g.degree(v) + 1 > k {
        return Err(param_err(format!(
            "{k}-LSVA needs degree at most {} at vertex {v}, found {}",
            k.saturating_sub(1),
            g.degree(v)
        )));
    }
    attach_support_vertex(g, v, k)
}

/// `(Δ−1)`-LSVA at a vertex of degree at most `Δ − 1`, which keeps the
/// maximum degree at `Δ`. Applied to a graph with `Z = (Δ−2)β + 1`, the
/// result again attains equality, with `β` one larger.
pub fn max_degree_lsva(g: &Graph, v: usize) -> Result<Graph, FamilyError> {
    let delta = g.max_degree();
    if delta < 3 {
        return Err(param_err(format!("maximum degree {delta} is below 3")));
    }
    if v >= g.n() {
        return Err(param_err(format!("vertex {v} out of range")));
    }
    if g.degree(v) > delta - 1 {
        return Err(param_err(format!(
            "vertex {v} has degree {}, at most {} allowed",
            g.degree(v),
            delta - 1
        )));
    }
    attach_support_vertex(g, v, delta - 1)
}

/// Member of the tree family: `K_{1,k}` followed by `(k−1)`-LSVAs at the
/// listed vertices (indices refer to the graph at the time of application).
pub fn t_star(k: usize, ops: &[usize]) -> Result<Graph, FamilyError> {
    if k < 3 {
        return Err(param_err(format!("maximum degree parameter {k} must be at least 3")));
    }
    ops.iter().try_fold(Graph::star(k), |g, &v| max_degree_lsva(&g, v))
}

/// Member of the cubic-bound family: `K_{2,3}` followed by 2-LSVAs.
pub fn g_star(ops: &[usize]) -> Result<Graph, FamilyError> {
    ops.iter()
        .try_fold(Graph::complete_bipartite(2, 3), |g, &v| max_degree_lsva(&g, v))
}

/// Values a family member is known to attain.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Expected {
    pub z: usize,
    pub beta: usize,
}

/// A family member described by its construction parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Construction1 { clique: usize, pendants: usize },
    Construction2 { sizes: Vec<usize> },
    Join(Box<FamilySpec>, Box<FamilySpec>),
    Star { leaves: usize },
    /// `K_1` followed by `k`-LSVAs at the listed vertices.
    KLsvaChain { k: usize, ops: Vec<usize> },
    TStar { k: usize, ops: Vec<usize> },
    GStar { ops: Vec<usize> },
}

impl FamilySpec {
    pub fn kind(&self) -> &'static str {
        match self {
            FamilySpec::Construction1 { .. } => "construction1",
            FamilySpec::Construction2 { .. } => "construction2",
            FamilySpec::Join(..) => "join",
            FamilySpec::Star { .. } => "star",
            FamilySpec::KLsvaChain { .. } => "klsva",
            FamilySpec::TStar { .. } => "tstar",
            FamilySpec::GStar { .. } => "gstar",
        }
    }

    pub fn build(&self) -> Result<Graph, FamilyError> {
        let g = match self {
            FamilySpec::Construction1 { clique, pendants } => construction1(*clique, *pendants)?,
            FamilySpec::Construction2 { sizes } => construction2(sizes.len(), sizes)?,
            FamilySpec::Join(a, b) => join(&a.build()?, &b.build()?)?,
            FamilySpec::Star { leaves } => {
                if *leaves == 0 {
                    return Err(param_err("star needs at least one leaf"));
                }
                Graph::star(*leaves)
            }
            FamilySpec::KLsvaChain { k, ops } => ops
                .iter()
                .try_fold(Graph::empty(1), |g, &v| k_lsva(&g, v, *k))?,
            FamilySpec::TStar { k, ops } => t_star(*k, ops)?,
            FamilySpec::GStar { ops } => g_star(ops)?,
        };
        Ok(g.with_label(self.to_string()))
    }

    /// `(Z, β)` where the construction determines them.
    pub fn expected(&self) -> Option<Expected> {
        match self {
            FamilySpec::Construction1 { clique, .. } => Some(Expected {
                z: clique - 1,
                beta: clique - 1,
            }),
            FamilySpec::Construction2 { sizes } => {
                let s = sizes.iter().sum();
                Some(Expected { z: s, beta: s })
            }
            FamilySpec::Join(a, b) => {
                let (ea, eb) = (a.expected()?, b.expected()?);
                if ea.z != ea.beta || eb.z != eb.beta {
                    return None;
                }
                let (na, nb) = (a.build().ok()?.n(), b.build().ok()?.n());
                let alpha = (na - ea.beta).max(nb - eb.beta);
                let beta = na + nb - alpha;
                Some(Expected { z: beta, beta })
            }
            FamilySpec::Star { leaves } => Some(Expected {
                z: leaves.saturating_sub(1).max(1),
                beta: 1,
            }),
            FamilySpec::KLsvaChain { .. } => None,
            FamilySpec::TStar { k, ops } => {
                let beta = 1 + ops.len();
                Some(Expected {
                    z: (k - 2) * beta + 1,
                    beta,
                })
            }
            FamilySpec::GStar { ops } => {
                let beta = 2 + ops.len();
                Some(Expected { z: beta + 1, beta })
            }
        }
    }
}

fn join_list(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Construction1 { clique, pendants } => write!(f, "construction1({clique};{pendants})"),
            FamilySpec::Construction2 { sizes } => {
                write!(f, "construction2({};{})", sizes.len(), join_list(sizes))
            }
            FamilySpec::Join(a, b) => write!(f, "join({a};{b})"),
            FamilySpec::Star { leaves } => write!(f, "star({leaves})"),
            FamilySpec::KLsvaChain { k, ops } => write!(f, "klsva({k};{})", join_list(ops)),
            FamilySpec::TStar { k, ops } => write!(f, "tstar({k};{})", join_list(ops)),
            FamilySpec::GStar { ops } => write!(f, "gstar({})", join_list(ops)),
        }
    }
}
