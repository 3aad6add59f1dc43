//! Zero forcing and vertex cover computations on small graphs.

pub mod budget;
pub mod cli;
pub mod conjecture;
pub mod constructive;
pub mod cover;
pub mod enumerate;
pub mod families;
pub mod forcing;
pub mod graph;
pub mod scalar;
pub mod vertex_set;

pub use budget::{Budget, BudgetExceeded, DEFAULT_BUDGET};
pub use conjecture::{ConjectureRecord, Hypothesis, Invariant, InvariantRow};
pub use constructive::{ConstructionError, ConstructionReport};
pub use cover::{CoverPartition, VertexCover};
pub use families::FamilySpec;
pub use forcing::{ForcingTrace, ZeroForcing};
pub use graph::{parse_edge_list, parse_graph6, serialize_graph6, Claw, Graph, GraphError};
pub use scalar::ExactScalar;
pub use vertex_set::{VertexSet, MAX_VERTICES};

/// Exact rational with machine-word numerator and denominator.
pub type Rational = num_rational::Ratio<i64>;
/// Exact rational with arbitrary-precision parts.
pub type BigRational = num_rational::BigRational;
