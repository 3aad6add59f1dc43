//! Simple undirected graphs on at most [`MAX_VERTICES`] vertices.
//!
//! A [`Graph`] is immutable once built. Neighborhoods are stored as
//! [`VertexSet`] bitmasks so that the forcing and covering kernels can work
//! with word-level operations.

mod edge_list;
mod graph6;

pub use edge_list::parse_edge_list;
pub use graph6::{parse_graph6, serialize_graph6};

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

use crate::vertex_set::{VertexSet, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },
    #[error("edge list parse error on line {line}: {reason}")]
    EdgeList { line: usize, reason: String },
    #[error("graph has {0} vertices, capacity is {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("invalid edge ({0}, {1})")]
    InvalidEdge(usize, usize),
}

/// An induced `K_{1,3}`: `center` adjacent to three pairwise nonadjacent `leaves`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Claw {
    pub center: usize,
    pub leaves: [usize; 3],
}

impl fmt::Display for Claw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.leaves;
        write!(f, "center {} with leaves {{{a}, {b}, {c}}}", self.center)
    }
}

/// A finite simple undirected graph on vertices `0..n`.
#[derive(Clone)]
pub struct Graph {
    adj: Vec<VertexSet>,
    label: Option<String>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate and reversed edges are merged.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut adj = vec![VertexSet::EMPTY; n];
        for (u, v) in edges {
            if u == v || u >= n || v >= n {
                return Err(GraphError::InvalidEdge(u, v));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { adj, label: None })
    }

    /// Builds a graph from neighbor sets, checking symmetry and irreflexivity.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Graph, GraphError> {
        let n = adj.len();
        if n == 0 {
            return Err(GraphError::Empty);
        }
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let all = VertexSet::full(n);
        for (v, &nb) in adj.iter().enumerate() {
            if nb.contains(v) || !nb.is_subset(all) {
                return Err(GraphError::InvalidEdge(v, v));
            }
            for u in nb {
                if !adj[u].contains(v) {
                    return Err(GraphError::InvalidEdge(v, u));
                }
            }
        }
        Ok(Graph { adj, label: None })
    }

    pub(crate) fn from_adjacency_unchecked(adj: Vec<VertexSet>) -> Graph {
        debug_assert!(Graph::from_adjacency(adj.clone()).is_ok());
        Graph { adj, label: None }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Graph {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        Graph::from_edges(n, []).expect("vertex count within capacity")
    }

    pub fn complete(n: usize) -> Graph {
        let all = VertexSet::full(n);
        Graph::from_adjacency_unchecked((0..n).map(|v| all.without(v)).collect())
    }

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("valid path")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).expect("valid cycle")
    }

    /// `K_{a,b}` with the `a`-side on `0..a`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
        Graph::from_edges(a + b, edges).expect("valid complete bipartite graph")
    }

    /// The star `K_{1,k}` with center 0.
    pub fn star(k: usize) -> Graph {
        Graph::complete_bipartite(1, k)
    }

    /// Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`.
    pub fn petersen() -> Graph {
        let mut edges = Vec::with_capacity(15);
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, edges).expect("valid Petersen graph")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn adjacency(&self) -> &[VertexSet] {
        &self.adj
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.adj[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Every vertex is reachable from vertex 0.
    pub fn is_connected(&self) -> bool {
        self.component_of(0) == self.vertices()
    }

    /// Vertices reachable from `start`.
    pub fn component_of(&self, start: usize) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for u in self.adj[v].difference(seen) {
                seen.insert(u);
                queue.push_back(u);
            }
        }
        seen
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edge_count() + 1 == self.n()
    }

    /// `true` when `s` contains no edge.
    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v].is_disjoint(s))
    }

    /// `true` when every edge has an endpoint in `s`.
    pub fn is_vertex_cover(&self, s: VertexSet) -> bool {
        self.is_independent(self.vertices().difference(s))
    }

    /// The lexicographically first induced claw `(center, a, b, c)`, if any.
    pub fn find_claw(&self) -> Option<Claw> {
        for v in 0..self.n() {
            let nb = self.adj[v];
            for a in nb {
                let rest_a = nb.difference(self.adj[a]);
                for b in rest_a.iter().filter(|&b| b > a) {
                    let rest_b = rest_a.difference(self.adj[b]);
                    if let Some(c) = rest_b.iter().find(|&c| c > b) {
                        return Some(Claw {
                            center: v,
                            leaves: [a, b, c],
                        });
                    }
                }
            }
        }
        None
    }

    pub fn is_claw_free(&self) -> bool {
        self.find_claw().is_none()
    }

    /// Returns `true` iff this graph is `K_4` (exactly 4 vertices, all adjacent).
    pub fn is_k4(&self) -> bool {
        self.n() == 4 && self.edge_count() == 6
    }

    /// Degree sequence in vertex order.
    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n()).map(|v| self.degree(v)).collect()
    }
}

/// Two graphs are equal when they have the same vertex count and edge set.
/// Labels are ignored.
impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .field("label", &self.label)
            .finish()
    }
}
