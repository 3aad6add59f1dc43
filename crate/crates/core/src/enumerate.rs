//! Exhaustive generation of non-isomorphic small graphs.
//!
//! Graphs on `n` vertices are grown from those on `n − 1` by adding one
//! vertex with every possible neighborhood, and deduplicated by a canonical
//! certificate. The certificate is the largest upper-triangle adjacency
//! string over all labelings reachable by individualization and equitable
//! refinement, so isomorphic graphs get identical certificates.

use std::collections::HashSet;

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Largest order for which a certificate fits in a `u128`.
pub const MAX_CANONICAL_N: usize = 16;

type Cells = Vec<VertexSet>;

/// Splits cells by neighbor counts into other cells until stable.
fn refine(g: &Graph, cells: &mut Cells) {
    'outer: loop {
        for si in 0..cells.len() {
            let splitter = cells[si];
            for ci in 0..cells.len() {
                let cell = cells[ci];
                if cell.len() == 1 {
                    continue;
                }
                let mut groups: Vec<(usize, VertexSet)> = Vec::new();
                for v in cell {
                    let k = g.neighbors(v).intersection(splitter).len();
                    match groups.iter_mut().find(|(c, _)| *c == k) {
                        Some((_, s)) => s.insert(v),
                        None => groups.push((k, VertexSet::singleton(v))),
                    }
                }
                if groups.len() > 1 {
                    groups.sort_by_key(|(k, _)| *k);
                    cells.splice(ci..=ci, groups.into_iter().map(|(_, s)| s));
                    continue 'outer;
                }
            }
        }
        return;
    }
}

fn certificate(g: &Graph, order: &[usize]) -> u128 {
    let mut cert = 0u128;
    for j in 1..order.len() {
        for i in 0..j {
            cert = (cert << 1) | u128::from(g.has_edge(order[i], order[j]));
        }
    }
    cert
}

fn search(g: &Graph, mut cells: Cells, best: &mut Option<(u128, Vec<usize>)>) {
    refine(g, &mut cells);
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.iter().map(|c| c.first().expect("singleton")).collect();
        let cert = certificate(g, &order);
        if best.as_ref().is_none_or(|(b, _)| cert > *b) {
            *best = Some((cert, order));
        }
        return;
    };
    let cell = cells[target];
    let mut tried: Vec<usize> = Vec::new();
    for v in cell {
        // twins are interchangeable, so one representative per twin class suffices
        let twin_of_tried = tried.iter().any(|&u| {
            g.neighbors(u).without(v) == g.neighbors(v).without(u)
        });
        if twin_of_tried {
            continue;
        }
        tried.push(v);
        let mut next = cells.clone();
        next.splice(target..=target, [VertexSet::singleton(v), cell.without(v)]);
        search(g, next, best);
    }
}

/// Canonical certificate and the relabeling `order` (new index -> old vertex)
/// that achieves it.
///
/// # Panics
/// If the graph has more than [`MAX_CANONICAL_N`] vertices.
pub fn canonical_labeling(g: &Graph) -> (u128, Vec<usize>) {
    assert!(
        g.n() <= MAX_CANONICAL_N,
        "canonical labeling supports at most {MAX_CANONICAL_N} vertices"
    );
    let mut best = None;
    search(g, vec![g.vertices()], &mut best);
    best.expect("search visits at least one leaf")
}

/// Isomorphism-invariant certificate.
pub fn canonical_certificate(g: &Graph) -> u128 {
    canonical_labeling(g).0
}

/// The canonically relabeled copy of `g`.
pub fn canonical_form(g: &Graph) -> Graph {
    from_certificate(g.n(), canonical_labeling(g).0)
}

fn from_certificate(n: usize, cert: u128) -> Graph {
    let total = n * n.saturating_sub(1) / 2;
    let mut edges = Vec::new();
    let mut bit = total;
    for j in 1..n {
        for i in 0..j {
            bit -= 1;
            if (cert >> bit) & 1 == 1 {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, edges).expect("certificate encodes a simple graph")
}

/// All graphs on `n` vertices up to isomorphism, in canonical form, ordered
/// by certificate.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    assert!((1..=MAX_CANONICAL_N).contains(&n), "order must be in 1..={MAX_CANONICAL_N}");
    let mut layer: Vec<u128> = vec![0];
    for m in 2..=n {
        let mut seen: HashSet<u128> = HashSet::new();
        for &cert in &layer {
            let base = from_certificate(m - 1, cert);
            let mut adj: Vec<VertexSet> = base.adjacency().to_vec();
            adj.push(VertexSet::EMPTY);
            for mask in 0u128..(1u128 << (m - 1)) {
                let nb = VertexSet::from_bits(mask);
                let mut a = adj.clone();
                a[m - 1] = nb;
                for u in nb {
                    a[u].insert(m - 1);
                }
                let g = Graph::from_adjacency_unchecked(a);
                seen.insert(canonical_certificate(&g));
            }
        }
        layer = seen.into_iter().collect();
        layer.sort_unstable();
    }
    layer.into_iter().map(|c| from_certificate(n, c)).collect()
}

/// Connected graphs on `n` vertices up to isomorphism.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n).into_iter().filter(Graph::is_connected).collect()
}
