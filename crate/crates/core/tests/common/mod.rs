//! Brute-force oracles sharing nothing with the library algorithms beyond
//! the `Graph` accessors.

#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use zfcover::Graph;

pub fn bits_of(mask: u64) -> Vec<usize> {
    (0..64).filter(|&i| mask >> i & 1 == 1).collect()
}

/// Colors repeatedly until no blue vertex has exactly one white neighbor.
pub fn oracle_closure(g: &Graph, initial: &[usize]) -> Vec<bool> {
    let mut blue = vec![false; g.n()];
    for &v in initial {
        blue[v] = true;
    }
    loop {
        let mut changed = false;
        for u in 0..g.n() {
            if !blue[u] {
                continue;
            }
            let white: Vec<usize> = (0..g.n()).filter(|&w| g.has_edge(u, w) && !blue[w]).collect();
            if white.len() == 1 {
                blue[white[0]] = true;
                changed = true;
            }
        }
        if !changed {
            return blue;
        }
    }
}

pub fn oracle_is_forcing(g: &Graph, set: &[usize]) -> bool {
    oracle_closure(g, set).iter().all(|&b| b)
}

/// Minimum zero forcing set size over all `2^n` subsets.
pub fn oracle_z(g: &Graph) -> usize {
    assert!(g.n() <= 20);
    (0u64..1 << g.n())
        .filter(|&m| oracle_is_forcing(g, &bits_of(m)))
        .map(|m| m.count_ones() as usize)
        .min()
        .expect("the full vertex set forces")
}

pub fn oracle_alpha(g: &Graph) -> usize {
    assert!(g.n() <= 20);
    (0u64..1 << g.n())
        .filter(|&m| {
            let s = bits_of(m);
            s.iter().all(|&u| s.iter().all(|&v| !g.has_edge(u, v)))
        })
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Looks for an induced `K_{1,3}` among all 4-vertex subsets.
pub fn oracle_has_claw(g: &Graph) -> bool {
    let n = g.n();
    for c in 0..n {
        for a in 0..n {
            for b in a + 1..n {
                for d in b + 1..n {
                    if [a, b, d].contains(&c) {
                        continue;
                    }
                    let spokes = g.has_edge(c, a) && g.has_edge(c, b) && g.has_edge(c, d);
                    let independent = !g.has_edge(a, b) && !g.has_edge(a, d) && !g.has_edge(b, d);
                    if spokes && independent {
                        return true;
                    }
                }
            }
        }
    }
    false
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::from_edges(n, edges).unwrap()
}

pub fn random_connected_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    loop {
        let p = rng.gen_range(0.3..0.9);
        let g = random_graph(rng, n, p);
        if g.is_connected() {
            return g;
        }
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
