//! Counts connected graphs of each order attaining Z(G) = β(G).
//!
//! Usage: cargo run --release --example equality_census -- [max_n]

use zfcover::conjecture::compute_rows;
use zfcover::{enumerate, serialize_graph6, DEFAULT_BUDGET};

fn main() {
    let max_n: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("max_n must be an integer"))
        .unwrap_or(7);
    println!("n connected z=beta z<beta z>beta");
    for n in 2..=max_n {
        let graphs: Vec<_> = enumerate::connected_graphs(n)
            .into_iter()
            .map(|g| (serialize_graph6(&g), g))
            .collect();
        let (mut eq, mut below, mut above) = (0, 0, 0);
        for row in compute_rows(&graphs, DEFAULT_BUDGET) {
            let row = row.expect("small graphs fit the default budget");
            match row.z.cmp(&row.beta) {
                std::cmp::Ordering::Equal => eq += 1,
                std::cmp::Ordering::Less => below += 1,
                std::cmp::Ordering::Greater => above += 1,
            }
        }
        println!("{n} {} {eq} {below} {above}", graphs.len());
    }
}
