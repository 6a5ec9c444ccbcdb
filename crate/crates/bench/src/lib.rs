//! Fixed instances shared by the criterion benchmarks.

use pair014_core::{gen_gnp, Graph};

/// The five G(30, 0.9) instances used for the dense-graph timing check.
pub fn dense_30() -> Vec<Graph> {
    (0..5).map(|seed| gen_gnp(30, 0.9, seed).expect("valid probability")).collect()
}

pub fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    gen_gnp(n, p, seed).expect("valid probability")
}
