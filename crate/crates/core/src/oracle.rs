//! Brute-force chromatic number, kept independent of the formulation and the
//! solver so it can serve as ground truth for both.

use crate::graph::{Coloring, Graph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult {
    pub chromatic_number: usize,
    pub witness: Coloring,
}

/// A proper coloring with at most `k` colors, if one exists.
///
/// Vertices are colored in order of decreasing degree (ties by index). A
/// vertex may take any color already opened, or open exactly one new color.
/// This loses no solutions: any coloring can be relabeled so that colors
/// appear in order of first use along the vertex order, and that relabeled
/// coloring is reached by this search.
pub fn is_k_colorable(g: &Graph, k: usize) -> Option<Coloring> {
    let n = g.n();
    if n == 0 {
        return Some(Coloring::new(Vec::new()));
    }
    if k == 0 {
        return None;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut colors = vec![usize::MAX; n];
    if backtrack(g, k, &order, 0, 0, &mut colors) {
        Some(Coloring::new(colors))
    } else {
        None
    }
}

fn backtrack(g: &Graph, k: usize, order: &[usize], pos: usize, used: usize, colors: &mut [usize]) -> bool {
    let Some(&v) = order.get(pos) else { return true };
    for c in 0..k.min(used + 1) {
        if g.neighbors(v).any(|u| colors[u] == c) {
            continue;
        }
        colors[v] = c;
        if backtrack(g, k, order, pos + 1, used.max(c + 1), colors) {
            return true;
        }
    }
    colors[v] = usize::MAX;
    false
}

/// Smallest `k` for which [`is_k_colorable`] succeeds, starting from the
/// greedy clique size.
pub fn chromatic_number(g: &Graph) -> OracleResult {
    let mut k = g.greedy_clique().len();
    loop {
        if let Some(witness) = is_k_colorable(g, k) {
            return OracleResult { chromatic_number: k, witness };
        }
        k += 1;
    }
}
