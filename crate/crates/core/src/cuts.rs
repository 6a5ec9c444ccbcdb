//! Independent-set cuts `sum_u x_uv <= |I_v| - 1`, where `|I_v|` is the size
//! of a largest independent set containing `v`.

use std::time::{Duration, Instant};

use fixedbitset::FixedBitSet;
use num_traits::One;

use crate::error::{Error, Result};
use crate::formulation::{LinearConstraint, PairVars, RowLabel, Sense, VarRef};
use crate::graph::Graph;
use crate::Rational;

/// Default branch-and-bound node budget per vertex.
pub const DEFAULT_NODE_BUDGET: u64 = 1_000_000;

/// Per-vertex `|I_v|` values and how they were obtained.
#[derive(Clone, Debug, PartialEq)]
pub struct CutReport {
    /// `|I_v|` when exact, otherwise a proved upper bound on it.
    pub sizes: Vec<usize>,
    pub exact_flags: Vec<bool>,
    pub preprocess_time: Duration,
}

impl CutReport {
    /// Runs [`max_independent_with`] for every vertex in index order.
    pub fn compute(g: &Graph, node_budget: u64) -> Self {
        let start = Instant::now();
        let (sizes, exact_flags) = (0..g.n()).map(|v| max_independent_with(g, v, node_budget)).unzip();
        CutReport { sizes, exact_flags, preprocess_time: start.elapsed() }
    }

    /// Report from externally supplied sizes (all marked inexact).
    pub fn from_sizes(sizes: Vec<usize>) -> Self {
        let exact_flags = vec![false; sizes.len()];
        CutReport { sizes, exact_flags, preprocess_time: Duration::ZERO }
    }

    pub fn all_exact(&self) -> bool {
        self.exact_flags.iter().all(|&e| e)
    }
}

/// Size of a maximum independent set of `g` that contains `v`.
///
/// Branch and bound over the non-neighbors of `v`: branch on the lowest
/// candidate (take it, then drop it), bound by a greedy clique cover of the
/// candidates, since an independent set meets each clique at most once. If
/// more than `node_budget` nodes are needed the search stops and returns the
/// largest bound among the abandoned subtrees (never below the true value)
/// with `exact = false`.
pub fn max_independent_with(g: &Graph, v: usize, node_budget: u64) -> (usize, bool) {
    let mut cand = g.adjacency(v).clone();
    cand.toggle_range(..);
    cand.set(v, false);
    let mut search = IndependentSearch {
        adj: g.adjacency_rows(),
        best: 1,
        nodes: 0,
        budget: node_budget.max(1),
        abandoned: 0,
    };
    search.expand(1, cand);
    if search.nodes <= search.budget && search.abandoned == 0 {
        (search.best, true)
    } else {
        (search.best.max(search.abandoned), false)
    }
}

struct IndependentSearch<'a> {
    adj: &'a [FixedBitSet],
    best: usize,
    nodes: u64,
    budget: u64,
    /// Largest bound of any subtree left unexplored.
    abandoned: usize,
}

impl IndependentSearch<'_> {
    fn expand(&mut self, size: usize, mut cand: FixedBitSet) {
        if self.nodes >= self.budget {
            let bound = size + self.clique_cover(&cand);
            self.abandoned = self.abandoned.max(bound);
            return;
        }
        self.nodes += 1;
        let Some(u) = cand.ones().next() else {
            self.best = self.best.max(size);
            return;
        };
        if size + self.clique_cover(&cand) <= self.best {
            return;
        }
        let mut take = cand.clone();
        take.difference_with(&self.adj[u]);
        take.set(u, false);
        self.expand(size + 1, take);
        cand.set(u, false);
        self.expand(size, cand);
    }

    /// Number of cliques in a greedy partition of `set` into cliques.
    fn clique_cover(&self, set: &FixedBitSet) -> usize {
        let mut rest = set.clone();
        let mut count = 0;
        while let Some(seed) = rest.ones().next() {
            count += 1;
            rest.set(seed, false);
            let mut common = rest.clone();
            common.intersect_with(&self.adj[seed]);
            while let Some(w) = common.ones().next() {
                rest.set(w, false);
                common.set(w, false);
                common.intersect_with(&self.adj[w]);
            }
        }
        count
    }
}

/// One row `sum_{u} x_uv <= sizes[v] - 1` per vertex with at least one pair
/// variable; vertices without pair variables give vacuous rows and are skipped.
pub fn build_simple_cuts(pairs: &PairVars, report: &CutReport) -> Result<Vec<LinearConstraint>> {
    if report.sizes.len() != pairs.n() {
        return Err(Error::DimensionMismatch { got: report.sizes.len(), expected: pairs.n() });
    }
    Ok((0..pairs.n())
        .filter(|&v| !pairs.incident(v).is_empty())
        .map(|v| LinearConstraint {
            label: RowLabel::Cut { v },
            terms: pairs.incident(v).iter().map(|&id| (VarRef::Pair(id), Rational::one())).collect(),
            sense: Sense::Le,
            rhs: Rational::from_integer(report.sizes[v].max(1) as i64 - 1),
        })
        .collect())
}
