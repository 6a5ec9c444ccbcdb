//! Exact branch and bound that branches directly on the pair decisions.
//!
//! A search node is a partial partition: vertices merged into the same color
//! class (`x_uv = 1` decisions), plus class pairs marked distinct
//! (`x_uv = 0`). Both are kept as a quotient graph whose vertices are the
//! classes and whose edges are original edges or distinctness decisions. A
//! node whose quotient is complete is a coloring with one color per class.

use std::time::{Duration, Instant};

use fixedbitset::FixedBitSet;

use crate::cuts::{CutReport, DEFAULT_NODE_BUDGET};
use crate::error::{Error, Result};
use crate::graph::{greedy_clique_within, Coloring, Graph};
use crate::Rational;

/// How the next undecided class pair is chosen.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum BranchRule {
    /// Pair with the most classes adjacent to both.
    #[default]
    CommonNeighbors,
    /// Pair with the most classes adjacent to neither of them.
    CommonNonNeighbors,
    /// Lexicographically first undecided pair.
    First,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SolveConfig {
    pub time_limit: Duration,
    pub node_limit: Option<u64>,
    pub use_cuts: bool,
    pub branching: BranchRule,
    /// Node budget per vertex for the `|I_v|` computation.
    pub cut_node_budget: u64,
}

impl Default for SolveConfig {
    fn default() -> Self {
        SolveConfig {
            time_limit: Duration::from_secs(7200),
            node_limit: None,
            use_cuts: false,
            branching: BranchRule::default(),
            cut_node_budget: DEFAULT_NODE_BUDGET,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolveStatus {
    Optimal,
    TimeLimit,
    NodeLimit,
}

impl SolveStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            SolveStatus::Optimal => "optimal",
            SolveStatus::TimeLimit => "time_limit",
            SolveStatus::NodeLimit => "node_limit",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SolveReport {
    pub lower_bound: usize,
    pub upper_bound: usize,
    /// Proper coloring with exactly `upper_bound` colors.
    pub incumbent: Coloring,
    /// `(upper_bound - lower_bound) / upper_bound`.
    pub gap: Rational,
    pub status: SolveStatus,
    /// Total wall time, preprocessing included.
    pub wall_time: Duration,
    pub nodes: u64,
    /// Time spent computing `|I_v|` for the cuts.
    pub preprocess_time: Duration,
    pub cut_report: Option<CutReport>,
}

/// Relative gap `(ub - lb) / ub`.
pub fn relative_gap(lb: usize, ub: usize) -> Result<Rational> {
    if ub < 1 || lb > ub {
        return Err(Error::InvalidBounds { lb: lb as u64, ub: ub as u64 });
    }
    Ok(Rational::new((ub - lb) as i64, ub as i64))
}

pub fn solve(g: &Graph, cfg: &SolveConfig) -> SolveReport {
    solve_with_observer(g, cfg, |_, _| {})
}

/// Like [`solve`], calling `observer(lower, upper)` whenever either bound changes.
pub fn solve_with_observer<F>(g: &Graph, cfg: &SolveConfig, mut observer: F) -> SolveReport
where
    F: FnMut(usize, usize),
{
    let start = Instant::now();
    let n = g.n();
    let cut_report = cfg.use_cuts.then(|| CutReport::compute(g, cfg.cut_node_budget));
    let preprocess_time = cut_report.as_ref().map_or(Duration::ZERO, |r| r.preprocess_time);

    let incumbent = g.dsatur_coloring();
    let upper = incumbent.num_colors();
    let root_lb = g.greedy_clique().len();
    let mut search = Search {
        cfg,
        deadline: start + cfg.time_limit,
        upper,
        incumbent,
        nodes: 0,
        stopped: None,
        open_lb: usize::MAX,
        root_lb,
        last_reported: None,
        observer: &mut observer,
    };
    search.emit(root_lb.min(upper), upper);
    if root_lb < upper {
        let root = Node::root(g, cut_report.as_ref());
        search.explore(root, root_lb);
    }

    let (lower, status) = match search.stopped {
        None => (search.upper, SolveStatus::Optimal),
        Some(status) => (search.open_lb.max(root_lb).min(search.upper), status),
    };
    search.emit(lower, search.upper);
    let Search { upper, incumbent, nodes, .. } = search;
    let gap = if n == 0 { Rational::from_integer(0) } else { relative_gap(lower, upper).expect("bounds ordered") };
    let status = if lower == upper { SolveStatus::Optimal } else { status };
    SolveReport {
        lower_bound: lower,
        upper_bound: upper,
        incumbent,
        gap,
        status,
        wall_time: start.elapsed(),
        nodes,
        preprocess_time,
        cut_report,
    }
}

/// Partial partition of the vertices into color classes. Class ids are the
/// smallest member vertex.
#[derive(Clone)]
struct Node {
    alive: FixedBitSet,
    /// Quotient adjacency over class ids, restricted to live classes.
    adj: Vec<FixedBitSet>,
    /// Class id of each vertex.
    class_of: Vec<usize>,
    size: Vec<usize>,
    /// Largest size the class may reach under the cuts.
    cap: Vec<usize>,
}

impl Node {
    fn root(g: &Graph, cuts: Option<&CutReport>) -> Node {
        let n = g.n();
        let mut alive = FixedBitSet::with_capacity(n);
        alive.insert_range(..);
        Node {
            alive,
            adj: g.adjacency_rows().to_vec(),
            class_of: (0..n).collect(),
            size: vec![1; n],
            cap: cuts.map_or(vec![n; n], |r| r.sizes.clone()),
        }
    }

    /// Puts class `b` into class `a`; `a < b` and the two must be non-adjacent.
    fn merge(&mut self, a: usize, b: usize) {
        let moved = std::mem::replace(&mut self.adj[b], FixedBitSet::with_capacity(0));
        for c in moved.ones() {
            self.adj[c].set(b, false);
            self.adj[c].insert(a);
        }
        self.adj[a].union_with(&moved);
        self.alive.set(b, false);
        for cls in self.class_of.iter_mut().filter(|c| **c == b) {
            *cls = a;
        }
        self.size[a] += self.size[b];
        self.cap[a] = self.cap[a].min(self.cap[b]);
    }

    fn separate(&mut self, a: usize, b: usize) {
        self.adj[a].insert(b);
        self.adj[b].insert(a);
    }

    fn can_merge(&self, a: usize, b: usize) -> bool {
        self.size[a] + self.size[b] <= self.cap[a].min(self.cap[b])
    }

    fn lower_bound(&self) -> usize {
        greedy_clique_within(&self.adj, &self.alive).len()
    }

    /// Next undecided (non-adjacent) class pair under `rule`, or `None` when
    /// the quotient is complete.
    fn branch_pair(&self, rule: BranchRule) -> Option<(usize, usize)> {
        let classes: Vec<usize> = self.alive.ones().collect();
        let mut best: Option<((usize, usize), usize)> = None;
        for (i, &a) in classes.iter().enumerate() {
            for &b in &classes[i + 1..] {
                if self.adj[a].contains(b) {
                    continue;
                }
                let score = match rule {
                    BranchRule::First => return Some((a, b)),
                    BranchRule::CommonNeighbors => self.adj[a].intersection_count(&self.adj[b]),
                    BranchRule::CommonNonNeighbors => {
                        classes.len() - 2 - self.adj[a].union_count(&self.adj[b])
                    }
                };
                if best.is_none_or(|(_, s)| score > s) {
                    best = Some(((a, b), score));
                }
            }
        }
        best.map(|(pair, _)| pair)
    }

    fn coloring(&self) -> Coloring {
        let mut label = vec![0; self.class_of.len()];
        for (k, c) in self.alive.ones().enumerate() {
            label[c] = k;
        }
        Coloring::new(self.class_of.iter().map(|&c| label[c]).collect())
    }
}

struct Search<'a, F> {
    cfg: &'a SolveConfig,
    deadline: Instant,
    upper: usize,
    incumbent: Coloring,
    nodes: u64,
    stopped: Option<SolveStatus>,
    /// Smallest lower bound among subtrees abandoned after a stop.
    open_lb: usize,
    root_lb: usize,
    last_reported: Option<(usize, usize)>,
    observer: &'a mut F,
}

impl<F: FnMut(usize, usize)> Search<'_, F> {
    fn emit(&mut self, lower: usize, upper: usize) {
        if self.last_reported != Some((lower, upper)) {
            self.last_reported = Some((lower, upper));
            (self.observer)(lower, upper);
        }
    }

    fn out_of_budget(&mut self) -> bool {
        if self.stopped.is_some() {
            return true;
        }
        if self.cfg.node_limit.is_some_and(|limit| self.nodes >= limit) {
            self.stopped = Some(SolveStatus::NodeLimit);
        } else if Instant::now() >= self.deadline {
            self.stopped = Some(SolveStatus::TimeLimit);
        }
        self.stopped.is_some()
    }

    fn explore(&mut self, mut node: Node, parent_lb: usize) {
        if self.out_of_budget() {
            self.open_lb = self.open_lb.min(parent_lb);
            return;
        }
        self.nodes += 1;
        let lb = parent_lb.max(node.lower_bound());
        if lb >= self.upper {
            return;
        }
        let Some((a, b)) = node.branch_pair(self.cfg.branching) else {
            // quotient is complete: one color per class
            let classes = node.alive.count_ones(..);
            if classes < self.upper {
                self.upper = classes;
                self.incumbent = node.coloring();
                self.emit(self.root_lb.min(classes), classes);
            }
            return;
        };
        if node.can_merge(a, b) {
            let mut same = node.clone();
            same.merge(a, b);
            self.explore(same, lb);
        }
        if self.stopped.is_some() {
            self.open_lb = self.open_lb.min(lb);
            return;
        }
        node.separate(a, b);
        self.explore(node, lb);
    }
}
