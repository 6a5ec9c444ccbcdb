//! Simple undirected graphs, colorings, and the classic bounds the solver
//! seeds itself with.

use std::collections::BTreeSet;
use std::fmt;

use fixedbitset::FixedBitSet;
use crate::error::{Error, Result};
use crate::Rational;

/// Simple undirected graph on vertices `0..n`.
///
/// Edges are stored once as `(u, v)` with `u < v`, sorted; adjacency is kept
/// as one bitset per vertex for constant-time queries.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<FixedBitSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph { n, edges: Vec::new(), adj: vec![FixedBitSet::with_capacity(n); n] }
    }

    pub fn complete(n: usize) -> Self {
        let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::from_edges(n, pairs).expect("complete graph edges are valid")
    }

    /// Builds a graph from an edge list. Orientation and duplicates are
    /// ignored; self-loops and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::InvalidVertex { vertex: x, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop { line: 0, vertex: a });
            }
            set.insert((a.min(b), a.max(b)));
        }
        let mut g = Graph::empty(n);
        for &(u, v) in &set {
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        g.edges = set.into_iter().collect();
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges as `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].ones()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    /// Neighbor set of `v` as a bitset over `0..n`.
    pub fn adjacency(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn adjacency_rows(&self) -> &[FixedBitSet] {
        &self.adj
    }

    /// Number of unordered vertex pairs, `C(n, 2)`.
    pub fn num_pairs(&self) -> usize {
        self.n * self.n.saturating_sub(1) / 2
    }

    /// Edge density `|E| / C(n, 2)` as an exact fraction.
    pub fn density(&self) -> Result<Rational> {
        if self.n < 2 {
            return Err(Error::TooFewVertices { n: self.n, required: 2 });
        }
        Ok(Rational::new(self.num_edges() as i64, self.num_pairs() as i64))
    }

    /// Graph whose edges are exactly the non-edges of `self`.
    pub fn complement(&self) -> Graph {
        let pairs = (0..self.n)
            .flat_map(|u| (u + 1..self.n).map(move |v| (u, v)))
            .filter(|&(u, v)| !self.has_edge(u, v));
        Graph::from_edges(self.n, pairs).expect("complement edges are valid")
    }

    /// Greedy DSATUR coloring.
    ///
    /// Picks the uncolored vertex with the most distinct neighbor colors,
    /// breaking ties by larger degree and then lower index, and gives it the
    /// lowest color not used by its neighbors.
    pub fn dsatur_coloring(&self) -> Coloring {
        let n = self.n;
        let mut colors: Vec<Option<usize>> = vec![None; n];
        let mut seen: Vec<FixedBitSet> = vec![FixedBitSet::with_capacity(n); n];
        let degree: Vec<usize> = (0..n).map(|v| self.degree(v)).collect();
        for _ in 0..n {
            let v = (0..n)
                .filter(|&v| colors[v].is_none())
                .max_by(|&a, &b| {
                    seen[a]
                        .count_ones(..)
                        .cmp(&seen[b].count_ones(..))
                        .then(degree[a].cmp(&degree[b]))
                        .then(b.cmp(&a))
                })
                .expect("an uncolored vertex remains");
            let c = (0..n).find(|&c| !seen[v].contains(c)).unwrap_or(0);
            colors[v] = Some(c);
            for u in self.adj[v].ones() {
                seen[u].insert(c);
            }
        }
        Coloring::new(colors.into_iter().map(|c| c.unwrap_or(0)).collect())
    }

    /// A clique found greedily; its size is a lower bound on the chromatic
    /// number.
    pub fn greedy_clique(&self) -> Vec<usize> {
        let mut all = FixedBitSet::with_capacity(self.n);
        all.insert_range(..);
        greedy_clique_within(&self.adj, &all)
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    pub fn is_independent(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| u != v && !self.has_edge(u, v)))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph").field("n", &self.n).field("edges", &self.edges).finish()
    }
}

/// Greedy clique restricted to `candidates` in the graph given by `adj`.
///
/// Seeds at the candidate with the largest degree inside the candidate set,
/// then repeatedly adds the remaining common neighbor with the largest
/// residual degree. Ties go to the lowest index.
pub fn greedy_clique_within(adj: &[FixedBitSet], candidates: &FixedBitSet) -> Vec<usize> {
    let mut clique = Vec::new();
    let mut cand = candidates.clone();
    while let Some(best) = argmax_residual(adj, &cand) {
        clique.push(best);
        cand.intersect_with(&adj[best]);
    }
    clique
}

fn argmax_residual(adj: &[FixedBitSet], cand: &FixedBitSet) -> Option<usize> {
    let mut best: Option<(usize, usize)> = None;
    for v in cand.ones() {
        let d = adj[v].intersection_count(cand);
        if best.is_none_or(|(_, bd)| d > bd) {
            best = Some((v, d));
        }
    }
    best.map(|(v, _)| v)
}

/// Assignment of a nonnegative color label to each vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coloring {
    colors: Vec<usize>,
}

impl Coloring {
    pub fn new(colors: Vec<usize>) -> Self {
        Coloring { colors }
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    /// Number of distinct labels in use.
    pub fn num_colors(&self) -> usize {
        self.colors.iter().collect::<BTreeSet<_>>().len()
    }

    /// Checks length and that no edge is monochromatic.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.colors.len() != g.n() {
            return Err(Error::ColoringLength { got: self.colors.len(), n: g.n() });
        }
        match g.edges().iter().find(|&&(u, v)| self.colors[u] == self.colors[v]) {
            Some(&(u, v)) => Err(Error::ImproperColoring { u, v }),
            None => Ok(()),
        }
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        self.validate(g).is_ok()
    }

    /// Relabels colors `0, 1, 2, ...` in order of first appearance.
    pub fn normalized(&self) -> Coloring {
        let mut map = std::collections::HashMap::new();
        let colors = self
            .colors
            .iter()
            .map(|c| {
                let next = map.len();
                *map.entry(*c).or_insert(next)
            })
            .collect();
        Coloring { colors }
    }

    /// Color classes in order of first appearance, each sorted ascending.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let norm = self.normalized();
        let mut classes = vec![Vec::new(); norm.num_colors()];
        for (v, &c) in norm.colors.iter().enumerate() {
            classes[c].push(v);
        }
        classes
    }
}
