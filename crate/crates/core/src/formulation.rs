//! The pairwise MILP: pair variables, triangle inequalities, the tangent-line
//! linearization of the fractional objective, and the evaluators that tie
//! pair assignments back to colorings.
//!
//! Variable `x_uv` (for `u < v`, `{u, v}` not an edge) is 1 iff `u` and `v`
//! share a color. Edge pairs carry no variable; they are fixed to 0. For each
//! vertex a continuous `f_v` stands in for `1 / (1 + sum_u x_uv)` and is held
//! above every tangent `u_i(d) = -(d - i) / ((i + 1)(i + 2)) + 1 / (i + 1)`.

use std::fmt;

use fixedbitset::FixedBitSet;
use num_traits::{One, Zero};

use crate::cuts::{build_simple_cuts, CutReport, DEFAULT_NODE_BUDGET};
use crate::error::{Error, Result};
use crate::graph::{Coloring, Graph};
use crate::{BigRational, Rational};

const NO_VAR: u32 = u32::MAX;

/// Binary variable for the non-adjacent pair `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PairVar {
    pub u: usize,
    pub v: usize,
    pub id: usize,
}

/// All pair variables of a graph, indexed densely in lexicographic `(u, v)`
/// order, with constant-time lookup by endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairVars {
    n: usize,
    vars: Vec<PairVar>,
    index: Vec<u32>,
    incident: Vec<Vec<usize>>,
}

impl PairVars {
    /// One variable per non-adjacent unordered pair.
    pub fn build(g: &Graph) -> Self {
        let n = g.n();
        let mut vars = Vec::with_capacity(g.num_pairs() - g.num_edges());
        let mut index = vec![NO_VAR; n * n];
        let mut incident = vec![Vec::new(); n];
        for u in 0..n {
            for v in u + 1..n {
                if g.has_edge(u, v) {
                    continue;
                }
                let id = vars.len();
                vars.push(PairVar { u, v, id });
                index[u * n + v] = id as u32;
                index[v * n + u] = id as u32;
                incident[u].push(id);
                incident[v].push(id);
            }
        }
        PairVars { n, vars, index, incident }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn vars(&self) -> &[PairVar] {
        &self.vars
    }

    pub fn get(&self, id: usize) -> PairVar {
        self.vars[id]
    }

    /// Variable id of the pair `{u, v}`, in either order, if it exists.
    pub fn id(&self, u: usize, v: usize) -> Option<usize> {
        if u == v || u >= self.n || v >= self.n {
            return None;
        }
        match self.index[u * self.n + v] {
            NO_VAR => None,
            id => Some(id as usize),
        }
    }

    /// Ids of the variables incident to `v`, ascending.
    pub fn incident(&self, v: usize) -> &[usize] {
        &self.incident[v]
    }
}

/// Reference to a model column.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VarRef {
    Pair(usize),
    Fv(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sense {
    Le,
    Ge,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConstraintTag {
    Triangle,
    ObjectiveTangent,
    SimpleCut,
}

/// Stable row identity; its `Display` form is the exported row name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RowLabel {
    /// `k`-th triangle row, 0-based.
    Triangle { k: usize },
    /// Tangent `i` of vertex `v` (0-based internally, written 1-based).
    Tangent { v: usize, i: usize },
    Cut { v: usize },
}

impl RowLabel {
    pub fn tag(&self) -> ConstraintTag {
        match self {
            RowLabel::Triangle { .. } => ConstraintTag::Triangle,
            RowLabel::Tangent { .. } => ConstraintTag::ObjectiveTangent,
            RowLabel::Cut { .. } => ConstraintTag::SimpleCut,
        }
    }
}

impl fmt::Display for RowLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            RowLabel::Triangle { k } => write!(f, "t_{k}"),
            RowLabel::Tangent { v, i } => write!(f, "pw_{}_{i}", v + 1),
            RowLabel::Cut { v } => write!(f, "cut_{}", v + 1),
        }
    }
}

/// `sum terms (sense) rhs` with exact coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearConstraint {
    pub label: RowLabel,
    pub terms: Vec<(VarRef, Rational)>,
    pub sense: Sense,
    pub rhs: Rational,
}

impl LinearConstraint {
    pub fn tag(&self) -> ConstraintTag {
        self.label.tag()
    }

    /// Left-hand side at `x` (and `fv`, required when the row mentions an `f_v`).
    fn activity(&self, x: &PairAssignment, fv: Option<&[Rational]>) -> Option<Rational> {
        let mut total = Rational::zero();
        for &(var, coef) in &self.terms {
            let value = match var {
                VarRef::Pair(id) => {
                    if x.get(id) {
                        Rational::one()
                    } else {
                        continue;
                    }
                }
                VarRef::Fv(v) => fv?[v],
            };
            total += coef * value;
        }
        Some(total)
    }

    /// Signed slack: nonnegative iff the row holds.
    pub fn slack(&self, activity: Rational) -> Rational {
        match self.sense {
            Sense::Le => self.rhs - activity,
            Sense::Ge => activity - self.rhs,
        }
    }
}

/// How many tangent lines each vertex gets.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum IMaxMode {
    /// `i = 0..n-1` for every vertex.
    #[default]
    Full,
    /// `i = 0..|I_v|-1` when cuts are on; higher tangents cannot bind under
    /// the cut `sum_u x_uv <= |I_v| - 1`. Without cuts this is the same as
    /// `Full`.
    Truncated,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ModelOptions {
    pub use_cuts: bool,
    pub i_max_mode: IMaxMode,
    /// Branch-and-bound node budget per vertex when computing `|I_v|`.
    pub cut_node_budget: u64,
}

impl Default for ModelOptions {
    fn default() -> Self {
        ModelOptions { use_cuts: false, i_max_mode: IMaxMode::Full, cut_node_budget: DEFAULT_NODE_BUDGET }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ModelStats {
    pub pair_vars: usize,
    pub fv_vars: usize,
    pub triangle: usize,
    pub tangent: usize,
    pub cut: usize,
}

impl ModelStats {
    pub fn rows(&self) -> usize {
        self.triangle + self.tangent + self.cut
    }
}

/// The assembled MILP: minimize `sum_v f_v` subject to the rows below, with
/// `x` binary and `f_v` in `[1/n, 1]`.
#[derive(Clone, Debug)]
pub struct Model {
    graph: Graph,
    pairs: PairVars,
    constraints: Vec<LinearConstraint>,
    options: ModelOptions,
    cut_report: Option<CutReport>,
    stats: ModelStats,
}

impl Model {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn pairs(&self) -> &PairVars {
        &self.pairs
    }

    pub fn constraints(&self) -> &[LinearConstraint] {
        &self.constraints
    }

    pub fn options(&self) -> ModelOptions {
        self.options
    }

    pub fn cut_report(&self) -> Option<&CutReport> {
        self.cut_report.as_ref()
    }

    pub fn stats(&self) -> ModelStats {
        self.stats
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// Bounds `[1/n, 1]` shared by every `f_v`.
    pub fn fv_bounds(&self) -> (Rational, Rational) {
        (Rational::new(1, self.n().max(1) as i64), Rational::one())
    }

    /// Column name: `x_u_v` (1-based, `u < v`) or `f_v` (1-based).
    pub fn var_name(&self, var: VarRef) -> String {
        match var {
            VarRef::Pair(id) => {
                let p = self.pairs.get(id);
                format!("x_{}_{}", p.u + 1, p.v + 1)
            }
            VarRef::Fv(v) => format!("f_{}", v + 1),
        }
    }

    pub fn coloring_to_x(&self, c: &Coloring) -> Result<PairAssignment> {
        coloring_to_x(&self.graph, &self.pairs, c)
    }

    pub fn x_to_components(&self, x: &PairAssignment) -> Result<Vec<Vec<usize>>> {
        x_to_components(&self.graph, &self.pairs, x)
    }

    pub fn fractional_objective(&self, x: &PairAssignment) -> Result<BigRational> {
        fractional_objective(&self.graph, &self.pairs, x)
    }

    /// Every violated row and `f_v` bound. Tangent rows and `f_v` bounds are
    /// only checked when `fv` is given.
    pub fn check_feasibility(&self, x: &PairAssignment, fv: Option<&[Rational]>) -> Result<FeasibilityReport> {
        if x.len() != self.pairs.len() {
            return Err(Error::DimensionMismatch { got: x.len(), expected: self.pairs.len() });
        }
        if let Some(f) = fv {
            if f.len() != self.n() {
                return Err(Error::DimensionMismatch { got: f.len(), expected: self.n() });
            }
        }
        let mut violations = Vec::new();
        for row in &self.constraints {
            let Some(activity) = row.activity(x, fv) else { continue };
            let slack = row.slack(activity);
            if slack < Rational::zero() {
                violations.push(Violation::Row { label: row.label, slack });
            }
        }
        if let Some(f) = fv {
            let (lo, hi) = self.fv_bounds();
            for (v, &value) in f.iter().enumerate() {
                if value < lo || value > hi {
                    violations.push(Violation::FvBound { v, value });
                }
            }
        }
        Ok(FeasibilityReport { violations })
    }

    /// `f_v = 1 / (1 + d_v)` for each vertex, the value the tangents force at `x`.
    pub fn fv_for(&self, x: &PairAssignment) -> Vec<Rational> {
        (0..self.n())
            .map(|v| {
                let d = self.pairs.incident(v).iter().filter(|&&id| x.get(id)).count();
                Rational::new(1, 1 + d as i64)
            })
            .collect()
    }
}

/// 0/1 value for every pair variable, indexed by id.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PairAssignment {
    values: Vec<bool>,
}

impl PairAssignment {
    pub fn zeros(len: usize) -> Self {
        PairAssignment { values: vec![false; len] }
    }

    pub fn from_values(values: Vec<bool>) -> Self {
        PairAssignment { values }
    }

    pub fn values(&self) -> &[bool] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, id: usize) -> bool {
        self.values[id]
    }

    pub fn set(&mut self, id: usize, value: bool) {
        self.values[id] = value;
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// Row violated by `-slack`.
    Row { label: RowLabel, slack: Rational },
    FvBound { v: usize, value: Rational },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Row { label, slack } => write!(f, "row {label} violated (slack {slack})"),
            Violation::FvBound { v, value } => write!(f, "f_{} = {value} outside its bounds", v + 1),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FeasibilityReport {
    pub violations: Vec<Violation>,
}

impl FeasibilityReport {
    pub fn is_feasible(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn count(&self, tag: ConstraintTag) -> usize {
        self.violations
            .iter()
            .filter(|v| matches!(v, Violation::Row { label, .. } if label.tag() == tag))
            .count()
    }
}

/// Pair variables of `g` as a flat list (see [`PairVars::build`]).
pub fn build_pair_vars(g: &Graph) -> Vec<PairVar> {
    PairVars::build(g).vars
}

/// Triangle rows after dropping those implied by variable bounds.
///
/// For a triple `{u, v, w}` and a choice of apex `a` (the vertex shared by
/// the two `+1` pairs), the row is `x_ab + x_ac - x_bc <= 1`. If either `+1`
/// pair is an edge the row reduces to `x - y <= 1` or weaker and is dropped.
/// If only the `-1` pair is an edge the row is kept as `x_ab + x_ac <= 1`.
/// Triples are visited lexicographically, apexes in increasing order.
pub fn build_triangle_constraints(g: &Graph, pairs: &PairVars) -> Vec<LinearConstraint> {
    let n = g.n();
    let mut rows = Vec::new();
    let one = Rational::one();
    let push = |rows: &mut Vec<LinearConstraint>, plus: [usize; 2], minus: Option<usize>| {
        let mut terms = vec![(VarRef::Pair(plus[0]), one), (VarRef::Pair(plus[1]), one)];
        if let Some(m) = minus {
            terms.push((VarRef::Pair(m), -one));
        }
        let label = RowLabel::Triangle { k: rows.len() };
        rows.push(LinearConstraint { label, terms, sense: Sense::Le, rhs: one });
    };
    let non_adj: Vec<FixedBitSet> = (0..n)
        .map(|v| {
            let mut s = g.adjacency(v).clone();
            s.toggle_range(..);
            s.set(v, false);
            s
        })
        .collect();
    let id = |a: usize, b: usize| pairs.id(a, b).expect("non-edge has a variable");

    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) {
                // only apex w survives, in reduced form
                let mut common = non_adj[u].clone();
                common.intersect_with(&non_adj[v]);
                for w in common.ones().filter(|&w| w > v) {
                    push(&mut rows, [id(u, w), id(v, w)], None);
                }
                continue;
            }
            let uv = id(u, v);
            for w in v + 1..n {
                let uw = pairs.id(u, w);
                let vw = pairs.id(v, w);
                match (uw, vw) {
                    (Some(uw), Some(vw)) => {
                        push(&mut rows, [uv, uw], Some(vw));
                        push(&mut rows, [uv, vw], Some(uw));
                        push(&mut rows, [uw, vw], Some(uv));
                    }
                    (None, Some(vw)) => push(&mut rows, [uv, vw], None),
                    (Some(uw), None) => push(&mut rows, [uv, uw], None),
                    (None, None) => {}
                }
            }
        }
    }
    rows
}

/// Value of the `i`-th tangent line `-(d - i) / ((i + 1)(i + 2)) + 1 / (i + 1)` at `d`.
pub fn tangent_value(i: usize, d: Rational) -> Rational {
    let i = i as i64;
    let slope = Rational::new(1, (i + 1) * (i + 2));
    -slope * (d - Rational::from_integer(i)) + Rational::new(1, i + 1)
}

/// Tangent rows `f_v + sum_u x_uv / ((i + 1)(i + 2)) >= 2 / (i + 2)` for
/// `i = 0..=i_max`, the sum running over existing pair variables at `v`.
pub fn build_fv_constraints(pairs: &PairVars, v: usize, i_max: usize) -> Result<Vec<LinearConstraint>> {
    let n = pairs.n();
    if v >= n {
        return Err(Error::InvalidVertex { vertex: v, n });
    }
    if i_max > n - 1 {
        return Err(Error::TangentRange { i_max, max: n - 1 });
    }
    let incident = pairs.incident(v);
    Ok((0..=i_max)
        .map(|i| {
            let i64_ = i as i64;
            let coef = Rational::new(1, (i64_ + 1) * (i64_ + 2));
            let mut terms = Vec::with_capacity(1 + incident.len());
            terms.push((VarRef::Fv(v), Rational::one()));
            terms.extend(incident.iter().map(|&id| (VarRef::Pair(id), coef)));
            LinearConstraint {
                label: RowLabel::Tangent { v, i },
                terms,
                sense: Sense::Ge,
                rhs: Rational::new(2, i64_ + 2),
            }
        })
        .collect())
}

/// Assembles the full model. Rows are ordered triangles, then tangents by
/// vertex, then cuts by vertex.
pub fn build_model(g: &Graph, opts: ModelOptions) -> Result<Model> {
    let n = g.n();
    let pairs = PairVars::build(g);
    let mut constraints = build_triangle_constraints(g, &pairs);
    let triangle = constraints.len();

    let cut_report = opts.use_cuts.then(|| CutReport::compute(g, opts.cut_node_budget));
    for v in 0..n {
        let i_max = match (&cut_report, opts.i_max_mode) {
            (Some(report), IMaxMode::Truncated) => (report.sizes[v] - 1).min(n - 1),
            _ => n - 1,
        };
        constraints.extend(build_fv_constraints(&pairs, v, i_max)?);
    }
    let tangent = constraints.len() - triangle;
    if let Some(report) = &cut_report {
        constraints.extend(build_simple_cuts(&pairs, report)?);
    }
    let cut = constraints.len() - triangle - tangent;

    let stats = ModelStats { pair_vars: pairs.len(), fv_vars: n, triangle, tangent, cut };
    Ok(Model { graph: g.clone(), pairs, constraints, options: opts, cut_report, stats })
}

/// `x_uv = 1` iff `u` and `v` get the same color.
pub fn coloring_to_x(g: &Graph, pairs: &PairVars, c: &Coloring) -> Result<PairAssignment> {
    c.validate(g)?;
    let values = pairs.vars().iter().map(|p| c.color(p.u) == c.color(p.v)).collect();
    Ok(PairAssignment { values })
}

/// Connected components of `(V, E_x)`, each sorted, ordered by smallest
/// member. Fails unless every component is a clique of `E_x`, which is
/// exactly feasibility for the triangle system with edge pairs fixed to 0.
pub fn x_to_components(g: &Graph, pairs: &PairVars, x: &PairAssignment) -> Result<Vec<Vec<usize>>> {
    if x.len() != pairs.len() {
        return Err(Error::DimensionMismatch { got: x.len(), expected: pairs.len() });
    }
    let n = g.n();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }
    for p in pairs.vars().iter().filter(|p| x.get(p.id)) {
        let (a, b) = (find(&mut parent, p.u), find(&mut parent, p.v));
        if a != b {
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut slot = vec![usize::MAX; n];
    let mut components: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        let r = find(&mut parent, v);
        if slot[r] == usize::MAX {
            slot[r] = components.len();
            components.push(Vec::new());
        }
        components[slot[r]].push(v);
    }
    for comp in &components {
        for (i, &a) in comp.iter().enumerate() {
            for &b in &comp[i + 1..] {
                if !pairs.id(a, b).is_some_and(|id| x.get(id)) {
                    return Err(Error::Infeasible(format!(
                        "vertices {} and {} are joined through E_x but x_{}_{} is not 1",
                        a + 1,
                        b + 1,
                        a + 1,
                        b + 1
                    )));
                }
            }
        }
    }
    Ok(components)
}

/// `sum_v 1 / (1 + sum_u x_uv)` in exact arithmetic. For feasible `x` this is
/// the number of components of `(V, E_x)`, i.e. the number of colors.
pub fn fractional_objective(g: &Graph, pairs: &PairVars, x: &PairAssignment) -> Result<BigRational> {
    x_to_components(g, pairs, x)?;
    let mut total = BigRational::zero();
    for v in 0..g.n() {
        let d = pairs.incident(v).iter().filter(|&&id| x.get(id)).count();
        total += BigRational::new(1.into(), (1 + d).into());
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> Graph {
        Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap()
    }

    fn r(a: i64, b: i64) -> Rational {
        Rational::new(a, b)
    }

    #[test]
    fn pair_var_counts() {
        assert!(build_pair_vars(&Graph::complete(5)).is_empty());
        assert_eq!(build_pair_vars(&Graph::empty(6)).len(), 15);
        assert_eq!(build_pair_vars(&p3()), vec![PairVar { u: 0, v: 2, id: 0 }]);
        let pv = PairVars::build(&Graph::empty(4));
        assert_eq!(pv.id(2, 1), Some(3));
        assert_eq!(pv.id(1, 1), None);
        assert_eq!(pv.incident(2), &[1, 3, 5]);
    }

    #[test]
    fn triangle_counts() {
        let g = Graph::empty(4);
        assert_eq!(build_triangle_constraints(&g, &PairVars::build(&g)).len(), 12);
        let k3 = Graph::complete(3);
        assert!(build_triangle_constraints(&k3, &PairVars::build(&k3)).is_empty());
        let g = p3();
        assert!(build_triangle_constraints(&g, &PairVars::build(&g)).is_empty());
    }

    #[test]
    fn triangle_reduced_form() {
        // single edge {0,1} on 3 vertices: only apex 2 survives, as x_02 + x_12 <= 1
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        let pv = PairVars::build(&g);
        let rows = build_triangle_constraints(&g, &pv);
        assert_eq!(rows.len(), 1);
        let ids: Vec<_> = rows[0].terms.iter().map(|t| t.0).collect();
        assert_eq!(ids, vec![VarRef::Pair(pv.id(0, 2).unwrap()), VarRef::Pair(pv.id(1, 2).unwrap())]);
        assert_eq!(rows[0].rhs, Rational::one());
    }

    #[test]
    fn tangent_values() {
        assert_eq!(tangent_value(0, r(0, 1)), r(1, 1));
        assert_eq!(tangent_value(3, r(3, 1)), r(1, 4));
        assert_eq!(tangent_value(0, r(1, 1)), r(1, 2));
        assert_eq!(tangent_value(1, r(1, 1)), r(1, 2));
        assert_eq!(tangent_value(1, r(2, 1)), r(1, 3));
    }

    #[test]
    fn tangent_rows_match_tangent_values() {
        let g = Graph::empty(3);
        let pv = PairVars::build(&g);
        let rows = build_fv_constraints(&pv, 0, 2).unwrap();
        assert_eq!(rows.len(), 3);
        for row in &rows {
            let vars: Vec<_> = row.terms.iter().map(|t| t.0).collect();
            assert_eq!(vars, vec![VarRef::Fv(0), VarRef::Pair(0), VarRef::Pair(1)]);
        }
        // the row is f >= u_i(d): at f = 0 the lhs is (d coef) and rhs - that equals u_i(d)
        for (i, row) in rows.iter().enumerate() {
            for d in 0..=2i64 {
                let lhs_without_f = row.terms[1].1 * Rational::from_integer(d);
                assert_eq!(row.rhs - lhs_without_f, tangent_value(i, Rational::from_integer(d)));
            }
        }
        assert!(build_fv_constraints(&pv, 0, 3).is_err());
        assert!(build_fv_constraints(&pv, 3, 0).is_err());
    }

    #[test]
    fn isolated_vertex_tangents() {
        let g = Graph::complete(3);
        let pv = PairVars::build(&g);
        let rows = build_fv_constraints(&pv, 1, 2).unwrap();
        assert!(rows.iter().all(|row| row.terms.len() == 1));
        let binding = rows.iter().map(|row| row.rhs).max().unwrap();
        assert_eq!(binding, Rational::one());
    }

    #[test]
    fn min_fv_is_reciprocal() {
        // with d incident ones the tightest tangent row forces exactly 1/(1+d)
        let n = 7;
        let g = Graph::empty(n);
        let pv = PairVars::build(&g);
        let rows = build_fv_constraints(&pv, 0, n - 1).unwrap();
        for d in 0..n {
            let forced = rows
                .iter()
                .map(|row| row.rhs - row.terms[1].1 * Rational::from_integer(d as i64))
                .max()
                .unwrap();
            assert_eq!(forced, r(1, 1 + d as i64));
        }
    }

    #[test]
    fn model_shapes() {
        let k4 = build_model(&Graph::complete(4), ModelOptions::default()).unwrap();
        assert_eq!(k4.stats(), ModelStats { pair_vars: 0, fv_vars: 4, triangle: 0, tangent: 16, cut: 0 });

        let e3 = build_model(&Graph::empty(3), ModelOptions::default()).unwrap();
        assert_eq!(e3.stats(), ModelStats { pair_vars: 3, fv_vars: 3, triangle: 3, tangent: 9, cut: 0 });

        let single = build_model(&Graph::empty(1), ModelOptions::default()).unwrap();
        assert_eq!(single.stats().pair_vars, 0);
        assert_eq!(single.fv_bounds(), (Rational::one(), Rational::one()));

        let zero = build_model(&Graph::empty(0), ModelOptions::default()).unwrap();
        assert_eq!(zero.stats().rows(), 0);
    }

    #[test]
    fn model_with_cuts_and_truncation() {
        let g = Graph::empty(4);
        let opts = ModelOptions { use_cuts: true, ..Default::default() };
        let m = build_model(&g, opts).unwrap();
        assert_eq!(m.stats().cut, 4);
        assert_eq!(m.cut_report().unwrap().sizes, vec![4; 4]);

        // in K_4 every |I_v| = 1, so truncation keeps only the i = 0 tangent
        let k4 = Graph::complete(4);
        let m = build_model(&k4, ModelOptions { use_cuts: true, i_max_mode: IMaxMode::Truncated, ..Default::default() })
            .unwrap();
        assert_eq!(m.stats().tangent, 4);
        assert_eq!(m.stats().cut, 0);

        let plain = build_model(&k4, ModelOptions { i_max_mode: IMaxMode::Truncated, ..Default::default() }).unwrap();
        assert_eq!(plain.stats().tangent, 16);
    }

    #[test]
    fn coloring_encoding() {
        let g = p3();
        let pv = PairVars::build(&g);
        let x = coloring_to_x(&g, &pv, &Coloring::new(vec![0, 1, 0])).unwrap();
        assert_eq!(x.values(), &[true]);
        let x = coloring_to_x(&g, &pv, &Coloring::new(vec![0, 1, 2])).unwrap();
        assert_eq!(x.values(), &[false]);
        let a = coloring_to_x(&g, &pv, &Coloring::new(vec![4, 9, 4])).unwrap();
        assert_eq!(a.values(), &[true]);
        assert!(matches!(
            coloring_to_x(&g, &pv, &Coloring::new(vec![0, 0, 1])),
            Err(Error::ImproperColoring { .. })
        ));
    }

    #[test]
    fn components_and_objective() {
        let g = p3();
        let pv = PairVars::build(&g);
        let x = PairAssignment::from_values(vec![true]);
        assert_eq!(x_to_components(&g, &pv, &x).unwrap(), vec![vec![0, 2], vec![1]]);
        assert_eq!(fractional_objective(&g, &pv, &x).unwrap(), BigRational::from_integer(2.into()));

        let g = Graph::empty(3);
        let pv = PairVars::build(&g);
        let ones = PairAssignment::from_values(vec![true; 3]);
        assert_eq!(x_to_components(&g, &pv, &ones).unwrap(), vec![vec![0, 1, 2]]);
        let zeros = PairAssignment::zeros(3);
        assert_eq!(x_to_components(&g, &pv, &zeros).unwrap().len(), 3);
        assert_eq!(fractional_objective(&g, &pv, &zeros).unwrap(), BigRational::from_integer(3.into()));

        let broken = PairAssignment::from_values(vec![true, false, true]);
        assert!(matches!(x_to_components(&g, &pv, &broken), Err(Error::Infeasible(_))));
        assert!(fractional_objective(&g, &pv, &broken).is_err());
        assert!(x_to_components(&g, &pv, &PairAssignment::zeros(2)).is_err());
    }

    #[test]
    fn feasibility_report() {
        let g = Graph::empty(3);
        let m = build_model(&g, ModelOptions::default()).unwrap();
        // x_01 = x_12 = 1, x_02 = 0
        let x = PairAssignment::from_values(vec![true, false, true]);
        let report = m.check_feasibility(&x, None).unwrap();
        assert_eq!(report.violations.len(), 1);
        assert_eq!(report.count(ConstraintTag::Triangle), 1);
        assert!(matches!(
            report.violations[0],
            Violation::Row { label: RowLabel::Triangle { k: 1 }, .. }
        ));

        let good = m.coloring_to_x(&Coloring::new(vec![0, 0, 1])).unwrap();
        let fv = m.fv_for(&good);
        assert_eq!(fv, vec![r(1, 2), r(1, 2), r(1, 1)]);
        assert!(m.check_feasibility(&good, Some(&fv)).unwrap().is_feasible());

        // f_0 just below 1/(1+d) with d = 1
        let mut low = fv.clone();
        low[0] = r(1, 2) - r(1, 1000);
        let report = m.check_feasibility(&good, Some(&low)).unwrap();
        // tangents 0 and 1 both pass through (1, 1/2)
        assert_eq!(report.count(ConstraintTag::ObjectiveTangent), 2);
        assert!(matches!(report.violations[0], Violation::Row { label: RowLabel::Tangent { v: 0, i: 0 }, .. }));
        assert!(matches!(report.violations[1], Violation::Row { label: RowLabel::Tangent { v: 0, i: 1 }, .. }));

        let mut out_of_bounds = fv;
        out_of_bounds[2] = r(3, 2);
        let report = m.check_feasibility(&good, Some(&out_of_bounds)).unwrap();
        assert_eq!(report.violations, vec![Violation::FvBound { v: 2, value: r(3, 2) }]);

        assert!(m.check_feasibility(&PairAssignment::zeros(1), None).is_err());
        assert!(m.check_feasibility(&good, Some(&[r(1, 1)])).is_err());
    }

    #[test]
    fn row_names() {
        assert_eq!(RowLabel::Triangle { k: 4 }.to_string(), "t_4");
        assert_eq!(RowLabel::Tangent { v: 0, i: 3 }.to_string(), "pw_1_3");
        assert_eq!(RowLabel::Cut { v: 9 }.to_string(), "cut_10");
        let m = build_model(&Graph::empty(3), ModelOptions::default()).unwrap();
        assert_eq!(m.var_name(VarRef::Pair(1)), "x_1_3");
        assert_eq!(m.var_name(VarRef::Fv(2)), "f_3");
    }
}
