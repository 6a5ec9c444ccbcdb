//! Pairwise (clique-partitioning) MILP formulation of vertex coloring.
//!
//! A binary variable per non-adjacent vertex pair records whether the two
//! vertices share a color. Transitivity is enforced by triangle
//! inequalities, and the fractional color count `sum_v 1 / (1 + sum_u x_uv)`
//! is replaced by the upper envelope of its tangent lines at integer points.
//!
//! The crate builds that model with exact rational coefficients, evaluates
//! and checks assignments against it, strengthens it with independent-set
//! cuts, solves it exactly with a branch-and-bound over the pair decisions,
//! and exports it as LP or MPS text for external MILP solvers.

pub mod cuts;
pub mod dimacs;
pub mod error;
pub mod export;
pub mod formulation;
pub mod generate;
pub mod graph;
pub mod oracle;
pub mod solver;

/// Exact fraction used for every model coefficient.
pub type Rational = num_rational::Ratio<i64>;
/// Arbitrary-precision fraction for sums whose denominators can grow.
pub type BigRational = num_rational::BigRational;

pub use cuts::{build_simple_cuts, max_independent_with, CutReport, DEFAULT_NODE_BUDGET};
pub use dimacs::{parse_dimacs, write_dimacs};
pub use error::{Error, Result};
pub use export::{
    parse_sol, solution_from_coloring, verify_solution, write_lp, write_mps, write_sol,
    SolError, SolutionFile, VerificationReport, VerifyError, DEFAULT_TOLERANCE,
};
pub use formulation::{
    build_fv_constraints, build_model, build_triangle_constraints, coloring_to_x,
    fractional_objective, tangent_value, x_to_components, ConstraintTag, FeasibilityReport,
    IMaxMode, LinearConstraint, Model, ModelOptions, ModelStats, PairAssignment, PairVar,
    PairVars, RowLabel, Sense, VarRef, Violation,
};
pub use generate::{gen_gnp, SplitMix64};
pub use graph::{greedy_clique_within, Coloring, Graph};
pub use oracle::{chromatic_number, is_k_colorable, OracleResult};
pub use solver::{relative_gap, solve, solve_with_observer, BranchRule, SolveConfig, SolveReport, SolveStatus};
