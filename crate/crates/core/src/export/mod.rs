//! Text formats for external MILP solvers: CPLEX LP, fixed-field MPS, and
//! solver solution files, plus verification of solutions against a model.
//!
//! Naming scheme shared by all formats:
//!
//! | item | name |
//! |------|------|
//! | pair variable `{u, v}`, `u < v` | `x_u_v` (1-based) |
//! | objective variable of vertex `v` | `f_v` (1-based) |
//! | triangle row `k` | `t_k` (0-based position among triangle rows) |
//! | tangent `i` of vertex `v` | `pw_v_i` (`v` 1-based, `i` 0-based) |
//! | simple cut of vertex `v` | `cut_v` (1-based) |
//!
//! Coefficients are exact inside the model and written as the shortest
//! decimal that round-trips their nearest `f64`.

mod lp;
mod mps;
pub mod readback;
mod solution;

pub use lp::write_lp;
pub use mps::write_mps;
pub use solution::{
    parse_sol, solution_from_coloring, verify_solution, write_sol, SolError, SolutionFile,
    VerificationReport, VerifyError, DEFAULT_TOLERANCE,
};

use crate::Rational;

/// Shortest round-trip decimal of the `f64` nearest to `r`.
pub(crate) fn decimal(r: Rational) -> String {
    let value = *r.numer() as f64 / *r.denom() as f64;
    format!("{value}")
}

pub(crate) fn to_f64(r: Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}
