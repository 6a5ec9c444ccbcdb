use std::collections::BTreeMap;
use std::fmt::Write;

use num_traits::ToPrimitive;
use thiserror::Error;

use crate::error::Error;
use crate::export::to_f64;
use crate::formulation::{Model, PairAssignment, Sense, VarRef, Violation};
use crate::graph::Coloring;
use crate::BigRational;

pub const DEFAULT_TOLERANCE: f64 = 1e-6;

/// Parsed solver output: objective and one value per named variable.
#[derive(Clone, Debug, PartialEq)]
pub struct SolutionFile {
    pub objective: f64,
    pub values: BTreeMap<String, f64>,
}

#[derive(Debug, Error, PartialEq)]
pub enum SolError {
    #[error("missing `# Objective value = ...` header")]
    MissingObjective,
    #[error("line {line}: {reason}")]
    Syntax { line: usize, reason: String },
    #[error("line {line}: variable `{name}` listed twice")]
    Duplicate { line: usize, name: String },
}

/// Parses `# Objective value = <v>` plus `name value` lines; other `#` lines
/// are comments.
pub fn parse_sol(text: &str) -> Result<SolutionFile, SolError> {
    let mut objective = None;
    let mut values = BTreeMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(comment) = trimmed.strip_prefix('#') {
            if let Some((key, value)) = comment.split_once('=') {
                if key.trim().eq_ignore_ascii_case("objective value") {
                    let v = value.trim();
                    objective = Some(v.parse().map_err(|_| SolError::Syntax {
                        line,
                        reason: format!("objective `{v}` is not a number"),
                    })?);
                }
            }
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        let [name, value] = tokens[..] else {
            return Err(SolError::Syntax { line, reason: "expected `name value`".into() });
        };
        let value: f64 = value
            .parse()
            .map_err(|_| SolError::Syntax { line, reason: format!("`{value}` is not a number") })?;
        if values.insert(name.to_string(), value).is_some() {
            return Err(SolError::Duplicate { line, name: name.to_string() });
        }
    }
    Ok(SolutionFile { objective: objective.ok_or(SolError::MissingObjective)?, values })
}

/// Writes the format read by [`parse_sol`], variables in name order.
pub fn write_sol(s: &SolutionFile) -> String {
    let mut out = format!("# Objective value = {}\n", s.objective);
    for (name, value) in &s.values {
        let _ = writeln!(out, "{name} {value}");
    }
    out
}

/// Solution file for a proper coloring: its pair encoding, `f_v = 1/(1+d_v)`,
/// and the color count as objective.
pub fn solution_from_coloring(m: &Model, c: &Coloring) -> crate::Result<SolutionFile> {
    let x = m.coloring_to_x(c)?;
    let mut values = BTreeMap::new();
    for p in m.pairs().vars() {
        values.insert(m.var_name(VarRef::Pair(p.id)), if x.get(p.id) { 1.0 } else { 0.0 });
    }
    for (v, f) in m.fv_for(&x).into_iter().enumerate() {
        values.insert(m.var_name(VarRef::Fv(v)), to_f64(f));
    }
    Ok(SolutionFile { objective: c.num_colors() as f64, values })
}

#[derive(Debug, Error, PartialEq)]
pub enum VerifyError {
    #[error("tolerance must be positive, got {0}")]
    BadTolerance(f64),
    #[error("{name} = {value} is not within tolerance of 0 or 1")]
    NonIntegral { name: String, value: f64 },
    #[error("infeasible: {}", .violations.join("; "))]
    Infeasible { violations: Vec<String> },
    #[error("{what} is {found}, recomputed color count is {expected}")]
    ObjectiveMismatch { what: &'static str, found: f64, expected: usize },
    #[error(transparent)]
    Model(#[from] Error),
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    /// Colors implied by the rounded pair values.
    pub colors: usize,
    pub coloring: Coloring,
    pub file_objective: f64,
    pub fv_sum: f64,
    /// Names in the file that match no model variable.
    pub unknown: Vec<String>,
    /// Model variables absent from the file, read as 0.
    pub missing: Vec<String>,
}

/// Checks an external solution against `m`.
///
/// Pair values are rounded to 0/1 (failing if farther than `tol`), binary
/// rows are checked exactly, tangent rows and `f_v` bounds within `tol`, and
/// the color count recomputed from the pair values must match both the file
/// objective and `sum_v f_v` within `tol`.
pub fn verify_solution(m: &Model, s: &SolutionFile, tol: f64) -> Result<VerificationReport, VerifyError> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(VerifyError::BadTolerance(tol));
    }
    let mut missing = Vec::new();
    let mut lookup = |name: String| match s.values.get(&name) {
        Some(&v) => v,
        None => {
            missing.push(name);
            0.0
        }
    };

    let mut x = PairAssignment::zeros(m.pairs().len());
    for id in 0..m.pairs().len() {
        let name = m.var_name(VarRef::Pair(id));
        let value = lookup(name.clone());
        let rounded = value.round();
        if (value - rounded).abs() > tol || !(rounded == 0.0 || rounded == 1.0) {
            return Err(VerifyError::NonIntegral { name, value });
        }
        x.set(id, rounded == 1.0);
    }
    let fv: Vec<f64> = (0..m.n()).map(|v| lookup(m.var_name(VarRef::Fv(v)))).collect();

    let mut violations: Vec<String> = m
        .check_feasibility(&x, None)?
        .violations
        .iter()
        .map(|v| match v {
            Violation::Row { label, .. } => label.to_string(),
            other => other.to_string(),
        })
        .collect();
    for row in m.constraints() {
        if !row.terms.iter().any(|(var, _)| matches!(var, VarRef::Fv(_))) {
            continue;
        }
        let lhs: f64 = row
            .terms
            .iter()
            .map(|&(var, coef)| {
                let value = match var {
                    VarRef::Pair(id) => f64::from(u8::from(x.get(id))),
                    VarRef::Fv(v) => fv[v],
                };
                to_f64(coef) * value
            })
            .sum();
        let rhs = to_f64(row.rhs);
        let ok = match row.sense {
            Sense::Le => lhs <= rhs + tol,
            Sense::Ge => lhs >= rhs - tol,
        };
        if !ok {
            violations.push(row.label.to_string());
        }
    }
    let (lo, hi) = m.fv_bounds();
    for (v, &value) in fv.iter().enumerate() {
        if value < to_f64(lo) - tol || value > to_f64(hi) + tol {
            violations.push(format!("bound of {}", m.var_name(VarRef::Fv(v))));
        }
    }
    if !violations.is_empty() {
        return Err(VerifyError::Infeasible { violations });
    }

    let components = m.x_to_components(&x)?;
    let recomputed: BigRational = m.fractional_objective(&x)?;
    debug_assert!(recomputed.is_integer());
    let colors = recomputed.to_integer().to_usize().expect("color count fits usize");
    debug_assert_eq!(colors, components.len());

    if (s.objective - colors as f64).abs() > tol {
        return Err(VerifyError::ObjectiveMismatch { what: "file objective", found: s.objective, expected: colors });
    }
    let fv_sum: f64 = fv.iter().sum();
    if (fv_sum - colors as f64).abs() > tol {
        return Err(VerifyError::ObjectiveMismatch { what: "sum of f_v", found: fv_sum, expected: colors });
    }

    let mut labels = vec![0; m.n()];
    for (k, comp) in components.iter().enumerate() {
        for &v in comp {
            labels[v] = k;
        }
    }
    let known: std::collections::HashSet<String> = (0..m.pairs().len())
        .map(|id| m.var_name(VarRef::Pair(id)))
        .chain((0..m.n()).map(|v| m.var_name(VarRef::Fv(v))))
        .collect();
    let unknown = s.values.keys().filter(|k| !known.contains(*k)).cloned().collect();

    Ok(VerificationReport {
        colors,
        coloring: Coloring::new(labels),
        file_objective: s.objective,
        fv_sum,
        unknown,
        missing,
    })
}
