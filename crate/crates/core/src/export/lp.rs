use std::fmt::Write;

use crate::export::decimal;
use crate::formulation::{LinearConstraint, Model, Sense, VarRef};
use num_traits::Signed;

use crate::Rational;

const TERMS_PER_LINE: usize = 8;

/// CPLEX LP text for `m`. Output is a pure function of the model.
pub fn write_lp(m: &Model) -> String {
    let mut out = String::new();
    let opts = m.options();
    let _ = writeln!(out, "\\ pairwise coloring model");
    let _ = writeln!(
        out,
        "\\ vertices {} edges {} cuts {} tangents {:?}",
        m.n(),
        m.graph().num_edges(),
        if opts.use_cuts { "yes" } else { "no" },
        opts.i_max_mode
    );
    out.push_str("Minimize\n obj:");
    if m.n() == 0 {
        out.push_str(" 0");
    }
    for v in 0..m.n() {
        if v > 0 && v % TERMS_PER_LINE == 0 {
            out.push_str("\n   ");
        }
        let _ = write!(out, "{} f_{}", if v == 0 { "" } else { " +" }, v + 1);
    }
    out.push_str("\nSubject To\n");
    for row in m.constraints() {
        write_row(&mut out, m, row);
    }
    out.push_str("Bounds\n");
    let (lo, hi) = m.fv_bounds();
    for v in 0..m.n() {
        let _ = writeln!(out, " {} <= f_{} <= {}", decimal(lo), v + 1, decimal(hi));
    }
    if !m.pairs().is_empty() {
        out.push_str("Binary\n");
        for p in m.pairs().vars() {
            let _ = writeln!(out, " x_{}_{}", p.u + 1, p.v + 1);
        }
    }
    out.push_str("End\n");
    out
}

fn write_row(out: &mut String, m: &Model, row: &LinearConstraint) {
    let _ = write!(out, " {}:", row.label);
    for (k, &(var, coef)) in row.terms.iter().enumerate() {
        if k > 0 && k % TERMS_PER_LINE == 0 {
            out.push_str("\n   ");
        }
        write_term(out, m, var, coef, k == 0);
    }
    let op = match row.sense {
        Sense::Le => "<=",
        Sense::Ge => ">=",
    };
    let _ = writeln!(out, " {op} {}", decimal(row.rhs));
}

fn write_term(out: &mut String, m: &Model, var: VarRef, coef: Rational, first: bool) {
    let magnitude = coef.abs();
    let sign = if coef < Rational::from_integer(0) {
        " -"
    } else if first {
        ""
    } else {
        " +"
    };
    out.push_str(sign);
    if magnitude != Rational::from_integer(1) {
        let _ = write!(out, " {}", decimal(magnitude));
    }
    let _ = write!(out, " {}", m.var_name(var));
}
