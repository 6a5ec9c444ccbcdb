use std::fmt::Write;

use crate::export::decimal;
use crate::formulation::{Model, Sense, VarRef};
use crate::Rational;

/// Fixed-field MPS text for `m`.
///
/// Fields start at columns 2, 5, 15, 25, 40 and 50. Names longer than eight
/// characters push later fields right, so readers should split on whitespace
/// (free MPS) when the graph has more than a few vertices. Integer columns are
/// wrapped in `INTORG`/`INTEND` markers and given explicit `[0, 1]` bounds.
pub fn write_mps(m: &Model) -> String {
    let mut out = String::new();
    out.push_str("NAME          PAIRCOLOR\n");
    out.push_str("ROWS\n");
    field_line(&mut out, "N", "obj", "", "");
    for row in m.constraints() {
        let sense = match row.sense {
            Sense::Le => "L",
            Sense::Ge => "G",
        };
        field_line(&mut out, sense, &row.label.to_string(), "", "");
    }

    // column-major view of the rows
    let mut pair_cols: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); m.pairs().len()];
    let mut fv_cols: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); m.n()];
    for (r, row) in m.constraints().iter().enumerate() {
        for &(var, coef) in &row.terms {
            match var {
                VarRef::Pair(id) => pair_cols[id].push((r, coef)),
                VarRef::Fv(v) => fv_cols[v].push((r, coef)),
            }
        }
    }
    let row_names: Vec<String> = m.constraints().iter().map(|r| r.label.to_string()).collect();

    out.push_str("COLUMNS\n");
    if !pair_cols.is_empty() {
        field_line(&mut out, "", "MARKER", "'MARKER'", "'INTORG'");
        for (id, col) in pair_cols.iter().enumerate() {
            let name = m.var_name(VarRef::Pair(id));
            for &(r, coef) in col {
                field_line(&mut out, "", &name, &row_names[r], &decimal(coef));
            }
        }
        field_line(&mut out, "", "MARKER", "'MARKER'", "'INTEND'");
    }
    for (v, col) in fv_cols.iter().enumerate() {
        let name = m.var_name(VarRef::Fv(v));
        field_line(&mut out, "", &name, "obj", "1");
        for &(r, coef) in col {
            field_line(&mut out, "", &name, &row_names[r], &decimal(coef));
        }
    }

    out.push_str("RHS\n");
    for (row, name) in m.constraints().iter().zip(&row_names) {
        if row.rhs != Rational::from_integer(0) {
            field_line(&mut out, "", "RHS", name, &decimal(row.rhs));
        }
    }

    out.push_str("BOUNDS\n");
    for id in 0..m.pairs().len() {
        field_line(&mut out, "UP", "BND", &m.var_name(VarRef::Pair(id)), "1");
    }
    let (lo, hi) = m.fv_bounds();
    for v in 0..m.n() {
        let name = m.var_name(VarRef::Fv(v));
        field_line(&mut out, "LO", "BND", &name, &decimal(lo));
        field_line(&mut out, "UP", "BND", &name, &decimal(hi));
    }
    out.push_str("ENDATA\n");
    out
}

fn field_line(out: &mut String, f1: &str, f2: &str, f3: &str, f4: &str) {
    let mut line = String::with_capacity(40);
    let _ = write!(line, " {f1:<2} {f2:<8}");
    if !f3.is_empty() {
        let _ = write!(line, "  {f3:<8}  {f4}");
    }
    out.push_str(line.trim_end());
    out.push('\n');
}
