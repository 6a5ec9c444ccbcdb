//! Readers for the LP and MPS dialect this crate writes, producing a common
//! structural view. They exist to cross-check the two writers and to evaluate
//! solutions against exported files; they are not general-purpose parsers.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum ReadError {
    #[error("line {line}: {reason}")]
    Syntax { line: usize, reason: String },
}

fn syntax(line: usize, reason: impl Into<String>) -> ReadError {
    ReadError::Syntax { line, reason: reason.into() }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RowSense {
    Le,
    Ge,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TextRow {
    pub sense: RowSense,
    pub terms: BTreeMap<String, f64>,
    pub rhs: f64,
}

/// Structure of a model file: objective, named rows, bounds, and binaries.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct TextModel {
    pub objective: BTreeMap<String, f64>,
    pub rows: BTreeMap<String, TextRow>,
    pub bounds: BTreeMap<String, (f64, f64)>,
    pub binaries: BTreeSet<String>,
}

impl TextModel {
    /// Rows violated by more than `tol` at the given values (missing names read as 0).
    pub fn violated_rows(&self, values: &BTreeMap<String, f64>, tol: f64) -> Vec<String> {
        self.rows
            .iter()
            .filter(|(_, row)| {
                let lhs: f64 = row.terms.iter().map(|(name, c)| c * values.get(name).copied().unwrap_or(0.0)).sum();
                match row.sense {
                    RowSense::Le => lhs > row.rhs + tol,
                    RowSense::Ge => lhs < row.rhs - tol,
                }
            })
            .map(|(name, _)| name.clone())
            .collect()
    }

    pub fn objective_value(&self, values: &BTreeMap<String, f64>) -> f64 {
        self.objective.iter().map(|(name, c)| c * values.get(name).copied().unwrap_or(0.0)).sum()
    }
}

#[derive(PartialEq)]
enum LpSection {
    Start,
    Objective,
    Rows,
    Bounds,
    Binary,
    End,
}

/// Reads LP text written by [`super::write_lp`].
pub fn parse_lp(text: &str) -> Result<TextModel, ReadError> {
    let mut model = TextModel::default();
    let mut section = LpSection::Start;
    // statement text accumulated across wrapped lines
    let mut pending = String::new();
    let mut pending_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('\\') {
            continue;
        }
        let next = match trimmed {
            "Minimize" => Some(LpSection::Objective),
            "Subject To" => Some(LpSection::Rows),
            "Bounds" => Some(LpSection::Bounds),
            "Binary" => Some(LpSection::Binary),
            "End" => Some(LpSection::End),
            _ => None,
        };
        if let Some(next) = next {
            flush(&mut model, &section, &mut pending, pending_line)?;
            section = next;
            continue;
        }
        match section {
            LpSection::Objective | LpSection::Rows => {
                // a new statement starts with `name:`
                if trimmed.split_whitespace().next().is_some_and(|t| t.ends_with(':')) {
                    flush(&mut model, &section, &mut pending, pending_line)?;
                    pending_line = line;
                }
                pending.push(' ');
                pending.push_str(trimmed);
            }
            LpSection::Bounds => {
                let t: Vec<&str> = trimmed.split_whitespace().collect();
                if t.len() != 5 || t[1] != "<=" || t[3] != "<=" {
                    return Err(syntax(line, "expected `lo <= name <= hi`"));
                }
                model.bounds.insert(t[2].to_string(), (num(t[0], line)?, num(t[4], line)?));
            }
            LpSection::Binary => {
                model.binaries.insert(trimmed.to_string());
            }
            LpSection::Start | LpSection::End => return Err(syntax(line, "content outside a section")),
        }
    }
    flush(&mut model, &section, &mut pending, pending_line)?;
    Ok(model)
}

fn flush(model: &mut TextModel, section: &LpSection, pending: &mut String, line: usize) -> Result<(), ReadError> {
    if pending.trim().is_empty() {
        pending.clear();
        return Ok(());
    }
    let stmt = std::mem::take(pending);
    let mut tokens: Vec<&str> = stmt.split_whitespace().collect();
    let name = tokens.remove(0).trim_end_matches(':').to_string();
    match section {
        LpSection::Objective => {
            model.objective = linear_terms(&tokens, line)?;
        }
        LpSection::Rows => {
            let op = tokens.iter().position(|t| *t == "<=" || *t == ">=").ok_or_else(|| syntax(line, "missing sense"))?;
            let sense = if tokens[op] == "<=" { RowSense::Le } else { RowSense::Ge };
            let rhs = num(tokens.get(op + 1).copied().unwrap_or(""), line)?;
            let terms = linear_terms(&tokens[..op], line)?;
            model.rows.insert(name, TextRow { sense, terms, rhs });
        }
        _ => unreachable!("only objective and row statements are buffered"),
    }
    Ok(())
}

fn linear_terms(tokens: &[&str], line: usize) -> Result<BTreeMap<String, f64>, ReadError> {
    let mut terms = BTreeMap::new();
    let mut sign = 1.0;
    let mut coef: Option<f64> = None;
    for &tok in tokens {
        match tok {
            "+" => sign = 1.0,
            "-" => sign = -1.0,
            _ => {
                if let Ok(c) = tok.parse::<f64>() {
                    coef = Some(c);
                } else {
                    *terms.entry(tok.to_string()).or_insert(0.0) += sign * coef.take().unwrap_or(1.0);
                    sign = 1.0;
                }
            }
        }
    }
    if coef.is_some() && !terms.is_empty() {
        return Err(syntax(line, "dangling coefficient"));
    }
    Ok(terms)
}

fn num(tok: &str, line: usize) -> Result<f64, ReadError> {
    tok.parse().map_err(|_| syntax(line, format!("`{tok}` is not a number")))
}

/// Reads MPS text written by [`super::write_mps`], splitting fields on whitespace.
pub fn parse_mps(text: &str) -> Result<TextModel, ReadError> {
    let mut model = TextModel::default();
    let mut section = "";
    let mut objective_row = String::new();
    let mut senses: BTreeMap<String, RowSense> = BTreeMap::new();
    let mut integer = false;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        if raw.trim().is_empty() || raw.starts_with('*') {
            continue;
        }
        let t: Vec<&str> = raw.split_whitespace().collect();
        if !raw.starts_with(' ') {
            section = match t[0] {
                "NAME" | "ROWS" | "COLUMNS" | "RHS" | "BOUNDS" | "ENDATA" => t[0],
                other => return Err(syntax(line, format!("unknown section `{other}`"))),
            };
            continue;
        }
        match section {
            "ROWS" => {
                let [kind, name] = t[..] else { return Err(syntax(line, "expected `kind name`")) };
                match kind {
                    "N" => objective_row = name.to_string(),
                    "L" => {
                        senses.insert(name.to_string(), RowSense::Le);
                    }
                    "G" => {
                        senses.insert(name.to_string(), RowSense::Ge);
                    }
                    other => return Err(syntax(line, format!("unsupported row kind `{other}`"))),
                }
            }
            "COLUMNS" => {
                if t.len() == 3 && t[1] == "'MARKER'" {
                    integer = t[2] == "'INTORG'";
                    continue;
                }
                if t.len() != 3 {
                    return Err(syntax(line, "expected `column row value`"));
                }
                let (col, row, value) = (t[0], t[1], num(t[2], line)?);
                if integer {
                    model.binaries.insert(col.to_string());
                }
                if row == objective_row {
                    model.objective.insert(col.to_string(), value);
                } else {
                    let sense = *senses.get(row).ok_or_else(|| syntax(line, format!("unknown row `{row}`")))?;
                    model
                        .rows
                        .entry(row.to_string())
                        .or_insert_with(|| TextRow { sense, terms: BTreeMap::new(), rhs: 0.0 })
                        .terms
                        .insert(col.to_string(), value);
                }
            }
            "RHS" => {
                let [_, row, value] = t[..] else { return Err(syntax(line, "expected `set row value`")) };
                let value = num(value, line)?;
                let sense = *senses.get(row).ok_or_else(|| syntax(line, format!("unknown row `{row}`")))?;
                model
                    .rows
                    .entry(row.to_string())
                    .or_insert_with(|| TextRow { sense, terms: BTreeMap::new(), rhs: 0.0 })
                    .rhs = value;
            }
            "BOUNDS" => {
                let [kind, _, col, value] = t[..] else { return Err(syntax(line, "expected `kind set column value`")) };
                let value = num(value, line)?;
                let entry = model.bounds.entry(col.to_string()).or_insert((0.0, f64::INFINITY));
                match kind {
                    "LO" => entry.0 = value,
                    "UP" => entry.1 = value,
                    other => return Err(syntax(line, format!("unsupported bound `{other}`"))),
                }
            }
            _ => return Err(syntax(line, "data outside a section")),
        }
    }
    // rows with no terms and zero rhs never appear in COLUMNS or RHS
    for (name, sense) in senses {
        model.rows.entry(name).or_insert(TextRow { sense, terms: BTreeMap::new(), rhs: 0.0 });
    }
    // binaries carry explicit [0, 1] bounds in MPS; the LP side keeps them implicit
    for name in &model.binaries {
        model.bounds.remove(name);
    }
    Ok(model)
}
