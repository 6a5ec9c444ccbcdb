//! DIMACS `.col` reading and writing. Vertices are 1-based in the text and
//! 0-based in [`Graph`].

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Parses DIMACS `.col` text.
///
/// Accepts `c` comments, one `p edge <n> <m>` (or `p col`) line and `e u v`
/// lines. Duplicate edges collapse; a mismatch with the declared edge count
/// is logged, not rejected. `n` lines (vertex weights) are ignored.
pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut declared = 0usize;
    let mut edges = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let mut tokens = raw.split_whitespace();
        let Some(kind) = tokens.next() else { continue };
        match kind {
            "c" => {}
            "p" => {
                if n.is_some() {
                    return Err(Error::DuplicateProblemLine { line });
                }
                let format = tokens.next().ok_or_else(|| malformed(line, "missing format"))?;
                if format != "edge" && format != "col" {
                    return Err(malformed(line, &format!("unknown format `{format}`")));
                }
                n = Some(number(tokens.next(), line)? as usize);
                declared = number(tokens.next(), line)? as usize;
                expect_end(tokens, line)?;
            }
            "e" => {
                let Some(nv) = n else { return Err(Error::MissingHeader { line }) };
                let u = vertex(tokens.next(), nv, line)?;
                let v = vertex(tokens.next(), nv, line)?;
                expect_end(tokens, line)?;
                if u == v {
                    return Err(Error::SelfLoop { line, vertex: u });
                }
                edges.push((u, v));
            }
            "n" => {}
            other => return Err(malformed(line, &format!("unknown line type `{other}`"))),
        }
    }

    let n = n.ok_or(Error::NoProblemLine)?;
    let g = Graph::from_edges(n, edges)?;
    if g.num_edges() != declared {
        log::warn!("DIMACS header declares {declared} edges, found {} distinct", g.num_edges());
    }
    Ok(g)
}

/// Writes `p edge n m` followed by one `e u v` line per edge (`u < v`, 1-based).
pub fn write_dimacs(g: &Graph) -> String {
    let mut out = String::with_capacity(16 + 12 * g.num_edges());
    let _ = writeln!(out, "p edge {} {}", g.n(), g.num_edges());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

fn malformed(line: usize, reason: &str) -> Error {
    Error::Malformed { line, reason: reason.to_string() }
}

fn number(tok: Option<&str>, line: usize) -> Result<u64> {
    let tok = tok.ok_or_else(|| malformed(line, "missing integer"))?;
    tok.parse().map_err(|_| malformed(line, &format!("`{tok}` is not a nonnegative integer")))
}

fn vertex(tok: Option<&str>, n: usize, line: usize) -> Result<usize> {
    let v = number(tok, line)?;
    if v == 0 || v > n as u64 {
        return Err(Error::VertexOutOfRange { line, vertex: v, n });
    }
    Ok(v as usize - 1)
}

fn expect_end<'a>(mut tokens: impl Iterator<Item = &'a str>, line: usize) -> Result<()> {
    match tokens.next() {
        Some(extra) => Err(malformed(line, &format!("unexpected token `{extra}`"))),
        None => Ok(()),
    }
}
