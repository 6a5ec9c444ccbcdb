//! Reference computations shared by the integration tests. Everything here is
//! written from the definitions and avoids the library's own helpers.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use pair014_core::{Coloring, Graph, LinearConstraint, PairAssignment, PairVars, Rational, Sense, VarRef};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Each vertex takes a uniformly random color among those in `0..n` unused
/// by its already-colored neighbors.
pub fn random_proper_coloring(rng: &mut impl Rng, g: &Graph) -> Coloring {
    let n = g.n();
    let mut colors = vec![usize::MAX; n];
    let mut order: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        order.swap(i, rng.random_range(0..=i));
    }
    for &v in &order {
        let free: Vec<usize> = (0..n).filter(|&c| g.neighbors(v).all(|u| colors[u] != c)).collect();
        colors[v] = free[rng.random_range(0..free.len())];
    }
    Coloring::new(colors)
}

pub fn count_colors(c: &[usize]) -> usize {
    c.iter().collect::<BTreeSet<_>>().len()
}

/// Every set partition of `0..n` as a restricted growth string.
pub fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    fn extend(cur: &mut Vec<usize>, n: usize, blocks: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for b in 0..=blocks {
            cur.push(b);
            extend(cur, n, blocks.max(b + 1), out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), n, 0, &mut out);
    out
}

/// Partitions whose blocks are independent sets, i.e. proper colorings up to
/// renaming colors.
pub fn proper_partitions(g: &Graph) -> Vec<Vec<usize>> {
    set_partitions(g.n()).into_iter().filter(|c| g.edges().iter().all(|&(u, v)| c[u] != c[v])).collect()
}

/// `x_uv = [c_u == c_v]` over the pair variables.
pub fn x_of(pairs: &PairVars, c: &[usize]) -> Vec<bool> {
    pairs.vars().iter().map(|p| c[p.u] == c[p.v]).collect()
}

pub fn assignment(pairs: &PairVars, c: &[usize]) -> PairAssignment {
    PairAssignment::from_values(x_of(pairs, c))
}

/// Bit pattern `mask` as values for `len` pair variables.
pub fn from_mask(mask: u64, len: usize) -> Vec<bool> {
    (0..len).map(|i| mask >> i & 1 == 1).collect()
}

/// Whether `row` holds at `x` and `fv`, evaluated from its terms.
pub fn row_holds(row: &LinearConstraint, x: &[bool], fv: &[Rational]) -> bool {
    let lhs: Rational = row
        .terms
        .iter()
        .map(|&(var, coef)| match var {
            VarRef::Pair(id) => {
                if x[id] {
                    coef
                } else {
                    Rational::from_integer(0)
                }
            }
            VarRef::Fv(v) => coef * fv[v],
        })
        .sum();
    match row.sense {
        Sense::Le => lhs <= row.rhs,
        Sense::Ge => lhs >= row.rhs,
    }
}

/// The unreduced triangle system: all three orientations of every triple,
/// with `x_uv = 0` on edges.
pub fn full_triangle_system_holds(g: &Graph, pairs: &PairVars, x: &[bool]) -> bool {
    let n = g.n();
    let val = |a: usize, b: usize| -> i32 {
        if g.has_edge(a, b) {
            0
        } else {
            i32::from(x[pairs.id(a, b).unwrap()])
        }
    };
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if a != b && b != c && a != c && b < c && val(a, b) + val(a, c) - val(b, c) > 1 {
                    return false;
                }
            }
        }
    }
    true
}

/// Largest independent set containing `v`, by subset enumeration.
pub fn brute_max_independent_with(g: &Graph, v: usize) -> usize {
    let n = g.n();
    (0u32..1 << n)
        .filter(|m| m >> v & 1 == 1)
        .filter(|m| g.edges().iter().all(|&(a, b)| !(m >> a & 1 == 1 && m >> b & 1 == 1)))
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap()
}

/// Chromatic number by trying every set partition.
pub fn brute_chromatic(g: &Graph) -> usize {
    proper_partitions(g).iter().map(|c| count_colors(c)).min().unwrap_or(0)
}

/// Solution values by variable name for coloring `c`: `x_u_v` 1-based and
/// `f_v = 1 / (1 + number of other vertices sharing v's color)`.
pub fn solution_values(g: &Graph, c: &[usize]) -> BTreeMap<String, f64> {
    let n = g.n();
    let mut values = BTreeMap::new();
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) {
                values.insert(format!("x_{}_{}", u + 1, v + 1), f64::from(u8::from(c[u] == c[v])));
            }
        }
    }
    for v in 0..n {
        let d = (0..n).filter(|&u| u != v && c[u] == c[v]).count();
        values.insert(format!("f_{}", v + 1), 1.0 / (1.0 + d as f64));
    }
    values
}
