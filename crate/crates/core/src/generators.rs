//! Classic interconnect families with their closed-form parameters.
//!
//! Vertex ids are fixed encodings so emitted edge lists are stable:
//!
//! * Petersen: `(i, j)` with `i ∈ {0,1}`, `j ∈ 0..5` has id `5i + j`.
//! * hypercube: the bit vector itself, bit `i` is coordinate `i`.
//! * torus grid: mixed radix, coordinate 0 least significant.
//! * de Bruijn: the word `a1 a2 … an` in base `t`, `a1` most significant.

use crate::error::{input, Result};
use crate::graph::Graph;

/// A parameterized family together with the parameters it is expected to
/// realize.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Petersen,
    Hypercube { n: u32 },
    Torus { m: u32, n: u32 },
    DeBruijn { t: u32, n: u32 },
    Complete { n: u32 },
    Cycle { n: u32 },
}

/// Closed-form predictions for a family instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyParams {
    pub family: &'static str,
    pub params: Vec<u32>,
    pub predicted_order: usize,
    pub predicted_max_degree: usize,
    /// For de Bruijn graphs this is an upper bound, not an exact value.
    pub predicted_diameter: u32,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Petersen => "petersen",
            Family::Hypercube { .. } => "hypercube",
            Family::Torus { .. } => "torus",
            Family::DeBruijn { .. } => "debruijn",
            Family::Complete { .. } => "complete",
            Family::Cycle { .. } => "cycle",
        }
    }

    pub fn params(&self) -> FamilyParams {
        let (params, order, degree, diameter) = match *self {
            Family::Petersen => (vec![], 10, 3, 2),
            Family::Hypercube { n } => (vec![n], 1usize << n, n as usize, n),
            Family::Torus { m, n } => {
                (vec![m, n], (m as usize).pow(n), 2 * n as usize, n * (m / 2))
            }
            Family::DeBruijn { t, n } => (vec![t, n], (t as usize).pow(n), 2 * t as usize, n),
            Family::Complete { n } => (
                vec![n],
                n as usize,
                (n as usize).saturating_sub(1),
                u32::from(n >= 2),
            ),
            Family::Cycle { n } => (vec![n], n as usize, 2, n / 2),
        };
        FamilyParams {
            family: self.name(),
            params,
            predicted_order: order,
            predicted_max_degree: degree,
            predicted_diameter: diameter,
        }
    }

    pub fn build(&self) -> Result<Graph> {
        match *self {
            Family::Petersen => Ok(petersen()),
            Family::Hypercube { n } => hypercube(n),
            Family::Torus { m, n } => torus_grid(m, n),
            Family::DeBruijn { t, n } => de_bruijn_undirected(t, n),
            Family::Complete { n } => complete(n),
            Family::Cycle { n } => cycle(n),
        }
    }
}

// Keeps generated instances well inside memory.
const MAX_GENERATED_ORDER: usize = 1 << 24;

fn checked_order(base: u32, exp: u32) -> Result<usize> {
    match (base as usize).checked_pow(exp) {
        Some(n) if n <= MAX_GENERATED_ORDER => Ok(n),
        _ => input(format!("{base}^{exp} vertices is too large to generate")),
    }
}

/// The Petersen graph in the `(i, j)` presentation: same `i` joins
/// `j = l ± 1 (mod 5)`, different `i` joins outer `j` to inner `l` when
/// `j = 2l (mod 5)`.
pub fn petersen() -> Graph {
    Graph::from_predicate(10, |a, b| {
        let (i, j) = (a / 5, a % 5);
        let (k, l) = (b / 5, b % 5);
        if i == k {
            (j + 1) % 5 == l || (l + 1) % 5 == j
        } else {
            let (outer, inner) = if i == 0 { (j, l) } else { (l, j) };
            outer == (2 * inner) % 5
        }
    })
    .expect("order is positive")
}

pub fn hypercube(n: u32) -> Result<Graph> {
    if n < 1 {
        return input("hypercube dimension must be at least 1");
    }
    let order = checked_order(2, n)?;
    let edges = (0..order).flat_map(|v| {
        (0..n)
            .map(move |bit| (v, v ^ (1 << bit)))
            .filter(|&(u, w)| u < w)
    });
    Graph::from_edges(order, edges)
}

pub fn torus_grid(m: u32, n: u32) -> Result<Graph> {
    if m <= 2 {
        return input("torus modulus must exceed 2");
    }
    if n < 1 {
        return input("torus dimension must be at least 1");
    }
    let order = checked_order(m, n)?;
    let m = m as usize;
    let edges = (0..order).flat_map(move |v| {
        let mut stride = 1;
        (0..n).map(move |_| {
            let coord = (v / stride) % m;
            let up = if coord + 1 == m {
                v - coord * stride
            } else {
                v + stride
            };
            stride *= m;
            (v, up)
        })
    });
    Graph::from_edges(order, edges)
}

/// Undirected de Bruijn graph: a word is joined to each of its one-letter
/// shifts. Self-loops from constant words are dropped and the two arcs
/// between a word and its reverse shift collapse into one edge.
pub fn de_bruijn_undirected(t: u32, n: u32) -> Result<Graph> {
    if t < 2 || n < 2 {
        return input("de Bruijn graphs need t >= 2 and n >= 2");
    }
    let order = checked_order(t, n)?;
    let t = t as usize;
    let edges = (0..order).flat_map(move |v| {
        let shifted = (v * t) % order;
        (0..t)
            .map(move |c| (v, shifted + c))
            .filter(|&(u, w)| u != w)
    });
    Graph::from_edges(order, edges)
}

pub fn complete(n: u32) -> Result<Graph> {
    if n < 1 {
        return input("complete graph needs at least one vertex");
    }
    Graph::from_predicate(n as usize, |_, _| true)
}

pub fn cycle(n: u32) -> Result<Graph> {
    if n < 3 {
        return input("cycle length must be at least 3");
    }
    let n = n as usize;
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}
