//! The 8-vertex block `G_8`, its products `K_n *φ G_8` and
//! `K_a *ψ (K_b *φ G_8)`, and an executable check of the subset
//! adjacencies that give the latter diameter 2.

use std::collections::BTreeSet;

use crate::constructions::star::{multiple_star_product, star_product, Permutation, StarSpec};
use crate::error::{input, Result};
use crate::generators::complete;
use crate::graph::Graph;

/// A vertex `(i, j)` of `G_8`.
pub type G8Vertex = (u8, u8);

/// `V(G_8)` in id order.
pub const G8_VERTICES: [G8Vertex; 8] = [
    (0, 0),
    (0, 1),
    (1, 0),
    (1, 1),
    (1, 2),
    (2, 0),
    (2, 1),
    (2, 2),
];

/// The four ψ levels as `(source, image)` pairs. They do not depend on the arc.
pub const PSI_TABLES: [[(G8Vertex, G8Vertex); 8]; 4] = [
    [
        ((0, 0), (0, 0)),
        ((1, 0), (0, 1)),
        ((1, 1), (1, 0)),
        ((1, 2), (2, 1)),
        ((0, 1), (1, 1)),
        ((2, 0), (2, 2)),
        ((2, 1), (1, 2)),
        ((2, 2), (2, 0)),
    ],
    [
        ((0, 0), (0, 1)),
        ((1, 0), (1, 0)),
        ((1, 1), (2, 1)),
        ((1, 2), (0, 0)),
        ((0, 1), (2, 2)),
        ((2, 0), (1, 2)),
        ((2, 1), (2, 0)),
        ((2, 2), (1, 1)),
    ],
    [
        ((0, 0), (1, 0)),
        ((1, 0), (2, 1)),
        ((1, 1), (0, 0)),
        ((1, 2), (0, 1)),
        ((0, 1), (1, 2)),
        ((2, 0), (2, 0)),
        ((2, 1), (1, 1)),
        ((2, 2), (2, 2)),
    ],
    [
        ((0, 0), (2, 1)),
        ((1, 0), (0, 0)),
        ((1, 1), (0, 1)),
        ((1, 2), (1, 0)),
        ((0, 1), (2, 0)),
        ((2, 0), (1, 1)),
        ((2, 1), (2, 2)),
        ((2, 2), (1, 2)),
    ],
];

pub fn g8_id(v: G8Vertex) -> usize {
    G8_VERTICES
        .iter()
        .position(|&w| w == v)
        .expect("vertex of G_8")
}

/// Adjacency predicate of `G_8`: groups 0 and 1 are completely joined,
/// group 2 is a triangle, and groups 1 and 2 are matched on equal `j`.
pub fn g8_adjacent(a: G8Vertex, b: G8Vertex) -> bool {
    match (a.0, b.0) {
        (0, 1) | (1, 0) => true,
        (2, 2) => a != b,
        (1, 2) | (2, 1) => a.1 == b.1,
        _ => false,
    }
}

pub fn g8() -> Graph {
    Graph::from_predicate(8, |u, v| g8_adjacent(G8_VERTICES[u], G8_VERTICES[v]))
        .expect("order is positive")
}

/// φ: `(0,j) -> (0,1-j)`, `(1,j) -> (2,j+1)`, `(2,j) -> (1,j-1)` (mod 3).
pub fn phi(v: G8Vertex) -> G8Vertex {
    match v {
        (0, j) => (0, 1 - j),
        (1, j) => (2, (j + 1) % 3),
        (_, j) => (1, (j + 2) % 3),
    }
}

pub fn psi(level: usize, v: G8Vertex) -> G8Vertex {
    PSI_TABLES[level]
        .iter()
        .find(|(src, _)| *src == v)
        .map(|&(_, img)| img)
        .expect("ψ tables cover V(G_8)")
}

fn permutation_of(f: impl Fn(G8Vertex) -> G8Vertex) -> Permutation {
    Permutation::new(G8_VERTICES.iter().map(|&v| g8_id(f(v))).collect())
        .expect("printed tables are bijections")
}

pub fn phi_permutation() -> Permutation {
    permutation_of(phi)
}

pub fn psi_permutations() -> Vec<Permutation> {
    (0..PSI_TABLES.len())
        .map(|l| permutation_of(|v| psi(l, v)))
        .collect()
}

/// Star product spec of `K_n` (arcs low to high) carrying φ on every arc.
pub fn kg8_spec(n: u32) -> Result<StarSpec> {
    StarSpec::uniform(complete(n)?, vec![phi_permutation()])
}

/// `K_n *φ G_8`: order `8n`, `(n+2)`-regular, diameter 2 for `n >= 3`.
pub fn kg8(n: u32) -> Result<Graph> {
    if n < 1 {
        return input("kg8 needs n >= 1");
    }
    star_product(&kg8_spec(n)?, &g8())
}

/// ψ lifted to `V(K_b *φ G_8)`: the `K_b` coordinate is left alone.
pub fn lifted_psi(b: u32) -> Vec<Permutation> {
    psi_permutations()
        .iter()
        .map(|p| {
            let images = (0..8 * b as usize)
                .map(|id| (id / 8) * 8 + p.apply(id % 8))
                .collect();
            Permutation::new(images).expect("lift of a bijection")
        })
        .collect()
}

pub fn kkg8_spec(a: u32, b: u32) -> Result<StarSpec> {
    StarSpec::uniform(complete(a)?, lifted_psi(b))
}

/// `K_a *ψ (K_b *φ G_8)` with ids nested as `(K_a, (K_b, G_8))`: order
/// `8ab`, `(4a+b-2)`-regular and diameter 2 for `a >= 2`, `b >= 3`.
pub fn kkg8(a: u32, b: u32) -> Result<Graph> {
    if a < 1 {
        return input("kkg8 needs a >= 1");
    }
    if b < 3 {
        return input("kkg8 needs b >= 3 so the inner product has diameter 2");
    }
    multiple_star_product(&kkg8_spec(a, b)?, &kg8(b)?)
}

/// Outcome of checking the subset adjacencies behind the diameter-2 proof
/// for `K_a *ψ (K_b *φ G_8)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetAdjacencyReport {
    pub a: Vec<G8Vertex>,
    pub b: Vec<G8Vertex>,
    pub c: Vec<G8Vertex>,
    pub d: Vec<G8Vertex>,
    pub a_b_partition: bool,
    pub c_d_partition: bool,
    pub c_adjacent_d: bool,
    pub psi_maps_a_to_c: bool,
    pub psi_maps_b_to_d: bool,
    /// φ exchanges A and B, used on the steps that change the K_b coordinate.
    pub phi_swaps_a_b: bool,
    /// φ fixes C and D setwise.
    pub phi_preserves_c_d: bool,
}

impl SubsetAdjacencyReport {
    pub fn flags(&self) -> [(&'static str, bool); 7] {
        [
            ("A ⊔ B = V(G8)", self.a_b_partition),
            ("C ⊔ D = V(G8)", self.c_d_partition),
            ("C ~ D in G8", self.c_adjacent_d),
            ("ψ(A) images = C", self.psi_maps_a_to_c),
            ("ψ(B) images = D", self.psi_maps_b_to_d),
            ("φ swaps A and B", self.phi_swaps_a_b),
            ("φ preserves C and D", self.phi_preserves_c_d),
        ]
    }

    pub fn passed(&self) -> bool {
        self.flags().iter().all(|&(_, ok)| ok)
    }
}

/// `S ~ T`: each side has a distinct adjacent partner on the other side.
fn subsets_adjacent(s: &[G8Vertex], t: &[G8Vertex]) -> bool {
    let covers = |from: &[G8Vertex], to: &[G8Vertex]| {
        from.iter()
            .all(|&x| to.iter().any(|&y| x != y && g8_adjacent(x, y)))
    };
    covers(s, t) && covers(t, s)
}

fn is_partition(x: &[G8Vertex], y: &[G8Vertex]) -> bool {
    let xs: BTreeSet<_> = x.iter().copied().collect();
    let ys: BTreeSet<_> = y.iter().copied().collect();
    let all: BTreeSet<_> = G8_VERTICES.iter().copied().collect();
    xs.len() == x.len()
        && ys.len() == y.len()
        && xs.is_disjoint(&ys)
        && xs.union(&ys).copied().collect::<BTreeSet<_>>() == all
}

fn psi_orbit(v: G8Vertex) -> BTreeSet<G8Vertex> {
    (0..PSI_TABLES.len()).map(|l| psi(l, v)).collect()
}

pub fn verify_prop1_machinery() -> SubsetAdjacencyReport {
    let a = vec![(0, 0), (1, 0), (1, 1), (1, 2)];
    let b = vec![(0, 1), (2, 0), (2, 1), (2, 2)];
    let c = vec![(0, 0), (0, 1), (1, 0), (2, 1)];
    let d = vec![(1, 1), (2, 2), (1, 2), (2, 0)];
    let set = |s: &[G8Vertex]| s.iter().copied().collect::<BTreeSet<_>>();
    let image = |s: &[G8Vertex]| s.iter().map(|&v| phi(v)).collect::<BTreeSet<_>>();
    SubsetAdjacencyReport {
        a_b_partition: is_partition(&a, &b),
        c_d_partition: is_partition(&c, &d),
        c_adjacent_d: subsets_adjacent(&c, &d),
        psi_maps_a_to_c: a.iter().all(|&v| psi_orbit(v) == set(&c)),
        psi_maps_b_to_d: b.iter().all(|&v| psi_orbit(v) == set(&d)),
        phi_swaps_a_b: image(&a) == set(&b) && image(&b) == set(&a),
        phi_preserves_c_d: image(&c) == set(&c) && image(&d) == set(&d),
        a,
        b,
        c,
        d,
    }
}
