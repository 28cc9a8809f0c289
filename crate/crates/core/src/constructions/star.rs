//! Star products `G1 *φ G2` and their m-multiple generalization.
//!
//! Each edge of `G1` is oriented once; every arc `(u, w)` carries `m`
//! permutations of `V(G2)`. Vertex `(u, v)` is joined to `(u, x)` for each
//! edge `vx` of `G2`, and to `(w, π(v))` for each permutation `π` on the
//! arc `(u, w)`. Product ids are row-major: `|V(G2)| * u + v`.

use std::collections::HashSet;

use crate::error::{input, Result};
use crate::graph::Graph;

/// A bijection on `0..len`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            if x >= images.len() || std::mem::replace(&mut seen[x], true) {
                return input("permutation table is not a bijection");
            }
        }
        Ok(Permutation(images))
    }

    pub fn identity(len: usize) -> Self {
        Permutation((0..len).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, v: usize) -> usize {
        self.0[v]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }
}

/// Orientation of a base graph plus `m` permutations per arc.
#[derive(Debug, Clone)]
pub struct StarSpec {
    base: Graph,
    arcs: Vec<(usize, usize)>,
    levels: Vec<Vec<Permutation>>,
}

impl StarSpec {
    /// `levels[i]` holds the permutations for `arcs[i]`.
    pub fn new(
        base: Graph,
        arcs: Vec<(usize, usize)>,
        levels: Vec<Vec<Permutation>>,
    ) -> Result<Self> {
        if arcs.len() != base.num_edges() {
            return input(format!(
                "{} arcs given for {} edges",
                arcs.len(),
                base.num_edges()
            ));
        }
        let mut covered = HashSet::with_capacity(arcs.len());
        for &(u, w) in &arcs {
            if !base.has_edge(u, w) {
                return input(format!("arc ({u}, {w}) is not an edge of the base graph"));
            }
            if !covered.insert((u.min(w), u.max(w))) {
                return input(format!("edge {{{u}, {w}}} is oriented twice"));
            }
        }
        if levels.len() != arcs.len() {
            return input("every arc needs a permutation list");
        }
        let m = levels.first().map_or(1, Vec::len);
        if m == 0 || levels.iter().any(|l| l.len() != m) {
            return input("every arc needs the same positive number of permutations");
        }
        let width = levels.first().and_then(|l| l.first()).map(Permutation::len);
        if levels.iter().flatten().any(|p| Some(p.len()) != width) {
            return input("permutations act on sets of different sizes");
        }
        Ok(StarSpec { base, arcs, levels })
    }

    /// Orients every edge from the lower id to the higher one and uses the
    /// same permutations on every arc.
    pub fn uniform(base: Graph, perms: Vec<Permutation>) -> Result<Self> {
        let arcs: Vec<_> = base.edges().collect();
        let levels = vec![perms; arcs.len()];
        StarSpec::new(base, arcs, levels)
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn levels(&self, arc: usize) -> &[Permutation] {
        &self.levels[arc]
    }

    pub fn multiplicity(&self) -> usize {
        self.levels.first().map_or(1, Vec::len)
    }
}

/// Ordinary star product; the spec must carry exactly one permutation per arc.
pub fn star_product(spec: &StarSpec, g2: &Graph) -> Result<Graph> {
    if spec.multiplicity() != 1 {
        return input("star product takes one permutation per arc");
    }
    multiple_star_product(spec, g2)
}

pub fn multiple_star_product(spec: &StarSpec, g2: &Graph) -> Result<Graph> {
    let width = g2.order();
    if spec.levels.iter().flatten().any(|p| p.len() != width) {
        return input(format!("permutations must act on {width} vertices"));
    }
    let order = spec.base.order() * width;
    let fibres = (0..spec.base.order())
        .flat_map(|u| g2.edges().map(move |(v, x)| (u * width + v, u * width + x)));
    let across = spec
        .arcs
        .iter()
        .zip(&spec.levels)
        .flat_map(|(&(u, w), perms)| {
            perms
                .iter()
                .flat_map(move |p| (0..width).map(move |v| (u * width + v, w * width + p.apply(v))))
        });
    Graph::from_edges(order, fibres.chain(across))
}
