//! Orthogonality graphs on projective points: vertices are line classes of
//! R^3, two distinct classes are adjacent when their dot product vanishes.

use crate::algebra::{Coordinates, FiniteField, RingZn};
use crate::error::Result;
use crate::graph::Graph;

pub fn orthogonality_graph<C: Coordinates + Sync>(ctx: &C) -> Result<Graph> {
    let points = ctx.projective_points();
    Graph::from_predicate(points.len(), |u, v| {
        ctx.dot_raw(&points[u].coords, &points[v].coords) == 0
    })
}

/// Brown's graph over GF(q): order `q²+q+1`, maximum degree `q+1`.
pub fn brown_field(q: u32) -> Result<Graph> {
    orthogonality_graph(&FiniteField::new(q)?)
}

/// The same recipe over Z/nZ.
pub fn brown_ring(n: u32) -> Result<Graph> {
    orthogonality_graph(&RingZn::new(n)?)
}
