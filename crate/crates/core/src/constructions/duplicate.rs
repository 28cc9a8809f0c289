//! Vertex duplication: new vertices copy the neighbourhood of a target, so
//! diameter 2 survives while the order grows by the copy count.

use crate::error::{input, Result};
use crate::graph::{Diameter, Graph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DuplicationPlan {
    pub base: Graph,
    /// `None` picks the lowest-id vertex of minimum degree.
    pub target: Option<usize>,
    pub copies: usize,
    /// Join the copies and the original into a clique.
    pub clique: bool,
}

impl DuplicationPlan {
    pub fn new(base: Graph, copies: usize) -> Self {
        DuplicationPlan {
            base,
            target: None,
            copies,
            clique: false,
        }
    }

    pub fn resolved_target(&self) -> usize {
        self.target.unwrap_or_else(|| min_degree_vertex(&self.base))
    }
}

pub fn min_degree_vertex(g: &Graph) -> usize {
    (0..g.order())
        .min_by_key(|&v| g.degree(v))
        .expect("graphs have at least one vertex")
}

pub fn duplicate_vertices(plan: &DuplicationPlan) -> Result<Graph> {
    let base = &plan.base;
    let target = plan.resolved_target();
    if target >= base.order() {
        return input(format!("target {target} out of range"));
    }
    if base.degree(target) == 0 {
        return input("target vertex must have at least one neighbour");
    }
    if plan.copies == 0 {
        return Ok(base.clone());
    }
    match base.diameter()? {
        Diameter::Finite(d) if d <= 2 => {}
        _ => return input("duplication needs a connected base of diameter at most 2"),
    }
    let n = base.order();
    let copies = n..n + plan.copies;
    let mut edges: Vec<(usize, usize)> = base.edges().collect();
    for c in copies.clone() {
        edges.extend(base.neighbors(target).iter().map(|&w| (c, w)));
        if plan.clique {
            edges.push((c, target));
            edges.extend((c + 1..n + plan.copies).map(|d| (c, d)));
        }
    }
    Graph::from_edges(n + plan.copies, edges)
}
