//! Diameter-2 constructions: Brown-type orthogonality graphs, vertex
//! duplication, star products and the `G_8` family.

mod brown;
mod duplicate;
mod g8;
mod star;

pub use brown::{brown_field, brown_ring, orthogonality_graph};
pub use duplicate::{duplicate_vertices, min_degree_vertex, DuplicationPlan};
pub use g8::{
    g8, g8_adjacent, g8_id, kg8, kg8_spec, kkg8, kkg8_spec, lifted_psi, phi, phi_permutation, psi,
    psi_permutations, verify_prop1_machinery, G8Vertex, SubsetAdjacencyReport, G8_VERTICES,
    PSI_TABLES,
};
pub use star::{multiple_star_product, star_product, Permutation, StarSpec};
