//! Deterministic diameter-2 network topologies with exact metrics.
//!
//! The crate builds Brown-type orthogonality graphs over GF(q) and Z/nZ,
//! star and multiple star products (including the order-256, degree-22
//! graph `K_4 *ψ (K_8 *φ G_8)`), and the classic hypercube, torus, de
//! Bruijn and Petersen families. Every construction can be certified by
//! brute-force BFS metrics, with a Floyd–Warshall oracle for small graphs.
//!
//! Bound arithmetic is generic over the exact integer scalar (see
//! [`scalar::ExactInt`]); the aliases below fix the common choices.

pub mod algebra;
pub mod bounds;
pub mod constructions;
pub mod edgelist;
pub mod error;
pub mod generators;
pub mod graph;
pub mod planner;
pub mod scalar;

pub use error::{Error, Result};
pub use graph::{Aspl, DegreeStats, Diameter, Graph, MetricsReport};

/// Fixed-width count for bounds that are known to be small.
pub type Count = u64;
/// Unbounded count for Moore bounds of large degree or diameter.
pub type BigCount = num_bigint::BigUint;
/// Exact fraction over [`Count`].
pub type Fraction = num_rational::Ratio<Count>;
/// Exact fraction over [`BigCount`].
pub type BigFraction = num_rational::Ratio<BigCount>;
