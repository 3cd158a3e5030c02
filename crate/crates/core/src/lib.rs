//! Exact computation and verification of the k-distance mutual-visibility
//! number of finite connected graphs: the visibility predicate, a
//! brute-force oracle and a branch-and-bound solver, generators and
//! closed-form values for the families with known answers, the hardness
//! gadget, and the general bounds.

#![forbid(unsafe_code)]

pub mod bounds;
pub mod error;
pub mod families;
pub mod graph;
pub mod reduction;
pub mod solver;
pub mod vertex_set;
pub mod visibility;

pub use error::{Error, Result};
pub use graph::{all_pairs, from_edge_list, DistanceMatrix, Girth, Graph, ParsedGraph};
pub use solver::{mu_k_bruteforce, mu_k_exact, mu_k_exact_with, SolveOptions, SolveResult};
pub use vertex_set::VertexSet;
pub use visibility::{geodesic_exists_avoiding, is_k_mv_set, is_sk_visible};
