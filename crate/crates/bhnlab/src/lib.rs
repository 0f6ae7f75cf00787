//! Exact invariants of small graphs on at most 64 vertices.
//!
//! The crate computes the bipartite-hole-number and classical hamiltonicity
//! invariants, reads and writes the graph6 interchange format, constructs and
//! recognizes the extremal families that make the degree and degree-sum
//! bounds sharp, and exhaustively certifies those bounds over built-in or
//! streamed graph catalogs.
//!
//! Graphs are immutable bitset structures: one `u64` adjacency row per
//! vertex. Every operation is pure, so values can be shared freely across
//! threads; the verification harness fans catalog scans out with rayon.

pub mod bhn;
pub mod families;
pub mod g6;
pub mod graph;
pub mod hamilton;
pub mod verify;

pub use graph::{CanonicalCode, Graph, GraphError, Sigma2, VertexSet};
