//! Graph energy and vertex energy toolkit.
//!
//! The crate computes vertex energies by two independent routes — the
//! spectral decomposition of the adjacency matrix and a Coulson-type
//! integral over exact characteristic polynomials — and provides the graph
//! machinery (coalescence, deletions, seeded random trees and bipartite
//! graphs) plus executable checks for a family of statements about how
//! vertex energy responds to coalescence.

pub mod charpoly;
pub mod coulson;
pub mod graph;
mod intmat;
pub mod poly;
pub mod spectral;
pub mod theorems;

pub use charpoly::{
    b_coeffs, char_poly, quasi_compare, verify_coalescence_identity, verify_edge_recursion,
    BSequence, CharpolyError, QuasiOrder,
};
pub use coulson::{coulson_vertex_energy, CoulsonError, QuadratureConfig};
pub use graph::{Bipartition, CoalescenceResult, Graph, GraphError, VertexDeletion};
pub use poly::IntPolynomial;
pub use spectral::{
    eigen_sym, graph_energy, spectral_moment, vertex_energy, walk_count, weight_matrix,
    SpectralError, Spectrum, WeightMatrix,
};
