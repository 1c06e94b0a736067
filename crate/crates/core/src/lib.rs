//! Exact spectral toolkit for oriented line graphs.
//!
//! Doubling every edge of a simple graph and forbidding immediate
//! reversals yields the oriented line graph, whose adjacency matrix is the
//! non-backtracking matrix. For a connected regular base graph, the
//! characteristic polynomials of that matrix and its relatives (the
//! underlying undirected graph, the line graph, the skew and Hermitian
//! forms, and a signed line graph induced by any orientation) all have
//! closed forms in terms of the base adjacency spectrum. This crate
//! constructs the objects, computes both sides of each identity with exact
//! integer arithmetic, and explores the star-coloring and homomorphism
//! structure that accompanies them.
//!
//! Modules:
//! - [`graph`]: simple graphs, digraphs, signed graphs, regularity checks.
//! - [`graph6`]: parser and writer for the compact ASCII graph encoding.
//! - [`generate`]: standard families (complete, cycle, hypercube, ...).
//! - [`enumerate`]: exhaustive catalogs of small graphs and cubic graphs.
//! - [`algebra`]: big-integer polynomials and matrices, exact
//!   characteristic polynomials, integer root extraction.
//! - [`lineops`]: the oriented line graph, orientations, projections, and
//!   operator matrices.
//! - [`identities`]: closed-form spectra and their exact verification.
//! - [`star`]: star colorings, neighborhood-constrained homomorphisms, and
//!   the characteristic polynomial divisibility they certify.

pub mod algebra;
pub mod enumerate;
pub mod generate;
pub mod graph;
pub mod graph6;
pub mod identities;
pub mod lineops;
pub mod star;

pub use algebra::{
    charpoly_exact, charpoly_hermitian_exact, factored_string, integrality_check, GaussianInt,
    GaussianMatrix, IntMatrix, IntPolynomial, IntegerSplit,
};
pub use graph::{validate_regular_connected, Digraph, Graph, SignedGraph};
pub use graph6::{parse_graph6, write_graph6};
pub use identities::{
    formula_hermitian, formula_line, formula_lstar, formula_nonbacktracking, formula_signed,
    formula_skew, verify_identity, IdentityKind, RegularSpectrumHandle, VerificationReport,
};
pub use lineops::{
    operator_matrix, orientation_partition, oriented_line_graph, signed_line_graph,
    symmetric_digraph, underlying_and_line_graph, ArcIndex, LineProjection, OperatorKind,
    OperatorMatrix, Orientation,
};
pub use star::{
    coloring_to_onih, find_lbh, find_onh, is_lbh, is_onh, is_star_coloring, onih_to_coloring,
    star_chromatic_number, star_divisibility, Coloring, OnhMode, StarSearchOutcome, VertexMap,
};
