//! Exact integer and Gaussian-integer algebra: polynomials, matrices,
//! characteristic polynomials, and integer root extraction.

pub mod charpoly;
pub mod gaussian;
pub mod matrix;
pub mod poly;
pub mod roots;

pub use charpoly::{charpoly_exact, charpoly_hermitian_exact, det_exact};
pub use gaussian::GaussianInt;
pub use matrix::{GaussianMatrix, IntMatrix, MatrixError};
pub use poly::{poly_product_power, IntPolynomial, PolyDivError};
pub use roots::{factored_string, integrality_check, IntegerSplit, RootError};
