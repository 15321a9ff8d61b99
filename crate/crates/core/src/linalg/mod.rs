//! Exact integer linear algebra: dense matrices, characteristic polynomials,
//! ranks, and root extraction.

mod charpoly;
mod matrix;
mod rank;
mod roots;

pub use charpoly::{char_poly, char_poly_faddeev_leverrier, eigenvalue_bound};
pub use matrix::IntMatrix;
pub use rank::rank;
pub use roots::{integer_roots, isolate_real_roots, FactorInfo, IsolatedRoot, RealRoots, SpectrumMultiset};
