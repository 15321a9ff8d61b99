pub mod complex;
pub mod error;
pub mod laplacian;
pub mod linalg;
pub mod matroid;
pub mod poly;
pub mod random;
pub mod recursion;
pub mod shifted;

pub use error::{Error, Result};
