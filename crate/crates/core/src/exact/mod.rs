//! Exact rational arithmetic and sparse linear algebra.

mod matrix;
mod rational;
mod registry;
mod sparse;

pub use matrix::{MatrixError, RationalMatrix};
pub use rational::{ParseRationalError, Rational};
pub use registry::BasisRegistry;
pub use sparse::{Echelon, SparseVec};
