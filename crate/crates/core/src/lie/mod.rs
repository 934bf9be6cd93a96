//! Free Lie algebras, quadratic Lie presentations and their quadratic duals.

pub mod algebra;
pub mod lyndon;
pub mod quadratic;

pub use algebra::{koszul_check, odd_algebra_dims, KoszulReport};
pub use lyndon::{free_lie_dimension, lyndon_words, LieElement, WordSpace};
pub use quadratic::{
    drinfeld_kohno, graded_dims, kernel_freeness_probe, t_odd, xi_rank, KernelProbe, QuadraticLiePresentation,
};
