//! Exact computations around the real moduli spaces `M̄_{0,n+1}(ℝ)`: the
//! mosaic cell complex, invariant suboperads of `As` and `Pois_1`, oriented
//! odd graph complexes and the quadratic Lie algebras dual to them.

pub mod cacti;
pub mod chain;
pub mod exact;
pub mod graphs;
pub mod lie;
pub mod operads;
pub mod series;
pub mod trees;
