//! Directed graphs with numbered external and unlabeled internal vertices.
//! Edges have odd degree and internal vertices even degree, so a graph is
//! oriented by an ordering of its edges.

mod canonical;
pub mod gc;
mod graph;
pub mod icg;

use std::collections::BTreeMap;

use crate::exact::Rational;

pub use canonical::{canonical_form, OrientedClass};
pub use gc::{connected_dags, gc_splitting_chain, gc_splitting_differential, leading_mc_shapes, solve_mc_leading, McLeading};
pub use graph::{DirectedGraph, GraphError, Regime};
pub use icg::{
    contraction_row, enumerate_icg, enumerate_icg_within, icg_complex, icg_differential, icg_homology, IcgHomology,
    IcgLimits,
};

/// Linear combination of canonical graphs.
pub type GraphChain = BTreeMap<DirectedGraph, Rational>;
