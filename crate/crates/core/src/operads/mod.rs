//! Operads `As`, `Com`, `Pois₁`, free operads with presentations, and the
//! cobar complex of the coinvariant cooperad of `As`.

pub mod assoc;
pub mod cobar;
pub mod free;
pub mod hopf;
pub mod pois;
pub mod presentation;

pub use assoc::{as_invariant_dimension, AsElement, Flip};
pub use cobar::cobar_complex;
pub use free::{free_operad_basis, normalize, parse_term, Generator, Symmetry, Term, TermChain, TermError};
pub use hopf::{check_hopf_coideal, HopfReport};
pub use pois::{pois_invariant_dimension, PoisElement};
pub use presentation::{
    evaluate, ideal_rank, invariant_dimension, quotient_dimension, relation_kernel, verify_eq11_shape, Eq11Report,
    OperadModel, Presentation, Relation, Target, Value,
};
