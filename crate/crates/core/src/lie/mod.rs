//! Lie algebras given by structure constants.
//!
//! "Nilpotent element" always means ad-nilpotent in the ambient algebra.
//! Nilpotency and solvability of subalgebras are decided on their induced
//! structure constants, never through the ambient adjoint action.

mod algebra;
mod automorphism;
pub mod catalog;
mod element;
mod io;
mod subalgebra;

pub use algebra::{JacobiFailure, LieAlgebra, SparseVec, ValidationReport};
pub use automorphism::apply;
pub use element::Element;
pub use io::TupleFile;
pub use subalgebra::{SeriesKind, Subalgebra};
pub(crate) use algebra::trace_of_product;
pub(crate) use subalgebra::bracket_span;
