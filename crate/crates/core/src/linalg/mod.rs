//! Exact linear algebra over the rationals: row reduction, kernels, linear
//! solves, characteristic and minimal polynomials.
//!
//! Every predicate decided downstream (nilpotency, ranks, squarefreeness)
//! is invariant under field extension, so working over the rationals gives
//! the same answers as over an algebraically closed field.

mod charpoly;
mod matrix;
mod poly;
mod rational;

pub use charpoly::{faddeev_leverrier, TraceRing};
pub use matrix::{Echelon, Matrix};
pub use poly::Polynomial;
pub use rational::{
    format_rational, int, parse_rational, rat, serde_rational, serde_rational_vec, Rational,
};
pub(crate) use rational::isqrt_floor;
