//! Common Borel and nilradical membership of tuples, and the invariant
//! polynomials whose vanishing characterizes it.

mod classify;
mod invariants;
mod multipoly;

pub use classify::{
    classify_tuple, classify_tuple_capped, cross_check, cross_check_capped, ClassifyReport,
    CrossCheckReport, CrossCheckStatus, Evidence, Verdict,
};
pub use invariants::{
    generator_value, invariant_values, symbolic_generators, symbolic_generators_capped,
    tuple_variable_names, Generator, GeneratorEntry, GeneratorExport, DEFAULT_SYMBOLIC_EXPR_CAP,
    SYMBOLIC_SIZE_LIMIT,
};
pub use multipoly::{MultiPoly, PolyExport, TermExport};
