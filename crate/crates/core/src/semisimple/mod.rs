//! Semisimple structure: sl2-triples through nilpotent elements,
//! characteristic gradings and their projections, reductivity, and the
//! descent used to refute very nilpotent bases of semisimple algebras.

mod descent;
mod grading;
mod refute;
mod triple;

pub use descent::{descent_step, DescentChecks, DescentStep};
pub use grading::{
    characteristic_grading, extremal_bracket_span, is_ad_semisimple, is_reductive_in,
    parabolic_nilpotency_pair, Grading,
};
pub use refute::{
    refute_very_nilpotent_basis, refute_with, DescentTrace, RefutationOutcome, RefutationReport,
    RefuteOptions,
};
pub use triple::{jacobson_morozov, Sl2Triple};
