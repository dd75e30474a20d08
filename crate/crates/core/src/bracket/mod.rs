//! The grammar of iterated brackets in `n` tuple entries: expressions,
//! depth, evaluation, enumeration, exact counting, and value closures.

mod closure;
mod enumerate;
mod expr;

pub use closure::{
    find_non_nilpotent_witness, is_very_nilpotent_basis, value_closure, value_closure_capped,
    ClosureBuilder, ClosureEntry, ValueClosure, VeryNilpotentVerdict, Witness, ZeroRecord,
    DEFAULT_LAYER_CAP,
};
pub(crate) use closure::find_witness_where;
pub use enumerate::{
    count_exprs, cumulative_counts, enumerate_exprs, enumerate_exprs_capped, CountMode,
    ExprEnumerator, DEFAULT_ENUMERATION_CAP,
};
pub use expr::BracketExpr;
