use num_bigint::BigUint;
use thiserror::Error;

use crate::bracket::ValueClosure;

/// Errors raised by the toolkit.
///
/// Mathematical verdicts (non-nilpotent, not solvable, ...) are never errors;
/// these variants only signal malformed input or violated preconditions.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("the zero polynomial is not allowed here")]
    ZeroPolynomial,
    #[error("element is not ad-nilpotent")]
    NotAdNilpotent,
    #[error("element must be nonzero")]
    ZeroElement,
    #[error("algebra is not semisimple (Killing form is degenerate)")]
    NotSemisimple,
    #[error("subspace is not closed under the bracket")]
    NotClosed,
    #[error("unknown catalog family `{0}`")]
    UnknownFamily(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("expression uses y{leaf} but the tuple has {arity} entries")]
    ArityMismatch { leaf: usize, arity: usize },
    #[error("enumeration refused: {count} expressions exceed the cap {cap}")]
    EnumerationCap { count: BigUint, cap: u64 },
    #[error("value closure layer {depth} reached {size} values, above the cap {cap}")]
    LayerCap {
        depth: usize,
        size: usize,
        cap: usize,
        partial: Box<ValueClosure>,
    },
    #[error("linear system for the sl2-triple is inconsistent; input violates a precondition")]
    InconsistentSystem,
    #[error("ad_h is not diagonalizable")]
    NotDiagonalizable,
    #[error("ad_h has eigenvalues that are not integers")]
    NonIntegerSpectrum,
    #[error("grading is trivial")]
    TrivialGrading,
    #[error("element has a component of negative weight {0}")]
    NegativeComponent(i64),
    #[error("tuple does not span the algebra (rank {rank} < {dim})")]
    NotSpanning { rank: usize, dim: usize },
    #[error("index {index} out of range (< {bound} required)")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("size gate exceeded: {0}")]
    SizeGate(String),
    #[error("bracket fails the Jacobi identity on basis triple ({0}, {1}, {2})")]
    JacobiViolation(usize, usize, usize),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
