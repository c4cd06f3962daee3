use thiserror::Error;

/// Errors raised by the algebra routines.
///
/// Search failures (`Exhausted`) are ordinary outcomes on finite rings and
/// carry enough context for a report; everything else signals malformed input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("2 is not a unit in {0}")]
    EvenCharacteristic(String),

    #[error("ring has {0} elements, more than the supported maximum")]
    RingTooLarge(u64),

    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NonSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("determinant {0} is not a unit")]
    NonUnitDeterminant(String),

    #[error("element {0} is not a unit")]
    NotAUnit(String),

    #[error("polynomial has no monic {n}-th root: {detail}")]
    NoRoot { n: usize, detail: String },

    #[error("{0} is not invertible in the coefficient ring")]
    NotInvertible(usize),

    #[error("polynomial is not monic")]
    NotMonic,

    #[error("module is not free: {0}")]
    NotFree(String),

    #[error("unsupported center: {0}")]
    UnsupportedCenter(String),

    #[error("structure table is not a unital associative algebra: {0}")]
    MalformedTable(String),

    #[error("not an involution: {0}")]
    NotAnInvolution(String),

    #[error("symmetric rank {rank} matches neither n(n+1)/2 nor n(n-1)/2 for n = {degree}")]
    Unclassifiable { rank: usize, degree: usize },

    #[error("form is not hermitian")]
    NotHermitian,

    #[error("form is not symmetric or skew-symmetric")]
    NotSymmetricOrSkew,

    #[error("form matrix has non-unit determinant")]
    SingularForm,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("search exhausted: {0}")]
    Exhausted(String),

    #[error("not a subgroup: {0}")]
    NotASubgroup(String),

    #[error("transfer is ill-defined: {0}")]
    IllDefined(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
