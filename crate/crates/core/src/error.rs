use num_complex::Complex64;
use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("need at least {needed} coefficients, got {got}")]
    InsufficientCoefficients { needed: usize, got: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix has a non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    #[error("letter {0} is zero, reciprocal alphabet undefined")]
    ZeroLetter(usize),

    #[error("letter index {index} out of range for alphabet of size {len}")]
    InvalidIndex { index: usize, len: usize },

    #[error(
        "degenerate spectrum: eigenvalue {value} has multiplicity {multiplicity}; \
         use the confluent evaluation"
    )]
    DegenerateSpectrum { value: Complex64, multiplicity: usize },

    #[error("root finder did not converge after {iterations} iterations")]
    NonConvergence { iterations: usize },

    #[error("interpolation system is singular in every polynomial basis tried")]
    SingularInterpolation,

    #[error("function has no derivative of order {order} at {at}")]
    UndefinedFunction { order: usize, at: Complex64 },

    #[error("consistency check failed: {0}")]
    Consistency(String),

    #[error("malformed group element: {0}")]
    MalformedGroupElement(String),

    #[error("input too large: {0}")]
    TooLarge(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
