use thiserror::Error;

use crate::algebra::TwoForm;
use crate::scalar::Scalar;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("index {index} out of range 1..={dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("operation requires dimension {requirement}, got {actual}")]
    UnsupportedDimension {
        requirement: &'static str,
        actual: usize,
    },

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("bracket or 2-form is not skew: {0} violation(s)")]
    NotSkew(usize),

    /// The pair fails the deformed Jacobi identity. `t` is the dual residual
    /// vector in dimension 3 (empty otherwise).
    #[error("not an omega-deformed Lie algebra (t = {})", format_vector(.t))]
    NotAnAlgebra { t: Vec<Scalar> },

    /// The bracket admits no compatible 2-form; the forced candidate is kept
    /// for inspection.
    #[error(
        "bracket admits no compatible 2-form; forced candidate fails the deformed Jacobi identity"
    )]
    NotDeformable { candidate: TwoForm },

    #[error("diagonal entries must be -1, 0 or 1")]
    NotNormalized,

    #[error("label {label} {problem}")]
    BadParameter {
        label: String,
        problem: &'static str,
    },

    #[error("unknown Bianchi label {0:?}")]
    UnknownLabel(String),

    #[error("malformed rational {0:?}")]
    MalformedRational(String),

    #[error("document syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("duplicate entry {0}")]
    DuplicateEntry(String),

    #[error("entry {0} must have i < j")]
    UnorderedEntry(String),

    #[error("cannot serialize a spec with non-rational entries")]
    NonRational,

    #[error("normal form check failed: transported input differs from canonical spec by {0:e}")]
    NormalizationMismatch(f64),
}

fn format_vector(values: &[Scalar]) -> String {
    let parts: Vec<String> = values.iter().map(crate::scalar::format_scalar).collect();
    format!("({})", parts.join(", "))
}
