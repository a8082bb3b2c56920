use thiserror::Error;

/// Errors shared across the toolkit.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("polynomials belong to different variable sets")]
    VarSetMismatch,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("term {0} is not divisible by `{1}`")]
    NotDivisible(String, String),
    #[error("circuit relation is not unimodular: coefficient {0} is not ±1")]
    NotUnimodular(String),
    #[error("theta is degenerate on circuit {0:?}: both orientations have zero affine defect")]
    DegenerateTheta(Vec<usize>),
    #[error("simplicity check requires theta")]
    MissingTheta,
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("ideal is not homogeneous with respect to the grading")]
    Inhomogeneous,
    #[error("oracle scale exceeded: n = {0} > {1}")]
    OracleScale(usize, usize),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("independent-monomial family fails to span internal degree {0}")]
    SpanFailure(u32),
    #[error("graded map is ill-defined: syzygy {0} has nonzero image")]
    PsiIllDefined(String),
}

pub type Result<T> = std::result::Result<T, Error>;
