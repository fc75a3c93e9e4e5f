use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("unknown or unsupported Cartan type `{0}`")]
    UnknownType(String),
    #[error("invalid crossed node set: {0}")]
    InvalidCrossing(String),
    #[error("weight {0} is not integral and p-dominant")]
    NotPDominant(String),
    #[error("weight has {got} coordinates, expected {expected}")]
    WeightLength { expected: usize, got: usize },
    #[error("series division by a non-unit: {0}")]
    DivisionByNonUnit(String),
    #[error("weak Jacobi forms are only supported for even weight, got {0}")]
    OddWeight(i64),
    #[error("no non-degenerate evaluation point found after {0} draws")]
    DegeneratePoint(usize),
    #[error("floating-point localization did not round to a rational: {0}")]
    FloatUnstable(f64),
    #[error("localization sum is not constant ({0} vs {1}); integrand is not homogeneous of top degree")]
    NonConstantLocalization(String, String),
    #[error("bundles live over different base spaces")]
    BaseMismatch,
    #[error("bundle of rank {rank} on a space of dimension {dim} has negative-dimensional zero locus")]
    NegativeDimension { rank: usize, dim: usize },
    #[error("Chern degree {degree} out of range 1..={dim}")]
    DegreeOutOfRange { degree: usize, dim: usize },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
