use thiserror::Error;

/// Errors raised by the algebra, operator and integration layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("dimension {dim} exceeds the configured cap of {cap}")]
    DimensionTooLarge { dim: usize, cap: usize },

    #[error("invalid root system: {0}")]
    InvalidRootSystem(String),

    #[error("polynomial is not divisible by the linear form {0}")]
    NotDivisible(String),

    #[error("polynomial is not homogeneous")]
    NotHomogeneous,

    #[error("input is not a Dunkl monogenic (D_k residual is nonzero)")]
    NotMonogenic,

    #[error("input is not a Dunkl harmonic (Laplacian residual is nonzero)")]
    NotHarmonic,

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("bilinear form is ill-posed: {0}")]
    IllPosed(String),

    #[error("unsupported weight: {0}")]
    UnsupportedWeight(String),

    #[error("cannot combine values from contexts {0} and {1}")]
    IncompatibleContext(String, String),

    #[error("polynomial does not lie in the span of x^j M_k")]
    NotInSpan,

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
