use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("basis change matrix is singular")]
    SingularMatrix,

    #[error("hypothesis violated: {0}")]
    HypothesisViolated(&'static str),

    #[error("unknown basis label `{0}`")]
    UnknownLabel(String),

    #[error("cannot parse rational `{0}`")]
    ParseRational(String),

    #[error("invalid algebra definition: {0}")]
    InvalidAlgebra(String),

    #[error("group kind `extended` requires l = 0, got l = {0}")]
    InconsistentKind(String),

    #[error("velocity magnitude {speed} is not below c = {c}")]
    Superluminal { speed: f64, c: f64 },

    #[error("Lorentz matrix is not orthochronous (Lambda^0_0 = {0})")]
    NotOrthochronous(f64),

    #[error("residual of boost extraction is not a rotation (defect {0:e})")]
    NotARotation(f64),

    #[error("cannot fit a slope: {0}")]
    DegenerateFit(String),

    #[error("unknown experiment `{0}`")]
    UnknownExperiment(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
