use thiserror::Error;

/// Failure modes shared by every numerical routine in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("gamma function pole at {0}")]
    GammaPole(f64),
    #[error("hypergeometric series did not converge after {terms} terms (|z| = {modulus})")]
    SeriesDivergence { terms: usize, modulus: f64 },
    #[error("parameters outside the supported region: {0}")]
    Domain(String),
    #[error("quadrature budget exhausted: error estimate {error:e} above tolerance {tol:e}")]
    Quadrature { error: f64, tol: f64 },
    #[error("need at least {needed} samples, got {got}")]
    TooFewSamples { needed: usize, got: usize },
    #[error("ill-conditioned determinant: |det| = {det:e} against scale {scale:e}")]
    SingularDeterminant { det: f64, scale: f64 },
    #[error("particle path hit the step floor {floor:e} after {retries} restarts")]
    StepFloor { floor: f64, retries: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
