use thiserror::Error;

/// Error type shared by all modules.
#[derive(Debug, Error)]
pub enum Error {
    /// Input outside the documented domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// An iterative procedure failed to reach its tolerance.
    #[error("numerical error: {0}")]
    Numerical(String),

    /// A zero of D0 could not be moved off a winding contour.
    #[error("unresolved boundary-zero collision near {location} after {attempts} jitter attempts")]
    BoundaryCollision { location: String, attempts: u32 },

    /// D0 vanishes identically on the pre-scan grid, i.e. n ≡ 1.
    #[error("determinant vanishes identically on the pre-scan grid (index of refraction is unity)")]
    DegenerateDeterminant,

    /// eigenpair_coefficients was called at a point that is not a zero of D0.
    #[error("not an eigenvalue: normalized |D0({k})| = {residual:.3e} exceeds tolerance {tol:.3e}")]
    NotAnEigenvalue { k: String, residual: f64, tol: f64 },

    /// Gram system too ill-conditioned for a reliable solve.
    #[error("gram matrix numerically singular (lambda_min/lambda_max = {ratio:.3e}); reduce the truncation")]
    IllConditioned { ratio: f64 },

    /// Configuration (or config file) rejected.
    #[error("config error: {0}")]
    Config(String),
}
