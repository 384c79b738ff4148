//! Numerics for the radially symmetric interior transmission problem.
//!
//! The determinant
//!
//! ```text
//! D0(k) = sin(k)/k · y'(1;k) − cos(k) · y(1;k)
//! ```
//!
//! with `y'' + k² n(r) y = 0`, `y(0)=0`, `y'(0)=1`, is an entire function of
//! order 1 and type `1+B`, `B = ∫₀¹ √n`. Its zeros are the l=0 interior
//! transmission eigenvalues of the unit ball with refractive index `n(r)`.
//! This crate evaluates `D0` with overflow-safe scaled arithmetic, locates its
//! zeros in rectangles of the complex plane by argument-principle subdivision,
//! checks the distributional laws (indicator, densities, strips, separation),
//! and builds the exponential system `{e^{ik_j r}}` on `(−(1+B), 1+B)` with
//! truncated Gram frame diagnostics and expansions.

pub mod determinant;
pub mod error;
pub mod linalg;
pub mod profile;
pub mod quad;
pub mod riesz;
pub mod scaled;
pub mod solver;
pub mod validate;
pub mod zeros;

pub use error::Error;
pub type Result<T> = std::result::Result<T, Error>;

pub use num_complex::Complex64;
