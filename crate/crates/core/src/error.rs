//! Error type shared across the crate.

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong when building representations or evaluating
/// the closed forms and dynamics.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A spin label is invalid for the requested algebra (non-positive
    /// Bargmann index, non-half-integer spin, ...).
    #[error("invalid spin: {0}")]
    InvalidSpin(String),

    /// A truncation dimension or matrix shape is unusable.
    #[error("invalid dimension: {0}")]
    InvalidDimension(String),

    /// A level index lies outside the representation.
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    /// The su(1,1) dressed frequency `omega sqrt(1 - (2g/omega)^2)` requires
    /// `2g/omega < 1`; at or beyond the wall `x = atanh(2g/omega)` does not
    /// exist.
    #[error("su(1,1) coupling wall: 2g/omega = {ratio} but the dressing transform needs 2g/omega < 1")]
    CouplingWall { ratio: f64 },

    /// A level pair's band label contradicts the parity of `n - m`.
    #[error("parity mismatch: {0}")]
    ParityMismatch(String),

    /// A truncated computation failed its convergence check.
    #[error("convergence failure: {0}")]
    Convergence(String),

    /// The integrator step exceeds the documented stability bound.
    #[error("step size too large: dt = {dt} exceeds the bound {max}")]
    StepSize { dt: f64, max: f64 },

    /// An initial state that must be normalized is not.
    #[error("initial state must have unit norm, got |psi| = {norm}")]
    NonUnitNorm { norm: f64 },

    /// A matrix that must be unitary is not (within tolerance).
    #[error("matrix is not unitary: max |U^H U - 1| = {residual}")]
    NotUnitary { residual: f64 },

    /// Anything else rejected up front (bad sign value, non-finite input, ...).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
