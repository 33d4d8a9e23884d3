//! Error types shared across the crate.

use thiserror::Error;

/// Errors produced by parsing, evaluation and bound computation.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Malformed funcspec document or number literal.
    #[error("parse error: {0}")]
    Parse(String),

    /// Argument outside the function domain or an inverted interval.
    #[error("domain error: {0}")]
    Domain(String),

    /// The Riemann-Stieltjes integral does not exist: the integrand and the
    /// integrator are discontinuous at the same point.
    #[error("shared discontinuity at t = {at}: Riemann-Stieltjes integral does not exist")]
    SharedDiscontinuity { at: f64 },

    /// The refining-sum oracle failed to converge.
    #[error("refining sums did not converge after {0} doublings")]
    NoConvergence(u32),

    /// Invalid quadrature parameters (interval, alpha range, or the
    /// evaluation point beyond the interval midpoint).
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// A partition tag lies outside [x_i, (x_i + x_{i+1})/2].
    #[error("invalid tag: {0}")]
    InvalidTag(String),

    /// The weight function takes negative values.
    #[error("weight function is not nonnegative on the interval (min = {min})")]
    NotNonnegativeWeight { min: f64 },

    /// The integrator is not monotone nondecreasing.
    #[error("integrator is not monotone nondecreasing")]
    NotMonotoneIntegrator,

    /// The integrand is not monotone nondecreasing.
    #[error("integrand is not monotone nondecreasing")]
    NotMonotoneIntegrand,

    /// The integrand has a jump, so no Lipschitz constant exists.
    #[error("no Lipschitz certificate: function is discontinuous")]
    NoLipschitzCertificate,

    /// A theorem hypothesis does not hold for the supplied functions.
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    /// Kernel-rigorous evaluation is not available for these inputs
    /// (e.g. the integrator is merely of bounded variation).
    #[error("kernel-rigorous mode unavailable: {0}")]
    RigorousUnavailable(String),

    /// An internal invariant failed; this indicates a bug, never bad input.
    #[error("internal invariant failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
