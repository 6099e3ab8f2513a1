use thiserror::Error;

/// Errors raised by the numerical routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error in {op}: {detail}")]
    Domain {
        /// Operation that rejected the argument.
        op: &'static str,
        /// Human readable reason.
        detail: &'static str,
    },
    /// The gamma function was evaluated at a pole.
    #[error("gamma function pole at x = {0}")]
    Pole(f64),
    /// A result would not fit in double precision.
    #[error("overflow in {op} at x = {x}")]
    Overflow {
        /// Operation that overflowed.
        op: &'static str,
        /// Offending argument.
        x: f64,
    },
    /// A truncated series could not certify the requested accuracy.
    #[error("series did not converge: error bound {bound:e} > tol {tol:e} after {terms} terms")]
    NonConvergence {
        /// Number of terms summed.
        terms: usize,
        /// Best error bound reached.
        bound: f64,
        /// Requested tolerance.
        tol: f64,
    },
    /// An asymptotic expansion is not accurate enough at this point.
    #[error("asymptotic expansion too inaccurate: error bound {bound:e} > tol {tol:e}")]
    Accuracy {
        /// Error bound of the expansion.
        bound: f64,
        /// Requested tolerance.
        tol: f64,
    },
    /// Adaptive quadrature could not certify the requested accuracy.
    #[error("quadrature failed: estimated error {estimate:e} > tol {tol:e} after {intervals} intervals")]
    Quadrature {
        /// Final error estimate.
        estimate: f64,
        /// Requested tolerance.
        tol: f64,
        /// Number of subintervals used.
        intervals: usize,
    },
    /// The contour inversion failed its self-test.
    #[error("inversion self-test failed: deviation {deviation:e} > {tol:e}")]
    Inversion {
        /// Observed deviation from the closed form.
        deviation: f64,
        /// Certification threshold.
        tol: f64,
    },
    /// The parameter combination is not covered by any evaluation route.
    #[error("unsupported Mittag-Leffler parameters mu = {mu}, nu = {nu}, z = {z}")]
    Unsupported {
        /// Series exponent.
        mu: f64,
        /// Series shift.
        nu: f64,
        /// Argument.
        z: f64,
    },
    /// A grid is too short for the requested operator.
    #[error("grid has {len} points, at least {min} required")]
    InsufficientGrid {
        /// Points supplied.
        len: usize,
        /// Minimum required.
        min: usize,
    },
    /// A time lies beyond the simulated part of a subordinator path.
    #[error("t = {t} exceeds path horizon {horizon}")]
    HorizonExceeded {
        /// Requested time.
        t: f64,
        /// Largest simulated physical time.
        horizon: f64,
    },
    /// An iterative solver failed to converge.
    #[error("{op} did not converge after {iterations} iterations")]
    NoConvergence {
        /// Solver name.
        op: &'static str,
        /// Iterations performed.
        iterations: usize,
    },
}

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
