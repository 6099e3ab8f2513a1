//! The two-parameter Mittag-Leffler function `E_{μ,ν}(z) = Σ z^k / Γ(μk + ν)`
//! on the negative real axis.
//!
//! Three independent routes are available:
//!
//! - the defining power series, with a rigorous remainder bound, for
//!   `|z| ≤ 5`;
//! - the spectral route: for `μ = α ∈ (1, 2)` and `ν ∈ {1, 1 + α/2}` the
//!   function is `e_α` or `i_α / t^{α/2}` at `t = |z|^{1/α}`, which splits
//!   exactly into a branch-cut integral and a residue term (see
//!   [`crate::oscillations`]);
//! - the asymptotic expansion obtained by term-wise Laplace inversion of
//!   the geometric expansion of `1/(s^α + 1)`.
//!
//! [`ml_global`] picks a route; [`ml_with_route`] forces one, which the
//! tests use to check the routes against each other.

#[allow(unused_imports)] // float methods resolve to inherent ones when std is linked
use num_traits::Float;

use crate::oscillations::{self, Kind};
use crate::special::{dawson, rgamma};
use crate::{Error, Result};

/// Default absolute accuracy request.
pub const DEFAULT_TOL: f64 = 1e-10;
/// Stall guard for the power series.
pub const MAX_TERMS: usize = 400;
/// Number of asymptotic terms used by [`ml_global`].
pub const DEFAULT_TAIL_TERMS: usize = 6;

const SERIES_RADIUS: f64 = 5.0;

/// Largest `|z|` for which [`ml_global`] uses the power series.
///
/// Within `|z| ≤ 5` the alternating series loses at most a few digits to
/// cancellation when `μ ≥ 1`.
pub fn series_radius(_mu: f64) -> f64 {
    SERIES_RADIUS
}

/// Parameters, argument and accuracy request of one evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MLArg {
    /// Series exponent `μ > 0`.
    pub mu: f64,
    /// Series shift `ν > 0`.
    pub nu: f64,
    /// Real argument.
    pub z: f64,
    /// Requested absolute accuracy.
    pub tol: f64,
}

impl MLArg {
    /// Validated constructor.
    pub fn new(mu: f64, nu: f64, z: f64, tol: f64) -> Result<Self> {
        let arg = Self { mu, nu, z, tol };
        arg.validate()?;
        Ok(arg)
    }

    /// Constructor with [`DEFAULT_TOL`].
    pub fn with_default_tol(mu: f64, nu: f64, z: f64) -> Result<Self> {
        Self::new(mu, nu, z, DEFAULT_TOL)
    }

    fn validate(&self) -> Result<()> {
        if !(self.mu > 0.0 && self.mu.is_finite()) || !(self.nu > 0.0 && self.nu.is_finite()) {
            return Err(Error::Domain {
                op: "MLArg",
                detail: "mu and nu must be positive and finite",
            });
        }
        if !self.z.is_finite() {
            return Err(Error::Domain {
                op: "MLArg",
                detail: "z must be finite",
            });
        }
        if !(self.tol >= 10.0 * f64::EPSILON) {
            return Err(Error::Domain {
                op: "MLArg",
                detail: "tol must be at least 10 machine epsilons",
            });
        }
        Ok(())
    }
}

/// Which evaluation produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    /// Truncated power series.
    Series,
    /// Branch-cut integral plus residue term.
    Spectral,
    /// Asymptotic expansion for large `|z|`.
    Asymptotic,
    /// Elementary closed form (`μ ∈ {1, 2}`).
    ClosedForm,
}

/// A value with the error bound the producing route commits to.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MLValue {
    /// The function value.
    pub value: f64,
    /// Absolute error bound.
    pub err_estimate: f64,
    /// Route that produced the value.
    pub method: Method,
}

/// Route selection for [`ml_with_route`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Route {
    /// Same dispatch as [`ml_global`].
    Auto,
    /// Force the power series.
    Series,
    /// Force the branch-cut/residue decomposition.
    Spectral,
    /// Force the asymptotic expansion with [`DEFAULT_TAIL_TERMS`] terms.
    Asymptotic,
}

/// Sums the defining series until the remainder bound falls far below
/// `tol`. The reported error adds the remainder bound and a bound on the
/// accumulated rounding error.
pub fn ml_series(arg: MLArg) -> Result<MLValue> {
    arg.validate()?;
    let MLArg { mu, nu, z, tol } = arg;
    let az = z.abs();
    let mut sum = 0.0;
    let mut abs_sum = 0.0;
    let mut power = 1.0; // z^k
    let mut prev_term = f64::INFINITY;
    let mut remainder = f64::INFINITY;
    let mut terms = 0;
    for k in 0..MAX_TERMS {
        let kf = k as f64;
        let term = power * rgamma(mu * kf + nu);
        sum += term;
        abs_sum += term.abs();
        terms = k + 1;
        // |a_{k+1}/a_k| = |z| Γ(μk+ν)/Γ(μk+μ+ν) decreases in k once μk+ν
        // is past the minimum of Γ, which makes the tail geometric.
        let next_arg = mu * (kf + 1.0) + nu;
        if next_arg > 2.0 && mu * kf + nu > 1.5 {
            let next = power * z * rgamma(next_arg);
            let ratio = if term != 0.0 {
                (next / term).abs()
            } else {
                f64::INFINITY
            };
            if ratio < 1.0 && term.abs() <= prev_term {
                remainder = next.abs() / (1.0 - ratio);
                if remainder <= (0.25 * f64::EPSILON * sum.abs()).max(1e-18) {
                    break;
                }
            }
        }
        prev_term = term.abs();
        power *= z;
        if !power.is_finite() {
            break;
        }
    }
    // Each term carries the gamma error (≲ 1e-13 relative) and a few
    // roundings; the partial sums add one rounding each.
    let rounding = abs_sum * (1e-13 + 4.0 * terms as f64 * f64::EPSILON);
    let err = remainder + rounding;
    if !(err <= tol) || az.is_nan() {
        return Err(Error::NonConvergence { terms, bound: err, tol });
    }
    Ok(MLValue {
        value: sum,
        err_estimate: err,
        method: Method::Series,
    })
}

fn tail_term(alpha: f64, kind: Kind, t: f64, k: usize) -> f64 {
    let kf = k as f64;
    let sign = if k % 2 == 0 { -1.0 } else { 1.0 }; // -(-1)^k
    match kind {
        Kind::E => sign * t.powf(-alpha * kf) * rgamma(1.0 - alpha * kf),
        Kind::I => sign * t.powf(alpha / 2.0 - alpha * kf) * rgamma(1.0 + alpha / 2.0 - alpha * kf),
    }
}

fn check_tail_domain(alpha: f64, t: f64, n_terms: usize) -> Result<()> {
    if !(alpha > 1.0 && alpha < 2.0) {
        return Err(Error::Domain {
            op: "ml_tail",
            detail: "alpha must lie in (1, 2)",
        });
    }
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::Domain {
            op: "ml_tail",
            detail: "t must be positive and finite",
        });
    }
    if n_terms == 0 {
        return Err(Error::Domain {
            op: "ml_tail",
            detail: "n_terms must be positive",
        });
    }
    Ok(())
}

/// Error bound of the `n_terms`-term expansion at `t`: the first omitted
/// term that does not vanish (terms with integer `αk` or `αk - α/2` have
/// `1/Γ = 0`) plus the envelope `(2/α) e^{t cos(π/α)}` of the neglected
/// residue oscillation.
pub fn tail_error_bound(alpha: f64, kind: Kind, t: f64, n_terms: usize) -> f64 {
    let mut omitted = 0.0;
    for k in n_terms + 1..=n_terms + 3 {
        let term = tail_term(alpha, kind, t, k).abs();
        if term > 0.0 {
            omitted = term;
            break;
        }
    }
    omitted + oscillations::residue_envelope(alpha, t)
}

/// Large-`t` expansion of `e_α(t)` (`Kind::E`) or `i_α(t)` (`Kind::I`) at
/// unit frequency:
///
/// `e_α(t) ~ -Σ_{k≥1} (-1)^k t^{-αk} / Γ(1 - αk)`,
/// `i_α(t) ~ -Σ_{k≥1} (-1)^k t^{α/2-αk} / Γ(1 + α/2 - αk)`.
///
/// The leading terms are `t^{-α}/Γ(1-α)` (negative on `1 < α < 2`) and
/// `t^{-α/2}/Γ(1-α/2)` (positive).
pub fn ml_tail(alpha: f64, kind: Kind, t: f64, n_terms: usize, tol: f64) -> Result<MLValue> {
    check_tail_domain(alpha, t, n_terms)?;
    let value = (1..=n_terms).map(|k| tail_term(alpha, kind, t, k)).sum();
    let bound = tail_error_bound(alpha, kind, t, n_terms);
    if !(bound <= tol) {
        return Err(Error::Accuracy { bound, tol });
    }
    Ok(MLValue {
        value,
        err_estimate: bound,
        method: Method::Asymptotic,
    })
}

/// Smallest `t` (to within 1e-6 relative) beyond which the `n_terms`-term
/// expansion is certified to `tol`.
pub fn tail_threshold(alpha: f64, kind: Kind, n_terms: usize, tol: f64) -> Result<f64> {
    check_tail_domain(alpha, 1.0, n_terms)?;
    let ok = |t: f64| tail_error_bound(alpha, kind, t, n_terms) < tol;
    let mut hi = 1.0;
    while !ok(hi) {
        hi *= 2.0;
        if hi > 1e12 {
            return Err(Error::NoConvergence {
                op: "tail_threshold",
                iterations: 40,
            });
        }
    }
    let mut lo = hi / 2.0;
    if ok(lo) {
        return Ok(lo.min(hi));
    }
    while hi - lo > 1e-6 * hi {
        let mid = 0.5 * (lo + hi);
        if ok(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}

fn spectral_kind(mu: f64, nu: f64) -> Option<Kind> {
    if !(mu > 1.0 && mu < 2.0) {
        return None;
    }
    if (nu - 1.0).abs() <= 1e-14 {
        Some(Kind::E)
    } else if (nu - (1.0 + 0.5 * mu)).abs() <= 1e-14 {
        Some(Kind::I)
    } else {
        None
    }
}

fn unsupported(arg: &MLArg) -> Error {
    Error::Unsupported {
        mu: arg.mu,
        nu: arg.nu,
        z: arg.z,
    }
}

// E_{α,1}(z) = e_α(t) and E_{α,1+α/2}(z) = i_α(t) / t^{α/2} with t = |z|^{1/α}.
fn rescale(kind: Kind, alpha: f64, t: f64, value: f64, err: f64) -> (f64, f64) {
    match kind {
        Kind::E => (value, err),
        Kind::I => {
            let s = t.powf(alpha / 2.0);
            (value / s, err / s)
        }
    }
}

fn ml_spectral(arg: &MLArg) -> Result<MLValue> {
    let kind = spectral_kind(arg.mu, arg.nu).ok_or_else(|| unsupported(arg))?;
    if !(arg.z < 0.0) {
        return Err(unsupported(arg));
    }
    let alpha = arg.mu;
    let t = (-arg.z).powf(1.0 / alpha);
    let cut = oscillations::branch_cut(kind, alpha, t, arg.tol)?;
    let res = oscillations::residue(kind, alpha, t);
    let (value, err) = rescale(
        kind,
        alpha,
        t,
        cut.value + res,
        cut.abs_err + 8.0 * f64::EPSILON * (1.0 + t),
    );
    Ok(MLValue {
        value,
        err_estimate: err,
        method: Method::Spectral,
    })
}

fn ml_asymptotic(arg: &MLArg) -> Result<MLValue> {
    let kind = spectral_kind(arg.mu, arg.nu).ok_or_else(|| unsupported(arg))?;
    if !(arg.z < 0.0) {
        return Err(unsupported(arg));
    }
    let alpha = arg.mu;
    let t = (-arg.z).powf(1.0 / alpha);
    let v = ml_tail(alpha, kind, t, DEFAULT_TAIL_TERMS, f64::INFINITY)?;
    let (value, err) = rescale(kind, alpha, t, v.value, v.err_estimate);
    if !(err <= arg.tol) {
        return Err(Error::Accuracy {
            bound: err,
            tol: arg.tol,
        });
    }
    Ok(MLValue {
        value,
        err_estimate: err,
        method: Method::Asymptotic,
    })
}

fn closed_form(arg: &MLArg) -> Option<MLValue> {
    let MLArg { mu, nu, z, .. } = *arg;
    let closed = |value: f64| MLValue {
        value,
        err_estimate: 4.0 * f64::EPSILON * value.abs().max(1.0),
        method: Method::ClosedForm,
    };
    if mu == 1.0 && nu == 1.0 {
        return Some(closed(z.exp()));
    }
    if z >= 0.0 {
        return None;
    }
    let x = (-z).sqrt();
    if mu == 1.0 && nu == 1.5 {
        // t^{1/2} E_{1,3/2}(-t) = e^{-t} erfi(√t) = (2/√π) D(√t)
        return Some(closed(core::f64::consts::FRAC_2_SQRT_PI * dawson(x) / x));
    }
    if mu == 2.0 && nu == 1.0 {
        return Some(closed(x.cos()));
    }
    if mu == 2.0 && nu == 2.0 {
        return Some(closed(x.sin() / x));
    }
    None
}

/// Evaluates `E_{μ,ν}(z)` along the requested route.
pub fn ml_with_route(arg: MLArg, route: Route) -> Result<MLValue> {
    arg.validate()?;
    if arg.z == 0.0 {
        return Ok(MLValue {
            value: rgamma(arg.nu),
            err_estimate: 1e-13 * rgamma(arg.nu).abs(),
            method: Method::Series,
        });
    }
    match route {
        Route::Series => ml_series(arg),
        Route::Spectral => ml_spectral(&arg),
        Route::Asymptotic => ml_asymptotic(&arg),
        Route::Auto => {
            if let Some(v) = closed_form(&arg) {
                return Ok(v);
            }
            if arg.z.abs() <= series_radius(arg.mu) {
                return ml_series(arg);
            }
            if spectral_kind(arg.mu, arg.nu).is_none() || arg.z > 0.0 {
                return Err(unsupported(&arg));
            }
            match ml_asymptotic(&arg) {
                Ok(v) => Ok(v),
                Err(Error::Accuracy { .. }) => ml_spectral(&arg),
                Err(e) => Err(e),
            }
        }
    }
}

/// Evaluates `E_{μ,ν}(z)` with automatic route selection.
///
/// Supported: closed forms for `μ ∈ {1, 2}`, the series for `|z| ≤ 5`, and
/// for `μ ∈ (1, 2)`, `ν ∈ {1, 1 + μ/2}`, `z < -5` the asymptotic expansion
/// when it meets `tol` and the spectral route otherwise.
pub fn ml_global(arg: MLArg) -> Result<MLValue> {
    ml_with_route(arg, Route::Auto)
}
