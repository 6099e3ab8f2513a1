//! Real zeros of `e_α` and `i_α` for `1 < α < 2`, and asymptotic estimates
//! of the largest zero near `α = 1` and `α = 2`.
//!
//! Each function is a damped oscillation `(2/α) e^{t cos(π/α)} cos(...)`
//! riding on an algebraic branch-cut tail, so the zeros are finitely many.
//! [`find_zeros`] scans the true function (never an approximation of it)
//! up to a point `t_max` past which a rigorous lower bound on the tail
//! exceeds ten times the residue envelope.

use alloc::vec::Vec;

#[allow(unused_imports)] // float methods resolve to inherent ones when std is linked
use num_traits::Float;

use crate::oscillations::{e_alpha, i_alpha, residue_envelope, Kind, OscParams};
use crate::quad::{integrate, QuadOptions};
use crate::special::{cospi, gamma_real, lower_incomplete_gamma, sinpi};
use crate::{Error, Result};

/// Required ratio of tail bound to residue envelope.
pub const DOMINANCE_FACTOR: f64 = 10.0;

const MAX_BISECTIONS: usize = 200;

fn check_alpha(op: &'static str, alpha: f64) -> Result<()> {
    if !(alpha > 1.0 && alpha < 2.0) {
        return Err(Error::Domain {
            op,
            detail: "alpha must lie in (1, 2)",
        });
    }
    Ok(())
}

/// Scan step: an eighth of the half-period `π / sin(π/α)` of the residue
/// oscillation.
pub fn scan_step(alpha: f64) -> f64 {
    core::f64::consts::PI / (8.0 * sinpi(1.0 / alpha))
}

/// Upper bound `π / sin(π/α)` on the smallest zero of `e_α`, `1 < α ≤ 2`.
pub fn smallest_zero_bound(alpha: f64) -> Result<f64> {
    if !(alpha > 1.0 && alpha <= 2.0) {
        return Err(Error::Domain {
            op: "smallest_zero_bound",
            detail: "alpha must lie in (1, 2]",
        });
    }
    Ok(core::f64::consts::PI / sinpi(1.0 / alpha))
}

// ∫₁^∞ |V_α(r)| dr. With r = 1/u and u = v^{2/α} the integrand is smooth:
// (1/π) sin(πα/2) (2/α) (1 - v²) / ((v² + cos πα)² + sin² πα).
fn v_kernel_outer_mass(alpha: f64) -> Result<f64> {
    let (c, s, sh) = (cospi(alpha), sinpi(alpha), sinpi(alpha / 2.0));
    let f = |v: f64| {
        let w = v * v;
        core::f64::consts::FRAC_1_PI * sh * (2.0 / alpha) * (1.0 - w) / ((w + c) * (w + c) + s * s)
    };
    let r = integrate(f, 0.0, 1.0, QuadOptions::absolute(1e-13))?;
    Ok(r.value + r.abs_err)
}

/// Rigorous lower bound on `|f_α(t)|` (`Kind::E`) or on `h_α(t)`
/// (`Kind::I`, may be negative when uninformative).
///
/// With `D(r) ≤ (1 + r^α)²` on `[0, R]`:
///
/// `|f_α(t)| ≥ |sin πα| / (π (1+R^α)²) · t^{-α} γ(α, Rt)`, `R = 10/t`;
///
/// `h_α(t) ≥ sin(πα/2) (1-R^α) / (π (1+R^α)²) · t^{-α/2} γ(α/2, Rt)
///  - e^{-t} ∫₁^∞ |V_α|`, `R = min(10/t, 1/2)`.
pub fn tail_lower_bound(kind: Kind, alpha: f64, t: f64) -> Result<f64> {
    check_alpha("tail_lower_bound", alpha)?;
    if !(t > 0.0) {
        return Err(Error::Domain {
            op: "tail_lower_bound",
            detail: "t must be positive",
        });
    }
    let inv_pi = core::f64::consts::FRAC_1_PI;
    match kind {
        Kind::E => {
            let r = 10.0 / t;
            let d = (1.0 + r.powf(alpha)).powi(2);
            Ok(inv_pi * sinpi(alpha).abs() / d * t.powf(-alpha) * lower_incomplete_gamma(alpha, r * t)?)
        }
        Kind::I => {
            let r = (10.0 / t).min(0.5);
            let ra = r.powf(alpha);
            let d = (1.0 + ra).powi(2);
            let inner = inv_pi * sinpi(alpha / 2.0) * (1.0 - ra) / d
                * t.powf(-alpha / 2.0)
                * lower_incomplete_gamma(alpha / 2.0, r * t)?;
            Ok(inner - (-t).exp() * v_kernel_outer_mass(alpha)? * 1.001)
        }
    }
}

/// Evidence that a function has no zeros beyond `t_max`: the tail lower
/// bound exceeds [`DOMINANCE_FACTOR`] times the residue envelope at `t_max`
/// and at `2 t_max`. Past `α / |cos(π/α)|` the ratio of the two grows with
/// `t`, and `t_max` is never chosen below that point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FinitenessCertificate {
    /// Certified point.
    pub t_max: f64,
    /// Tail lower bound at `t_max`.
    pub tail_at_t_max: f64,
    /// Residue envelope at `t_max`.
    pub envelope_at_t_max: f64,
    /// Tail lower bound at `2 t_max`.
    pub tail_at_2t_max: f64,
    /// Residue envelope at `2 t_max`.
    pub envelope_at_2t_max: f64,
}

impl FinitenessCertificate {
    /// Computes the four quantities at `t_max`.
    pub fn at(kind: Kind, alpha: f64, t_max: f64) -> Result<Self> {
        Ok(Self {
            t_max,
            tail_at_t_max: tail_lower_bound(kind, alpha, t_max)?,
            envelope_at_t_max: residue_envelope(alpha, t_max),
            tail_at_2t_max: tail_lower_bound(kind, alpha, 2.0 * t_max)?,
            envelope_at_2t_max: residue_envelope(alpha, 2.0 * t_max),
        })
    }

    /// Whether both dominance inequalities hold.
    pub fn holds(&self) -> bool {
        self.tail_at_t_max > DOMINANCE_FACTOR * self.envelope_at_t_max
            && self.tail_at_2t_max > DOMINANCE_FACTOR * self.envelope_at_2t_max
    }
}

/// Smallest certified `t_max` on a 5% geometric ladder.
pub fn certified_t_max(kind: Kind, alpha: f64) -> Result<FinitenessCertificate> {
    check_alpha("certified_t_max", alpha)?;
    let mut t = (alpha / cospi(1.0 / alpha).abs()).max(1.0);
    for _ in 0..1000 {
        let cert = FinitenessCertificate::at(kind, alpha, t)?;
        if cert.holds() {
            return Ok(cert);
        }
        t *= 1.05;
    }
    Err(Error::NoConvergence {
        op: "certified_t_max",
        iterations: 1000,
    })
}

/// Zeros of `e_α` or `i_α` on `(0, ∞)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ZeroReport {
    /// Which function.
    pub kind: Kind,
    /// Order.
    pub alpha: f64,
    /// Refined zeros, increasing. Excludes the zero of `i_α` at the origin.
    pub zeros: Vec<f64>,
    /// Whether the function also vanishes at `t = 0` (true for `i_α`).
    pub zero_at_origin: bool,
    /// Number of scan evaluations.
    pub scan_points: usize,
    /// Scan spacing.
    pub scan_step: f64,
    /// Each zero lies within this distance of a sign change.
    pub refine_tol: f64,
    /// End of the scan.
    pub t_max: f64,
    /// Why no zeros exist beyond `t_max`.
    pub certificate: FinitenessCertificate,
}

impl ZeroReport {
    /// Number of zeros on `(0, ∞)`.
    pub fn count(&self) -> usize {
        self.zeros.len()
    }

    /// The largest zero, if any.
    pub fn largest(&self) -> Option<f64> {
        self.zeros.last().copied()
    }
}

/// Value of `e_α` or `i_α` at unit frequency.
pub fn oscillation(kind: Kind, alpha: f64, t: f64) -> Result<f64> {
    let p = OscParams::unit(alpha)?;
    Ok(match kind {
        Kind::E => e_alpha(&p, t)?.value,
        Kind::I => i_alpha(&p, t)?.value,
    })
}

/// Locates all zeros on `(0, ∞)` with the default scan step.
pub fn find_zeros(kind: Kind, alpha: f64, refine_tol: f64) -> Result<ZeroReport> {
    find_zeros_with_resolution(kind, alpha, refine_tol, 1)
}

/// As [`find_zeros`], with the scan step divided by `refinement`.
pub fn find_zeros_with_resolution(kind: Kind, alpha: f64, refine_tol: f64, refinement: usize) -> Result<ZeroReport> {
    check_alpha("find_zeros", alpha)?;
    if !(refine_tol > 0.0) || refinement == 0 {
        return Err(Error::Domain {
            op: "find_zeros",
            detail: "refine_tol and refinement must be positive",
        });
    }
    let certificate = certified_t_max(kind, alpha)?;
    let t_max = certificate.t_max;
    let step = scan_step(alpha) / refinement as f64;
    let f = |t: f64| oscillation(kind, alpha, t);

    let mut zeros = Vec::new();
    let mut t_prev = 1e-3 * step;
    let mut f_prev = f(t_prev)?;
    let mut scan_points = 1;
    let mut k = 1usize;
    loop {
        let t = (k as f64 * step).min(t_max);
        let ft = f(t)?;
        scan_points += 1;
        if ft == 0.0 {
            zeros.push(t);
        } else if f_prev != 0.0 && (ft < 0.0) != (f_prev < 0.0) {
            zeros.push(bisect(&f, t_prev, t, f_prev, refine_tol)?);
        }
        if t >= t_max {
            break;
        }
        t_prev = t;
        f_prev = ft;
        k += 1;
    }
    Ok(ZeroReport {
        kind,
        alpha,
        zeros,
        zero_at_origin: kind == Kind::I,
        scan_points,
        scan_step: step,
        refine_tol,
        t_max,
        certificate,
    })
}

fn bisect(f: &impl Fn(f64) -> Result<f64>, mut a: f64, mut b: f64, mut fa: f64, tol: f64) -> Result<f64> {
    for _ in 0..MAX_BISECTIONS {
        if b - a <= 2.0 * tol {
            return Ok(0.5 * (a + b));
        }
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            break;
        }
        let fm = f(m)?;
        if fm == 0.0 {
            return Ok(m);
        }
        if (fm < 0.0) == (fa < 0.0) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    Err(Error::NoConvergence {
        op: "find_zeros bisection",
        iterations: MAX_BISECTIONS,
    })
}

/// Largest zero of `i_{1+ε}` from the balance
/// `e^{-T} = (1+ε) / (2Γ(1/2+ε/2)) T^{-1/2-ε/2}`, solved in log form
/// `T - (1/2+ε/2) ln T - ln(2Γ(1/2+ε/2)/(1+ε)) = 0` by damped Newton from
/// `T₀ = 3 - ln(ε + 0.1)`, `0 < ε ≤ 0.3`. The larger root is returned.
pub fn largest_zero_near1(epsilon: f64) -> Result<f64> {
    if !(epsilon > 0.0 && epsilon <= 0.3) {
        return Err(Error::Domain {
            op: "largest_zero_near1",
            detail: "epsilon must lie in (0, 0.3]",
        });
    }
    let c = 0.5 + 0.5 * epsilon;
    let l = (2.0 * gamma_real(c)? / (1.0 + epsilon)).ln();
    let g = |t: f64| t - c * t.ln() - l;
    let mut t = 3.0 - (epsilon + 0.1).ln();
    for _ in 0..100 {
        let r = g(t);
        if r.abs() <= 1e-14 * t.max(1.0) {
            return Ok(t);
        }
        let slope = 1.0 - c / t;
        let mut step = r / slope;
        // stay right of the minimum at T = c
        while t - step <= c {
            step *= 0.5;
        }
        t -= step;
    }
    Err(Error::NoConvergence {
        op: "largest_zero_near1",
        iterations: 100,
    })
}

/// Residual of the log-form balance equation at `T`.
pub fn near1_residual(epsilon: f64, t: f64) -> Result<f64> {
    let c = 0.5 + 0.5 * epsilon;
    Ok(t - c * t.ln() - (2.0 * gamma_real(c)? / (1.0 + epsilon)).ln())
}

/// `T ≈ (8 / (πδ)) ln(2/δ)` for the largest zero of `i_{2-δ}`,
/// `0 < δ ≤ 0.3`.
pub fn largest_zero_near2(delta: f64) -> Result<f64> {
    if !(delta > 0.0 && delta <= 0.3) {
        return Err(Error::Domain {
            op: "largest_zero_near2",
            detail: "delta must lie in (0, 0.3]",
        });
    }
    Ok(8.0 / (core::f64::consts::PI * delta) * (2.0 / delta).ln())
}

/// `δ ≈ (8/π) ln T / T`, `T ≥ 10`.
pub fn delta_of_t(t: f64) -> Result<f64> {
    if !(t >= 10.0 && t.is_finite()) {
        return Err(Error::Domain {
            op: "delta_of_t",
            detail: "T must be at least 10",
        });
    }
    Ok(8.0 * core::f64::consts::FRAC_1_PI * t.ln() / t)
}

/// `(πδT/4) / ln(2T/δ)`, which tends to 1 along the largest zero as
/// `δ → 0`.
pub fn balance_ratio(delta: f64, t: f64) -> f64 {
    core::f64::consts::PI * delta * t / 4.0 / (2.0 * t / delta).ln()
}

/// Estimated number of zeros of `i_α`, `T(2-α)/π`, for `1.7 < α < 2`.
pub fn zero_count_estimate(alpha: f64) -> Result<f64> {
    if !(alpha > 1.7 && alpha < 2.0) {
        return Err(Error::Domain {
            op: "zero_count_estimate",
            detail: "alpha must lie in (1.7, 2)",
        });
    }
    Ok(largest_zero_near2(2.0 - alpha)? / core::f64::consts::PI)
}
