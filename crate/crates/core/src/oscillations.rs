//! The fractional oscillation pair
//!
//! `A(t) = e_α(ω^{2/α} t) = E_α(-ω² t^α)` and
//! `B(t) = ω t^{α/2} E_{α,1+α/2}(-ω² t^α)`,
//!
//! with `e_α`, `i_α` their unit-frequency forms. For `1 < α < 2` both split
//! exactly into a branch-cut integral and a damped residue oscillation:
//!
//! `e_α = f_α + g_α`, `f_α(t) = ∫₀^∞ e^{-rt} K_α(r) dr`,
//! `g_α(t) = (2/α) e^{t cos(π/α)} cos(t sin(π/α))`,
//!
//! `i_α = h_α + q_α`, `h_α(t) = ∫₀^∞ e^{-rt} V_α(r) dr`,
//! `q_α(t) = (2/α) e^{t cos(π/α)} sin(t sin(π/α))`.
//!
//! At `α = 1` the pair is `(e^{-t}, e^{-t} erfi(√t))`, at `α = 2` it is
//! `(cos t, sin t)`.

#[allow(unused_imports)] // float methods resolve to inherent ones when std is linked
use num_traits::Float;

use crate::mittag_leffler::{ml_global, MLArg, Method, DEFAULT_TOL};
use crate::quad::{integrate_with_breakpoints, QuadOptions, QuadResult};
use crate::special::{cospi, dawson, sinpi};
use crate::{Error, Result};

/// Which member of the pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    /// The cosine-like `e_α`.
    E,
    /// The sine-like `i_α`.
    I,
}

/// Spectral kernel selector: `K_α` belongs to `e_α`, `V_α` to `i_α`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KernelKind {
    /// `K_α(r) = (1/π) r^{α-1} sin(πα) / (r^{2α} + 2 r^α cos(πα) + 1)`.
    K,
    /// `V_α(r) = (1/π) r^{α/2-1} (1 - r^α) sin(πα/2) / (r^{2α} + 2 r^α cos(πα) + 1)`.
    V,
}

impl Kind {
    /// The kernel whose Laplace transform is this kind's branch-cut part.
    pub fn kernel(self) -> KernelKind {
        match self {
            Kind::E => KernelKind::K,
            Kind::I => KernelKind::V,
        }
    }
}

/// Which piece of a decomposition a sample holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PartTag {
    /// The full function value.
    Total,
    /// The branch-cut integral `f_α` or `h_α`.
    BranchCut,
    /// The residue term `g_α` or `q_α`.
    Residue,
}

/// Oscillator parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OscParams {
    /// Fractional order, `1 ≤ α ≤ 2`.
    pub alpha: f64,
    /// Circular frequency.
    pub omega: f64,
    /// Generalized mass.
    pub m: f64,
    /// Initial displacement.
    pub q0: f64,
}

impl OscParams {
    /// Validated constructor.
    pub fn new(alpha: f64, omega: f64, m: f64, q0: f64) -> Result<Self> {
        if !(1.0..=2.0).contains(&alpha) {
            return Err(Error::Domain {
                op: "OscParams",
                detail: "alpha must lie in [1, 2]",
            });
        }
        if !(omega > 0.0 && omega.is_finite()) || !(m > 0.0 && m.is_finite()) {
            return Err(Error::Domain {
                op: "OscParams",
                detail: "omega and m must be positive and finite",
            });
        }
        if !q0.is_finite() {
            return Err(Error::Domain {
                op: "OscParams",
                detail: "q0 must be finite",
            });
        }
        Ok(Self { alpha, omega, m, q0 })
    }

    /// Unit frequency, mass and displacement.
    pub fn unit(alpha: f64) -> Result<Self> {
        Self::new(alpha, 1.0, 1.0, 1.0)
    }
}

/// One sampled value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OscSample {
    /// Time.
    pub t: f64,
    /// Value.
    pub value: f64,
    /// Which part of the function this is.
    pub part_tag: PartTag,
    /// Absolute error bound.
    pub err_estimate: f64,
    /// Route that produced the value.
    pub method: Method,
}

fn check_time(op: &'static str, t: f64) -> Result<()> {
    if !(t >= 0.0) || !t.is_finite() {
        return Err(Error::Domain {
            op,
            detail: "t must be nonnegative and finite",
        });
    }
    Ok(())
}

/// `A(t) = E_α(-ω² t^α)`; exactly 1 at `t = 0`.
pub fn e_alpha(p: &OscParams, t: f64) -> Result<OscSample> {
    check_time("e_alpha", t)?;
    if t == 0.0 {
        return Ok(OscSample {
            t,
            value: 1.0,
            part_tag: PartTag::Total,
            err_estimate: 0.0,
            method: Method::ClosedForm,
        });
    }
    let z = -p.omega * p.omega * t.powf(p.alpha);
    let v = ml_global(MLArg::with_default_tol(p.alpha, 1.0, z)?)?;
    Ok(OscSample {
        t,
        value: v.value,
        part_tag: PartTag::Total,
        err_estimate: v.err_estimate,
        method: v.method,
    })
}

/// `B(t) = ω t^{α/2} E_{α,1+α/2}(-ω² t^α)`; exactly 0 at `t = 0`.
pub fn i_alpha(p: &OscParams, t: f64) -> Result<OscSample> {
    check_time("i_alpha", t)?;
    if t == 0.0 {
        return Ok(OscSample {
            t,
            value: 0.0,
            part_tag: PartTag::Total,
            err_estimate: 0.0,
            method: Method::ClosedForm,
        });
    }
    let alpha = p.alpha;
    let z = -p.omega * p.omega * t.powf(alpha);
    let scale = p.omega * t.powf(alpha / 2.0);
    // the series bound is absolute in E; ask for enough digits that the
    // scaled result still meets the default tolerance
    let tol = (DEFAULT_TOL / scale.max(1.0)).max(10.0 * f64::EPSILON);
    let v = ml_global(MLArg::new(alpha, 1.0 + alpha / 2.0, z, tol)?)?;
    Ok(OscSample {
        t,
        value: scale * v.value,
        part_tag: PartTag::Total,
        err_estimate: scale * v.err_estimate,
        method: v.method,
    })
}

/// `i_1(t) = e^{-t} erfi(√t)`, evaluated as `(2/√π) D(√t)` so that it stays
/// finite for any `t`.
pub fn i_one(t: f64) -> f64 {
    core::f64::consts::FRAC_2_SQRT_PI * dawson(t.max(0.0).sqrt())
}

fn check_open_alpha(op: &'static str, alpha: f64) -> Result<()> {
    if !(alpha > 1.0 && alpha < 2.0) {
        return Err(Error::Domain {
            op,
            detail: "alpha must lie in (1, 2)",
        });
    }
    Ok(())
}

// (x + cos πα)² + sin² πα, the kernel denominator with x = r^α
fn denominator(alpha: f64, x: f64) -> f64 {
    let c = cospi(alpha);
    let s = sinpi(alpha);
    (x + c) * (x + c) + s * s
}

/// Evaluates `K_α(r)` or `V_α(r)` for `r > 0`, `1 < α < 2`.
pub fn spectral_kernel(kind: KernelKind, alpha: f64, r: f64) -> Result<f64> {
    check_open_alpha("spectral_kernel", alpha)?;
    if !(r > 0.0) || !r.is_finite() {
        return Err(Error::Domain {
            op: "spectral_kernel",
            detail: "r must be positive and finite",
        });
    }
    let x = r.powf(alpha);
    let d = denominator(alpha, x);
    let inv_pi = core::f64::consts::FRAC_1_PI;
    Ok(match kind {
        KernelKind::K => inv_pi * r.powf(alpha - 1.0) * sinpi(alpha) / d,
        KernelKind::V => inv_pi * r.powf(alpha / 2.0 - 1.0) * (1.0 - x) * sinpi(alpha / 2.0) / d,
    })
}

/// `(2/α) e^{t cos(π/α)}`, the envelope of both residue terms.
pub fn residue_envelope(alpha: f64, t: f64) -> f64 {
    2.0 / alpha * (t * cospi(1.0 / alpha)).exp()
}

/// The residue term `g_α(t)` (`Kind::E`) or `q_α(t)` (`Kind::I`).
pub fn residue(kind: Kind, alpha: f64, t: f64) -> f64 {
    let phase = t * sinpi(1.0 / alpha);
    let osc = match kind {
        Kind::E => phase.cos(),
        Kind::I => phase.sin(),
    };
    residue_envelope(alpha, t) * osc
}

// Beyond this exponent e^{-x} is negligible against any kernel value met.
const EXP_CUTOFF: f64 = 45.0;

fn sorted_points(lo: f64, hi: f64, candidates: &[f64]) -> alloc::vec::Vec<f64> {
    let mut pts = alloc::vec![lo];
    let mut inner: alloc::vec::Vec<f64> = candidates.iter().copied().filter(|&x| x > lo && x < hi).collect();
    inner.sort_by(|a, b| a.partial_cmp(b).unwrap());
    inner.dedup_by(|a, b| (*a - *b).abs() <= 1e-12 * b.abs());
    pts.extend(inner);
    pts.push(hi);
    pts
}

/// The branch-cut integral `f_α(t)` (`Kind::E`) or `h_α(t)` (`Kind::I`),
/// certified to absolute error `tol`.
///
/// The half-line is split at `r = 1`. On `(0, 1)` the substitution
/// `r = u^{1/α}` (for `K`) or `r = u^{2/α}` (for `V`) absorbs the power
/// singularity; on `(1, ∞)` the substitution `r = 1/u` maps to `(0, 1]`
/// and the factor `e^{-t/u}` allows truncation at `u = t/45`.
pub fn branch_cut(kind: Kind, alpha: f64, t: f64, tol: f64) -> Result<QuadResult> {
    check_open_alpha("branch_cut", alpha)?;
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::Domain {
            op: "branch_cut",
            detail: "t must be positive and finite",
        });
    }
    let s = sinpi(alpha);
    let c = cospi(alpha);
    let sh = sinpi(alpha / 2.0);
    let inv_pi = core::f64::consts::FRAC_1_PI;
    let opts = QuadOptions {
        abs_tol: 0.5 * tol,
        rel_tol: 0.0,
        max_intervals: 4000,
    };

    // (0, 1): r = u^p, dr = p u^{p-1} du
    let p = match kind {
        Kind::E => 1.0 / alpha,
        Kind::I => 2.0 / alpha,
    };
    let lower = |u: f64| -> f64 {
        let decay = (-t * u.powf(p)).exp();
        match kind {
            // r^{α-1} p u^{p-1} = p, r^α = u
            Kind::E => p * inv_pi * s / denominator(alpha, u) * decay,
            // r^{α/2-1} p u^{p-1} = p, r^α = u²
            Kind::I => p * inv_pi * sh * (1.0 - u * u) / denominator(alpha, u * u) * decay,
        }
    };
    let u_hi = (EXP_CUTOFF / t).powf(1.0 / p).min(1.0);
    let mut cand = alloc::vec::Vec::new();
    for k in [0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0] {
        cand.push((k / t).powf(1.0 / p));
    }
    if c < 0.0 {
        // near-resonance of the denominator at r^α = -cos πα
        cand.push(match kind {
            Kind::E => -c,
            Kind::I => (-c).sqrt(),
        });
    }
    let low = integrate_with_breakpoints(lower, &sorted_points(0.0, u_hi, &cand), opts)?;

    // (1, ∞): r = 1/u, dr = du/u², w = u^α
    let u_lo = t / EXP_CUTOFF;
    if u_lo >= 1.0 {
        return Ok(low);
    }
    let upper = |u: f64| -> f64 {
        let decay = (-t / u).exp();
        if decay == 0.0 {
            return 0.0;
        }
        let w = u.powf(alpha);
        match kind {
            Kind::E => inv_pi * s * u.powf(alpha - 1.0) / denominator(alpha, w) * decay,
            Kind::I => inv_pi * sh * u.powf(alpha / 2.0 - 1.0) * (w - 1.0) / denominator(alpha, w) * decay,
        }
    };
    let mut cand = alloc::vec::Vec::new();
    for k in [0.05, 0.1, 0.2, 0.5, 1.0, 2.0, 5.0] {
        cand.push(k * t);
    }
    if c < 0.0 {
        cand.push((-c).powf(1.0 / alpha));
    }
    let high = integrate_with_breakpoints(upper, &sorted_points(u_lo, 1.0, &cand), opts)?;
    Ok(QuadResult {
        value: low.value + high.value,
        abs_err: low.abs_err + high.abs_err,
        intervals: low.intervals + high.intervals,
    })
}

/// Splits `e_α(t)` or `i_α(t)` (unit frequency, `1 < α < 2`) into its
/// branch-cut and residue parts.
///
/// At `t = 0` the exact limits `f_α(0) = 1 - 2/α`, `g_α(0) = 2/α`,
/// `h_α(0) = q_α(0) = 0` are returned. Frequencies other than 1 are
/// reduced by the caller through `t → ω^{2/α} t`.
pub fn decompose(kind: Kind, p: &OscParams, t: f64) -> Result<(OscSample, OscSample)> {
    check_open_alpha("decompose", p.alpha)?;
    if p.omega != 1.0 {
        return Err(Error::Domain {
            op: "decompose",
            detail: "omega must be 1; rescale time by omega^(2/alpha)",
        });
    }
    check_time("decompose", t)?;
    let alpha = p.alpha;
    let sample = |value, part_tag, err_estimate, method| OscSample {
        t,
        value,
        part_tag,
        err_estimate,
        method,
    };
    if t == 0.0 {
        let (cut, res) = match kind {
            Kind::E => (1.0 - 2.0 / alpha, 2.0 / alpha),
            Kind::I => (0.0, 0.0),
        };
        return Ok((
            sample(cut, PartTag::BranchCut, f64::EPSILON, Method::ClosedForm),
            sample(res, PartTag::Residue, f64::EPSILON, Method::ClosedForm),
        ));
    }
    let cut = branch_cut(kind, alpha, t, DEFAULT_TOL)?;
    let res = residue(kind, alpha, t);
    let res_err = 8.0 * f64::EPSILON * (1.0 + t) * residue_envelope(alpha, t);
    Ok((
        sample(cut.value, PartTag::BranchCut, cut.abs_err, Method::Spectral),
        sample(res, PartTag::Residue, res_err, Method::ClosedForm),
    ))
}

/// Displacement `q_α(t) = q0 A(t)`.
pub fn displacement(p: &OscParams, t: f64) -> Result<f64> {
    Ok(p.q0 * e_alpha(p, t)?.value)
}

/// Momentum `p_α(t) = m D^{α/2} q_α(t) = -m q0 ω² t^{α/2} E_{α,1+α/2}(-ω² t^α)
/// = -m q0 ω B(t)`.
pub fn momentum(p: &OscParams, t: f64) -> Result<f64> {
    Ok(-p.m * p.q0 * p.omega * i_alpha(p, t)?.value)
}

/// Hamiltonian `(p² + ω² q²) / 2`.
pub fn energy(p_val: f64, q_val: f64, omega: f64) -> f64 {
    0.5 * (p_val * p_val + omega * omega * q_val * q_val)
}
