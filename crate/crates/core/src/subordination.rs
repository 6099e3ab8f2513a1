//! Randomized time: the inverse `β`-stable subordinator (`β = α/2`) and the
//! density `p^S(t, τ)` of operational time `τ` at physical time `t`.
//!
//! Averaging a harmonic oscillation over this clock gives the fractional
//! pair,
//!
//! `A(t) = ∫₀^∞ p^S(t, τ) cos(ωτ) dτ = E[cos(ω S(t))]`,
//! `B(t) = ∫₀^∞ p^S(t, τ) sin(ωτ) dτ = E[sin(ω S(t))]`,
//!
//! where `S(t)` is the first passage of the subordinator `U(τ)` above `t`.
//! Both sides are implemented: Monte-Carlo over simulated paths and direct
//! quadrature against `p^S`.

use alloc::vec::Vec;
use core::ops::Range;

#[allow(unused_imports)] // float methods resolve to inherent ones when std is linked
use num_traits::Float;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::oscillations::OscParams;
use crate::quad::{integrate_with_breakpoints, QuadOptions};
use crate::special::rgamma;
use crate::{Error, Result};

/// Paths per reduction chunk. Chunks are summed internally in path order
/// and merged in chunk order, which fixes the floating-point result for a
/// given seed however the chunks are scheduled.
pub const CHUNK_PATHS: u64 = 1024;

/// Target number of operational-time steps to cover the horizon.
pub const TARGET_STEPS: f64 = 1000.0;

/// Minimum ensemble size accepted by [`mc_oscillation`].
pub const MIN_PATHS: u64 = 100;

fn check_beta(op: &'static str, beta: f64) -> Result<()> {
    if !(beta > 0.0 && beta < 1.0) {
        return Err(Error::Domain {
            op,
            detail: "beta must lie in (0, 1)",
        });
    }
    Ok(())
}

// uniform on the open interval (0, 1)
fn open_unit(rng: &mut impl RngCore) -> f64 {
    ((rng.next_u64() >> 11) as f64 + 0.5) * (1.0 / (1u64 << 53) as f64)
}

/// One draw of the standard one-sided `β`-stable law,
/// `E[e^{-sX}] = e^{-s^β}`, by Kanter's representation
///
/// `X = sin(βU) / (sin U)^{1/β} · (sin((1-β)U) / W)^{(1-β)/β}`
///
/// with `U` uniform on `(0, π)` and `W` standard exponential.
pub fn sample_stable_increment(beta: f64, rng: &mut impl RngCore) -> Result<f64> {
    check_beta("sample_stable_increment", beta)?;
    Ok(stable_draw(beta, rng))
}

fn stable_draw(beta: f64, rng: &mut impl RngCore) -> f64 {
    let u = core::f64::consts::PI * open_unit(rng);
    let w = -open_unit(rng).ln();
    let a = (beta * u).sin() / u.sin().powf(1.0 / beta);
    let b = (((1.0 - beta) * u).sin() / w).powf((1.0 - beta) / beta);
    a * b
}

/// A sampled subordinator `U(k τ_step)`, `k = 0, 1, ...`.
#[derive(Debug, Clone, PartialEq)]
pub struct SubordinatorPath {
    /// Stable index.
    pub beta: f64,
    /// Operational-time step.
    pub tau_step: f64,
    /// Physical times, nondecreasing, starting at 0.
    pub u_values: Vec<f64>,
}

impl SubordinatorPath {
    /// Wraps precomputed values after checking the path invariants.
    pub fn new(beta: f64, tau_step: f64, u_values: Vec<f64>) -> Result<Self> {
        check_beta("SubordinatorPath", beta)?;
        if !(tau_step > 0.0) || u_values.first() != Some(&0.0) || u_values.windows(2).any(|w| !(w[1] >= w[0])) {
            return Err(Error::Domain {
                op: "SubordinatorPath",
                detail: "need tau_step > 0 and nondecreasing u_values starting at 0",
            });
        }
        Ok(Self {
            beta,
            tau_step,
            u_values,
        })
    }

    /// Samples increments `τ_step^{1/β} X_k` until the path passes `horizon`.
    pub fn generate(beta: f64, tau_step: f64, horizon: f64, rng: &mut impl RngCore) -> Result<Self> {
        check_beta("SubordinatorPath::generate", beta)?;
        if !(tau_step > 0.0) || !horizon.is_finite() {
            return Err(Error::Domain {
                op: "SubordinatorPath::generate",
                detail: "need tau_step > 0 and a finite horizon",
            });
        }
        let scale = tau_step.powf(1.0 / beta);
        let mut u_values = alloc::vec![0.0];
        let mut u = 0.0;
        while u <= horizon {
            u += scale * stable_draw(beta, rng);
            u_values.push(u);
        }
        Ok(Self {
            beta,
            tau_step,
            u_values,
        })
    }

    /// Largest physical time covered.
    pub fn horizon(&self) -> f64 {
        *self.u_values.last().unwrap_or(&0.0)
    }
}

/// `S(t) = inf{τ : U(τ) > t}`, interpolated linearly in operational time
/// between the bracketing steps.
pub fn inverse_hitting_time(path: &SubordinatorPath, t: f64) -> Result<f64> {
    if !(t >= 0.0) {
        return Err(Error::Domain {
            op: "inverse_hitting_time",
            detail: "t must be nonnegative",
        });
    }
    if t == 0.0 {
        return Ok(0.0);
    }
    let u = &path.u_values;
    let last = path.horizon();
    if t > last {
        return Err(Error::HorizonExceeded { t, horizon: last });
    }
    let k = u.partition_point(|&x| x <= t);
    if k == u.len() {
        return Ok(path.tau_step * (u.len() - 1) as f64);
    }
    let frac = (t - u[k - 1]) / (u[k] - u[k - 1]);
    Ok(path.tau_step * ((k - 1) as f64 + frac))
}

/// `E[S(t)] = t^β / Γ(1 + β)`.
pub fn mean_hitting_time(beta: f64, t: f64) -> f64 {
    t.powf(beta) * rgamma(1.0 + beta)
}

/// Step for paths covering `[0, t_max]`: `0.8 E[S(t_max)] / 1000`.
///
/// For `β ≥ 1/2` the median of `S` is at least `0.8` of its mean, so the
/// median path needs at least 1000 steps.
pub fn default_tau_step(beta: f64, t_max: f64) -> f64 {
    0.8 * mean_hitting_time(beta, t_max) / TARGET_STEPS
}

// Hitting times of one freshly sampled path at every point of a sorted grid,
// generating increments only as far as needed.
fn hitting_times(beta: f64, tau_step: f64, rng: &mut impl RngCore, t_grid: &[f64], out: &mut [f64]) {
    let scale = tau_step.powf(1.0 / beta);
    let mut gi = 0;
    while gi < t_grid.len() && t_grid[gi] == 0.0 {
        out[gi] = 0.0;
        gi += 1;
    }
    let mut u_prev = 0.0;
    let mut k = 0.0;
    while gi < t_grid.len() {
        let u_next = u_prev + scale * stable_draw(beta, rng);
        while gi < t_grid.len() && t_grid[gi] < u_next {
            out[gi] = tau_step * (k + (t_grid[gi] - u_prev) / (u_next - u_prev));
            gi += 1;
        }
        u_prev = u_next;
        k += 1.0;
    }
}

/// Path `i` of seed `s` uses ChaCha8 seeded from `s` on stream `i`, so every
/// path is reproducible on its own.
pub fn path_rng(seed: u64, path_index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(path_index);
    rng
}

/// Running sums of `cos(ωS)` and `sin(ωS)` and their squares per grid point.
#[derive(Debug, Clone, PartialEq)]
pub struct McAccumulator {
    /// Paths accumulated.
    pub n_paths: u64,
    sum_c: Vec<f64>,
    sum_c2: Vec<f64>,
    sum_s: Vec<f64>,
    sum_s2: Vec<f64>,
}

impl McAccumulator {
    /// Empty accumulator for `len` grid points.
    pub fn new(len: usize) -> Self {
        Self {
            n_paths: 0,
            sum_c: alloc::vec![0.0; len],
            sum_c2: alloc::vec![0.0; len],
            sum_s: alloc::vec![0.0; len],
            sum_s2: alloc::vec![0.0; len],
        }
    }

    /// Adds another accumulator's sums to this one.
    pub fn merge(&mut self, other: &Self) {
        self.n_paths += other.n_paths;
        for (a, b) in [
            (&mut self.sum_c, &other.sum_c),
            (&mut self.sum_c2, &other.sum_c2),
            (&mut self.sum_s, &other.sum_s),
            (&mut self.sum_s2, &other.sum_s2),
        ] {
            a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
        }
    }

    /// Means and standard errors.
    pub fn finish(&self, t_grid: &[f64], seed: u64) -> MCEstimate {
        let n = self.n_paths as f64;
        let stats = |sum: &[f64], sum2: &[f64]| -> (Vec<f64>, Vec<f64>) {
            sum.iter()
                .zip(sum2)
                .map(|(&s, &s2)| {
                    let mean = s / n;
                    let var = ((s2 - n * mean * mean) / (n - 1.0)).max(0.0);
                    (mean, (var / n).sqrt())
                })
                .unzip()
        };
        let (a_hat, a_std_err) = stats(&self.sum_c, &self.sum_c2);
        let (b_hat, b_std_err) = stats(&self.sum_s, &self.sum_s2);
        MCEstimate {
            t_grid: t_grid.to_vec(),
            a_hat,
            a_std_err,
            b_hat,
            b_std_err,
            n_paths: self.n_paths,
            seed,
        }
    }
}

/// Ensemble averages of `cos(ωS(t))` and `sin(ωS(t))`.
#[derive(Debug, Clone, PartialEq)]
pub struct MCEstimate {
    /// Evaluation times.
    pub t_grid: Vec<f64>,
    /// Estimates of `A(t)`.
    pub a_hat: Vec<f64>,
    /// Standard errors of `a_hat`.
    pub a_std_err: Vec<f64>,
    /// Estimates of `B(t)`.
    pub b_hat: Vec<f64>,
    /// Standard errors of `b_hat`.
    pub b_std_err: Vec<f64>,
    /// Ensemble size.
    pub n_paths: u64,
    /// Seed.
    pub seed: u64,
}

/// Validated Monte-Carlo setup shared by the sequential and threaded drivers.
#[derive(Debug, Clone, PartialEq)]
pub struct McPlan {
    /// Stable index `α/2`.
    pub beta: f64,
    /// Frequency.
    pub omega: f64,
    /// Operational-time step.
    pub tau_step: f64,
    /// Evaluation times, sorted.
    pub t_grid: Vec<f64>,
    /// Ensemble size.
    pub n_paths: u64,
    /// Seed.
    pub seed: u64,
}

impl McPlan {
    /// Checks the inputs and picks the step from the largest grid time.
    pub fn new(p: &OscParams, t_grid: &[f64], n_paths: u64, seed: u64) -> Result<Self> {
        let beta = p.alpha / 2.0;
        check_beta("mc_oscillation", beta)?;
        if n_paths < MIN_PATHS {
            return Err(Error::Domain {
                op: "mc_oscillation",
                detail: "need at least 100 paths",
            });
        }
        if t_grid.is_empty()
            || t_grid.iter().any(|t| !(*t >= 0.0 && t.is_finite()))
            || t_grid.windows(2).any(|w| w[1] < w[0])
        {
            return Err(Error::Domain {
                op: "mc_oscillation",
                detail: "t_grid must be nonempty, finite, nonnegative and sorted",
            });
        }
        let t_max = t_grid[t_grid.len() - 1];
        let tau_step = if t_max > 0.0 {
            default_tau_step(beta, t_max)
        } else {
            1.0
        };
        Ok(Self {
            beta,
            omega: p.omega,
            tau_step,
            t_grid: t_grid.to_vec(),
            n_paths,
            seed,
        })
    }

    /// Path index ranges of the reduction chunks, in merge order.
    pub fn chunks(&self) -> impl Iterator<Item = Range<u64>> + '_ {
        (0..self.n_paths.div_ceil(CHUNK_PATHS)).map(|c| c * CHUNK_PATHS..((c + 1) * CHUNK_PATHS).min(self.n_paths))
    }

    /// Accumulates the given paths in index order.
    pub fn run_chunk(&self, paths: Range<u64>) -> McAccumulator {
        let len = self.t_grid.len();
        let mut acc = McAccumulator::new(len);
        let mut s = alloc::vec![0.0; len];
        for i in paths {
            let mut rng = path_rng(self.seed, i);
            hitting_times(self.beta, self.tau_step, &mut rng, &self.t_grid, &mut s);
            for (k, &sk) in s.iter().enumerate() {
                let (sin, cos) = (self.omega * sk).sin_cos();
                acc.sum_c[k] += cos;
                acc.sum_c2[k] += cos * cos;
                acc.sum_s[k] += sin;
                acc.sum_s2[k] += sin * sin;
            }
            acc.n_paths += 1;
        }
        acc
    }

    /// Merges chunk results (which must be in [`McPlan::chunks`] order).
    pub fn reduce(&self, parts: impl IntoIterator<Item = McAccumulator>) -> MCEstimate {
        let mut total = McAccumulator::new(self.t_grid.len());
        for part in parts {
            total.merge(&part);
        }
        total.finish(&self.t_grid, self.seed)
    }
}

/// Monte-Carlo estimates of `A(t)` and `B(t)` from `n_paths` subordinated
/// clocks, `1 ≤ α < 2`.
pub fn mc_oscillation(p: &OscParams, t_grid: &[f64], n_paths: u64, seed: u64) -> Result<MCEstimate> {
    let plan = McPlan::new(p, t_grid, n_paths, seed)?;
    let parts: Vec<_> = plan.chunks().map(|r| plan.run_chunk(r)).collect();
    Ok(plan.reduce(parts))
}

/// Required agreement of the calibration check.
pub const INVERSION_TOL: f64 = 1e-10;

/// The density `p^S(t, ·)` at fixed `α` and `t`.
///
/// By self-similarity `p^S(t, τ) = t^{-β} M_β(τ t^{-β})` with the
/// M-Wright function `M_β`, `β = α/2`. For `1/2 < β < 1` the Bromwich
/// integral defining `p^S` is deformed onto its steepest-descent path,
/// where the integrand has zero phase:
///
/// `M_β(x) = x^{β/(1-β)} / (π(1-β)) ∫₀^π A(φ) exp(-x^{1/(1-β)} A(φ)) dφ`,
/// `A(φ) = (sin βφ / sin φ)^{1/(1-β)} sin((1-β)φ) / sin βφ`.
///
/// The integrand is positive, so no cancellation occurs. Construction runs
/// the same code at `β = 1/2` against the closed form
/// `M_{1/2}(x) = e^{-x²/4}/√π` and refuses to proceed unless it agrees to
/// [`INVERSION_TOL`]. At `α = 1` the closed form
/// `p^S(t, τ) = e^{-τ²/(4t)} / √(πt)` is used directly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PsDensity {
    /// Order `α ∈ [1, 2)`.
    pub alpha: f64,
    /// Physical time.
    pub t: f64,
    scale: f64,
    /// Largest deviation found by the calibration check.
    pub calibration_deviation: f64,
}

fn log_a(beta: f64, psi: f64) -> f64 {
    // φ = π - ψ
    let pi = core::f64::consts::PI;
    let sb = (beta * (pi - psi)).sin();
    let s1b = ((1.0 - beta) * (pi - psi)).sin();
    (sb.ln() - psi.sin().ln()) / (1.0 - beta) + s1b.ln() - sb.ln()
}

fn m_wright(beta: f64, x: f64) -> Result<f64> {
    if x == 0.0 {
        return Ok(rgamma(1.0 - beta));
    }
    let pi = core::f64::consts::PI;
    let y = x.powf(1.0 / (1.0 - beta));
    let pref = x.powf(beta / (1.0 - beta)) / (pi * (1.0 - beta));
    if pref == 0.0 {
        return Ok(0.0);
    }
    let integrand = |psi: f64| {
        let la = log_a(beta, psi);
        let v = (la - y * la.exp()).exp();
        if v.is_finite() {
            v
        } else {
            0.0
        }
    };
    // the mass sits at ψ ~ x for small x
    let mut pts = alloc::vec![0.0];
    for c in [1e-3, 1e-2, 0.1, 0.3, 1.0, 3.0, 10.0] {
        let p = c * x;
        if p < pi / 2.0 {
            pts.push(p);
        }
    }
    pts.push(pi / 2.0);
    pts.push(pi);
    let opts = QuadOptions {
        abs_tol: 1e-14 / pref,
        rel_tol: 1e-14,
        max_intervals: 2000,
    };
    let r = integrate_with_breakpoints(integrand, &pts, opts)?;
    Ok(pref * r.value)
}

impl PsDensity {
    /// Validates the arguments and runs the calibration check.
    pub fn new(alpha: f64, t: f64) -> Result<Self> {
        if !(1.0..2.0).contains(&alpha) {
            return Err(Error::Domain {
                op: "ps_density",
                detail: "alpha must lie in [1, 2); at alpha = 2 the density is a point mass",
            });
        }
        if !(t > 0.0 && t.is_finite()) {
            return Err(Error::Domain {
                op: "ps_density",
                detail: "t must be positive and finite",
            });
        }
        let mut dev: f64 = 0.0;
        for x in [0.01, 0.3, 1.0, 2.5, 5.0] {
            let closed = (-0.25 * x * x).exp() / core::f64::consts::PI.sqrt();
            dev = dev.max((m_wright(0.5, x)? - closed).abs());
        }
        if !(dev <= INVERSION_TOL) {
            return Err(Error::Inversion {
                deviation: dev,
                tol: INVERSION_TOL,
            });
        }
        Ok(Self {
            alpha,
            t,
            scale: t.powf(alpha / 2.0),
            calibration_deviation: dev,
        })
    }

    /// `p^S(t, τ)` for `τ ≥ 0`.
    pub fn eval(&self, tau: f64) -> Result<f64> {
        if !(tau >= 0.0) {
            return Err(Error::Domain {
                op: "ps_density",
                detail: "tau must be nonnegative",
            });
        }
        if self.alpha == 1.0 {
            let t = self.t;
            return Ok((-tau * tau / (4.0 * t)).exp() / (core::f64::consts::PI * t).sqrt());
        }
        Ok(m_wright(self.alpha / 2.0, tau / self.scale)? / self.scale)
    }

    /// A `τ` beyond which the density is below `1e-18` of its scale.
    pub fn tau_cutoff(&self) -> Result<f64> {
        let mut x = 1.0;
        while self.eval(x * self.scale)? * self.scale > 1e-18 {
            x *= 1.5;
        }
        Ok(x * self.scale)
    }
}

/// `p^S(t, τ)`, `1 ≤ α < 2`, `t > 0`, `τ ≥ 0`.
pub fn ps_density(alpha: f64, t: f64, tau: f64) -> Result<f64> {
    PsDensity::new(alpha, t)?.eval(tau)
}

/// `∫₀^∞ p^S(t, τ) g(τ) dτ` to absolute accuracy about `1e-11`.
pub fn subordinated_integral(density: &PsDensity, omega_hint: f64, mut g: impl FnMut(f64) -> f64) -> Result<f64> {
    let tau_max = density.tau_cutoff()?;
    let period = core::f64::consts::PI / omega_hint.max(1e-3);
    let pieces = ((tau_max / period).ceil() as usize).clamp(8, 4000);
    let pts: Vec<f64> = (0..=pieces).map(|k| tau_max * k as f64 / pieces as f64).collect();
    let mut failure = None;
    let r = integrate_with_breakpoints(
        |tau| match density.eval(tau) {
            Ok(v) => v * g(tau),
            Err(e) => {
                failure.get_or_insert(e);
                0.0
            }
        },
        &pts,
        QuadOptions::absolute(1e-11),
    )?;
    match failure {
        Some(e) => Err(e),
        None => Ok(r.value),
    }
}

/// `(A(t), B(t))` by quadrature of the subordination integrals.
pub fn quadrature_oscillation(p: &OscParams, t: f64) -> Result<(f64, f64)> {
    let density = PsDensity::new(p.alpha, t)?;
    let w = p.omega;
    let a = subordinated_integral(&density, w, |tau| (w * tau).cos())?;
    let b = subordinated_integral(&density, w, |tau| (w * tau).sin())?;
    Ok((a, b))
}
