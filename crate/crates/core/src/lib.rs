//! Fractional oscillations.
//!
//! The pair `e_α(t) = E_α(-t^α)` and `i_α(t) = t^{α/2} E_{α,1+α/2}(-t^α)`
//! generalizes `cos t` and `sin t` to a fractional order `1 < α < 2`. Both
//! arise by randomizing the clock of a harmonic oscillator with an inverse
//! `α/2`-stable subordinator. This crate evaluates them three independent
//! ways and analyses their zeros:
//!
//! - [`mittag_leffler`]: power series, spectral and asymptotic routes for
//!   `E_{μ,ν}(z)` on the negative real axis, with regime dispatch.
//! - [`oscillations`]: `e_α`, `i_α`, the branch-cut/residue decomposition,
//!   closed forms at `α ∈ {1, 2}`, momentum and energy.
//! - [`fraccalc`]: discrete Riemann-Liouville integrals and Caputo
//!   derivatives on uniform grids, and residual checks of the fractional
//!   oscillator equations.
//! - [`subordination`]: stable subordinator paths, Monte-Carlo ensemble
//!   averages and the operational-time density `p^S(t, τ)`.
//! - [`zeros`]: real zeros with a finiteness certificate, plus the
//!   largest-zero asymptotics.
//!
//! The crate is `no_std` and only needs `alloc`. IO and the command-line
//! front end live in `fracosc-cli`.

#![no_std]
#![warn(missing_docs)]
// NaN-rejecting guards are written as negated comparisons on purpose;
// quadrature and special-function coefficient tables are quoted in full.
#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::excessive_precision)]

extern crate alloc;

mod error;
pub mod fraccalc;
pub mod mittag_leffler;
pub mod oscillations;
pub mod quad;
pub mod special;
pub mod subordination;
pub mod zeros;

pub use error::{Error, Result};
pub use mittag_leffler::{ml_global, MLArg, MLValue, Method};
pub use oscillations::{Kind, OscParams, OscSample, PartTag};
