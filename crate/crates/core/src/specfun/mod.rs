//! Scalar special functions.
//!
//! | Function | Description |
//! |----------|-------------|
//! | [`gamma`] | Gamma function Γ(x) |
//! | [`ln_gamma`] | Log-gamma ln Γ(x), x > 0 |
//! | [`exp_integral_e1`] | Exponential integral E₁(x) = ∫ₓ^∞ e^(−t)/t dt |
//! | [`lower_incomplete_gamma`] | γ(s,x) = ∫₀ˣ t^(s−1) e^(−t) dt |
//! | [`regularized_p`] | P(s,x) = γ(s,x)/Γ(s) |
//! | [`volterra_f`] | F(λ) = (∫₀^∞ λ^(t−1)/Γ(t) dt) e^(−λ) |
//! | [`volterra_f_cumulative`] | ∫₀^z F(u) du, evaluated as ∫₀^∞ P(s,z) ds |
//! | [`laplace_numeric`] | numerical Laplace transform, for verification |
//!
//! All functions are pure and reentrant; nothing here holds shared state.

mod expint;
mod gamma;
mod incgamma;
mod laplace;
mod volterra;

pub use expint::exp_integral_e1;
pub use gamma::{gamma, ln_gamma};
pub use incgamma::{lower_incomplete_gamma, regularized_p};
pub use laplace::{laplace_numeric, laplace_numeric_with};
pub use volterra::{volterra_f, volterra_f_cumulative, volterra_f_with};

pub(crate) use volterra::volterra_f_asymptotic;
pub(crate) use volterra::ASYMPTOTIC_CUTOFF as VOLTERRA_ASYMPTOTIC_CUTOFF;

use crate::scalar::fl;
use crate::{Error, Real, Result};

/// Tuning knobs for series, continued fractions and improper integrals.
#[derive(Debug, Clone, Copy)]
pub struct SpecFunConfig<T> {
    /// Relative tolerance for series/continued-fraction termination.
    pub series_tolerance: T,
    /// Iteration cap for series and continued fractions.
    pub max_terms: usize,
    /// Truncation point for improper integrals over t.
    pub tail_cutoff: T,
}

impl<T: Real> Default for SpecFunConfig<T> {
    fn default() -> Self {
        SpecFunConfig {
            series_tolerance: fl(1e-13),
            max_terms: 400,
            tail_cutoff: fl(200.0),
        }
    }
}

impl<T: Real> SpecFunConfig<T> {
    /// Validated constructor: `series_tolerance ∈ (0, 1e-3]`, `max_terms ≥ 50`,
    /// `tail_cutoff > 0`.
    pub fn new(series_tolerance: T, max_terms: usize, tail_cutoff: T) -> Result<Self> {
        if !(series_tolerance > T::zero() && series_tolerance <= fl(1e-3)) {
            return Err(Error::InvalidConfig(
                "series_tolerance must lie in (0, 1e-3]".into(),
            ));
        }
        if max_terms < 50 {
            return Err(Error::InvalidConfig("max_terms must be at least 50".into()));
        }
        if tail_cutoff <= T::zero() {
            return Err(Error::InvalidConfig("tail_cutoff must be positive".into()));
        }
        Ok(SpecFunConfig { series_tolerance, max_terms, tail_cutoff })
    }
}
