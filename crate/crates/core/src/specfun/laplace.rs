//! Numerical Laplace transform, used only for verification.

use super::SpecFunConfig;
use crate::quadrature::{integrate, integrate_singular, QuadResult, SingularSpec, Singularity};
use crate::scalar::fl;
use crate::{Error, Real, Result};

/// `∫₀^∞ e^(−λt) f(t) dt` by adaptive quadrature with exponential-tail
/// truncation.
///
/// The origin is treated with the slow-log machinery so that integrands whose
/// mass near zero decays only like `1/ln(1/ε)` (the Volterra function) come
/// out right; for integrands that are regular or merely log-singular at the
/// origin the same path exits early and costs little.
pub fn laplace_numeric<T: Real, F: Fn(T) -> T>(f: F, lam: T) -> Result<T> {
    laplace_numeric_with(&SpecFunConfig::default(), f, lam)
}

pub fn laplace_numeric_with<T: Real, F: Fn(T) -> T>(
    cfg: &SpecFunConfig<T>,
    f: F,
    lam: T,
) -> Result<T> {
    if !(lam > T::zero()) {
        return Err(Error::Domain(format!("laplace transform requires lam > 0, got {lam}")));
    }
    let g = move |t: T| (-lam * t).exp() * f(t);

    // origin piece over (0, u0]
    let u0 = T::one().min(lam.recip());
    let spec = SingularSpec::new(Singularity::SlowLog, Singularity::Regular);
    let origin = integrate_singular(&g, T::zero(), u0, &spec, fl(2e-5));

    // body: doubling panels until the exponential tail is exhausted
    let body_tol = fl::<T>(1e-10);
    let t_max = fl::<T>(60.0) / lam + fl(60.0);
    let mut acc: QuadResult<T> = origin;
    let mut lo = u0;
    let mut width = u0.max(lam.recip());
    let mut small_run = 0usize;
    loop {
        let hi = lo + width;
        let r = integrate(&g, lo, hi, body_tol);
        let piece = r.value;
        acc = QuadResult {
            value: acc.value + r.value,
            error_estimate: acc.error_estimate + r.error_estimate,
            evaluations: acc.evaluations + r.evaluations,
            converged: acc.converged && r.converged,
        };
        if piece.abs() < body_tol * acc.value.abs().max(T::one()) {
            small_run += 1;
            if small_run >= 2 {
                break;
            }
        } else {
            small_run = 0;
        }
        lo = hi;
        width = width * fl(1.5);
        if lo > t_max.max(cfg.tail_cutoff / lam) {
            return Err(Error::QuadratureBudget(format!(
                "laplace tail not exhausted by t = {lo} for lam = {lam}"
            )));
        }
    }
    acc.require_converged("laplace transform")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::{exp_integral_e1, volterra_f};
    use approx::assert_relative_eq;

    #[test]
    fn constant_function() {
        // L(1)(λ) = 1/λ
        let v = laplace_numeric(|_t: f64| 1.0, 2.0).unwrap();
        assert_relative_eq!(v, 0.5, max_relative = 1e-9);
    }

    #[test]
    fn e1_transform_closed_form() {
        // L(E1)(λ) = ln(1+λ)/λ
        let v = laplace_numeric(|t: f64| exp_integral_e1(t).unwrap(), 1.0).unwrap();
        assert!((v - 0.69314718055994530942).abs() < 1e-6);
        let v = laplace_numeric(|t: f64| exp_integral_e1(t).unwrap(), 3.0).unwrap();
        assert!((v - 0.46209812037329687294).abs() < 1e-6);
    }

    #[test]
    fn volterra_transform_closed_form() {
        // L(F)(λ) = 1/ln(1+λ); naive truncation misses by ~1/ln(1/ε), the
        // slow-log tail fit is what rescues this
        let v = laplace_numeric(|t: f64| volterra_f(t).unwrap(), 1.0).unwrap();
        assert!((v - 1.4426950408889634074).abs() < 1e-4, "got {v}");
        let v = laplace_numeric(|t: f64| volterra_f(t).unwrap(), 2.0).unwrap();
        assert!((v - 0.91023922662683739361).abs() < 1e-4, "got {v}");
    }

    #[test]
    fn rejects_nonpositive_lambda() {
        assert!(laplace_numeric(|_t: f64| 1.0, 0.0).is_err());
        assert!(laplace_numeric(|_t: f64| 1.0, -1.0).is_err());
    }
}
