//! The Volterra-type function F(λ) = (∫₀^∞ λ^(t−1)/Γ(t) dt) e^(−λ).
//!
//! F is the convolution partner of E₁: `(E₁ * F)(z) = 1` for all z > 0, and
//! its Laplace transform is `1/ln(1+λ)`. Near the origin F blows up like
//! `1/(λ ln²(1/λ))`, which is what the quadrature module's slow-log endpoint
//! class exists for.

use super::gamma::ln_gamma;
use super::SpecFunConfig;
use crate::quadrature::integrate;
use crate::scalar::fl;
use crate::{Error, Real, Result};

/// F(λ) for λ > 0 with the default configuration.
pub fn volterra_f<T: Real>(lam: T) -> Result<T> {
    volterra_f_with(&SpecFunConfig::default(), lam)
}

/// F(λ) for λ > 0.
///
/// The t-integral is evaluated in the log domain,
/// `exp((t−1)·ln λ − ln Γ(t) − λ)`, on panels marched out until the integrand
/// tail is below tolerance; tiny arguments switch to the asymptotic series in
/// powers of `1/ln(1/λ)`.
pub fn volterra_f_with<T: Real>(cfg: &SpecFunConfig<T>, lam: T) -> Result<T> {
    if !(lam > T::zero()) {
        return Err(Error::Domain(format!("volterra_f requires lam > 0, got {lam}")));
    }
    if lam < fl(ASYMPTOTIC_CUTOFF) {
        return Ok(volterra_f_asymptotic(lam));
    }
    let ln_lam = lam.ln();
    let integrand = move |t: T| {
        if t <= T::zero() {
            return T::zero();
        }
        match ln_gamma(t) {
            Ok(lg) => ((t - T::one()) * ln_lam - lg - lam).exp(),
            Err(_) => T::zero(),
        }
    };

    let tol = cfg.series_tolerance.max(fl(1e-14));
    let mut acc = T::zero();
    let mut small_run = 0usize;
    let mut lo = T::zero();
    let mut k = 0usize;
    loop {
        let width: T = if k < 4 { T::one() } else { fl(4.0) };
        let hi = lo + width;
        let r = integrate(&integrand, lo, hi, tol);
        acc = acc + r.value;
        if r.value.abs() < tol * acc.abs().max(T::one()) {
            small_run += 1;
            if small_run >= 2 {
                return Ok(acc);
            }
        } else {
            small_run = 0;
        }
        lo = hi;
        k += 1;
        if lo > cfg.tail_cutoff {
            return Err(Error::QuadratureBudget(format!(
                "volterra_f tail bound not reached within tail_cutoff = {} at lam = {lam}",
                cfg.tail_cutoff
            )));
        }
    }
}

/// Switch point below which the asymptotic series is at least as accurate as
/// resolving the sharp peak of the t-integrand (relative error ~1e-7 there,
/// improving rapidly as λ shrinks).
pub(crate) const ASYMPTOTIC_CUTOFF: f64 = 6.144212353328210e-6; // e^{-12}

// k! · (k-th Taylor coefficient of 1/Γ at 0), k = 1..11
const MASS_SERIES: [f64; 11] = [
    1.0,
    1.1544313298030657212,
    -3.9352684291215232865,
    -1.0080632408182856527,
    19.98463336587497874,
    -30.382368879991922459,
    -48.494736500499946753,
    291.06779170545617355,
    -422.81601573381754788,
    -781.06898702833409015,
    5111.3575120299561794,
];

/// Asymptotic form `F(λ) ≈ e^(−λ)/λ · Σ_k c_k k!/L^(k+1)`, `L = ln(1/λ)`.
pub(crate) fn volterra_f_asymptotic<T: Real>(lam: T) -> T {
    let l = -lam.ln();
    let inv = l.recip();
    let mut sum = T::zero();
    let mut pow = inv; // 1/L^{k+1} starting at k=1 -> 1/L^2 after first multiply
    for &c in MASS_SERIES.iter() {
        pow = pow * inv;
        sum = sum + fl::<T>(c) * pow;
    }
    (-lam).exp() / lam * sum
}

/// Cumulative mass ∫₀^z F(u) du, computed through the identity with the
/// regularized lower gamma function: ∫₀^z F = ∫₀^∞ P(s, z) ds. The s-integrand
/// is smooth and bounded, so this serves as an independent oracle for the
/// slow-log quadrature path.
pub fn volterra_f_cumulative<T: Real>(z: T) -> Result<T> {
    if !(z > T::zero()) {
        return Err(Error::Domain(format!("cumulative mass requires z > 0, got {z}")));
    }
    let cfg = SpecFunConfig::default();
    let p = move |s: T| {
        if s <= T::zero() {
            return T::one(); // P(0+, z) = 1
        }
        super::incgamma::regularized_p_with(&cfg, s, z).unwrap_or(T::zero())
    };
    let tol = fl::<T>(1e-12);
    let mut acc = T::zero();
    let mut small_run = 0usize;
    let mut lo = T::zero();
    let cap = fl::<T>(60.0).max(fl::<T>(4.0) * z);
    loop {
        let hi = lo + fl(2.0);
        let r = integrate(&p, lo, hi, tol);
        acc = acc + r.value;
        if r.value.abs() < tol * acc.abs().max(T::one()) {
            small_run += 1;
            if small_run >= 2 {
                return Ok(acc);
            }
        } else {
            small_run = 0;
        }
        lo = hi;
        if lo > cap {
            return Err(Error::QuadratureBudget(format!(
                "P(s, z) tail not exhausted by s = {lo} for z = {z}"
            )));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn matches_extended_precision_quadrature() {
        // oracle: mpmath quadrature of the defining t-integral, T = 200+
        assert_relative_eq!(volterra_f(0.25f64).unwrap(), 1.2652413811333481668, max_relative = 1e-9);
        assert_relative_eq!(volterra_f(0.5f64).unwrap(), 1.1091030263630443051, max_relative = 1e-9);
        assert_relative_eq!(volterra_f(1.0f64).unwrap(), 1.0329209475752570589, max_relative = 1e-9);
        assert_relative_eq!(volterra_f(2.0f64).unwrap(), 1.005655739968673701, max_relative = 1e-9);
        assert_relative_eq!(volterra_f(5.0f64).unwrap(), 1.0000943037190176048, max_relative = 1e-9);
    }

    #[test]
    fn positive_and_domain_checked() {
        assert!(volterra_f(0.0f64).is_err());
        assert!(volterra_f(-1.0f64).is_err());
        for &lam in &[1e-9f64, 1e-4, 0.1, 1.0, 10.0] {
            assert!(volterra_f(lam).unwrap() > 0.0);
        }
    }

    #[test]
    fn asymptotic_agrees_with_quadrature_above_cutoff() {
        // both branches are valid in an overlap window around the cutoff
        for &lam in &[1e-5f64, 3e-5, 1e-4] {
            let asym = volterra_f_asymptotic(lam);
            let quad = volterra_f(lam).unwrap();
            assert_relative_eq!(asym, quad, max_relative = 3e-7);
        }
    }

    #[test]
    fn cumulative_mass_oracle_values() {
        // mpmath: ∫₀^∞ P(s, z) ds
        assert_relative_eq!(
            volterra_f_cumulative(0.25f64).unwrap(),
            0.65794389796767224747,
            max_relative = 1e-9
        );
        assert_relative_eq!(
            volterra_f_cumulative(1.0f64).unwrap(),
            1.481203804515289497,
            max_relative = 1e-9
        );
        assert_relative_eq!(
            volterra_f_cumulative(2.0f64).unwrap(),
            2.4961078998259449069,
            max_relative = 1e-9
        );
    }

    #[test]
    fn slow_log_quadrature_reproduces_cumulative_mass() {
        // the main quadrature path integrated against the F singularity must
        // agree with the P(s,z)-identity oracle
        use crate::quadrature::{integrate_singular, SingularSpec, Singularity};
        let spec = SingularSpec::new(Singularity::SlowLog, Singularity::Regular);
        for &z in &[0.25f64, 1.0] {
            let r = integrate_singular(|u: f64| volterra_f(u).unwrap(), 0.0, z, &spec, 1e-7);
            assert!(r.converged);
            let want = volterra_f_cumulative(z).unwrap();
            assert!(
                (r.value - want).abs() < 2e-6,
                "mass mismatch at z={z}: {} vs {want}",
                r.value
            );
        }
    }
}
