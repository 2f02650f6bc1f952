//! Exponential integral E₁.

use super::SpecFunConfig;
use crate::scalar::fl;
use crate::{Error, Real, Result};

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// E₁(x) = ∫ₓ^∞ e^(−t)/t dt for x > 0.
///
/// Power series for x ≤ 1, modified-Lentz continued fraction above.
pub fn exp_integral_e1<T: Real>(x: T) -> Result<T> {
    exp_integral_e1_with(&SpecFunConfig::default(), x)
}

pub(crate) fn exp_integral_e1_with<T: Real>(cfg: &SpecFunConfig<T>, x: T) -> Result<T> {
    if !(x > T::zero()) {
        return Err(Error::Domain(format!("E1 requires x > 0, got {x}")));
    }
    if x <= T::one() {
        e1_series(cfg, x)
    } else {
        e1_continued_fraction(cfg, x)
    }
}

// E1(x) = -γ - ln x - Σ_{n≥1} (-x)^n / (n · n!)
fn e1_series<T: Real>(cfg: &SpecFunConfig<T>, x: T) -> Result<T> {
    let mut sum = T::zero();
    let mut pow = T::one(); // (-x)^n / n!
    for n in 1..=cfg.max_terms {
        let nf = fl::<T>(n as f64);
        pow = pow * (-x) / nf;
        let term = pow / nf;
        sum = sum + term;
        if term.abs() <= cfg.series_tolerance * (sum.abs() + fl(1e-30)) {
            return Ok(-fl::<T>(EULER_GAMMA) - x.ln() - sum);
        }
    }
    Err(Error::Convergence(format!("E1 series stalled at x = {x}")))
}

// E1(x) = e^{-x} / (x + 1 - 1²/(x + 3 - 2²/(x + 5 - ...)))  (modified Lentz)
fn e1_continued_fraction<T: Real>(cfg: &SpecFunConfig<T>, x: T) -> Result<T> {
    let tiny = fl::<T>(1e-300).max(T::min_positive_value());
    let b0 = x + T::one();
    let mut f = if b0.abs() < tiny { tiny } else { b0 };
    let mut c = f;
    let mut d = T::zero();
    for j in 1..=cfg.max_terms {
        let jf = fl::<T>(j as f64);
        let a = -jf * jf;
        let b = x + fl(2.0 * j as f64 + 1.0);
        d = b + a * d;
        if d.abs() < tiny {
            d = tiny;
        }
        d = d.recip();
        c = b + a / c;
        if c.abs() < tiny {
            c = tiny;
        }
        let delta = c * d;
        f = f * delta;
        if (delta - T::one()).abs() < cfg.series_tolerance {
            return Ok((-x).exp() / f);
        }
    }
    Err(Error::Convergence(format!("E1 continued fraction stalled at x = {x}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    // Independent oracle: the defining series evaluated term by term. Reliable
    // in f64 for x ≤ 1 where the alternating terms never exceed one.
    fn e1_oracle_series(x: f64) -> f64 {
        assert!(x > 0.0 && x <= 1.0);
        let mut sum = 0.0f64;
        let mut pow = 1.0f64;
        for n in 1..200 {
            pow *= -x / n as f64;
            sum += pow / n as f64;
        }
        -EULER_GAMMA - x.ln() - sum
    }

    // Extended-precision values on the log-spaced grid 1e-3..30.
    const E1_GRID: [(f64, f64); 15] = [
        (0.001, 6.331539364136149332),
        (0.0020883071495453525162, 5.5962730700046249925),
        (0.004361026750842235318, 4.8621883678477176088),
        (0.0091071633431423786976, 4.1305647997863762744),
        (0.019018554321561584004, 3.4040530769659889528),
        (0.039716582963733717173, 2.6880964926876322649),
        (0.082940424158676267761, 1.9936689020196247446),
        (0.17320508075688772935, 1.3420479183376477007),
        (0.36170540848218880281, 0.77116776516742587508),
        (0.75535199056257707073, 0.33699094280311370246),
        (1.5774069623151433373, 0.089212321638825836579),
        (3.2941102371453302783, 0.0090051240402167163702),
        (6.8791139596211298788, 0.00013236998304998500746),
        (14.365702864414044965, 3.7683639246053000767e-8),
        (30.0, 3.0215520106888125448e-15),
    ];

    #[test]
    fn matches_oracle_on_log_grid() {
        for &(x, want) in &E1_GRID {
            let got = exp_integral_e1(x).unwrap();
            assert_relative_eq!(got, want, max_relative = 1e-10);
            if x <= 1.0 {
                assert_relative_eq!(got, e1_oracle_series(x), max_relative = 1e-12);
            }
        }
    }

    #[test]
    fn named_value_at_one() {
        assert_relative_eq!(
            exp_integral_e1(1.0f64).unwrap(),
            0.21938393439552027368,
            max_relative = 1e-12
        );
    }

    #[test]
    fn bracketing_at_ten() {
        // e^{-x}/(x+1) ≤ E1(x) ≤ e^{-x}/x
        let v = exp_integral_e1(10.0f64).unwrap();
        assert!(v <= (-10.0f64).exp() / 10.0);
        assert!(v >= (-10.0f64).exp() / 11.0);
    }

    #[test]
    fn strictly_decreasing() {
        assert!(exp_integral_e1(0.5f64).unwrap() > exp_integral_e1(0.6f64).unwrap());
    }

    #[test]
    fn rejects_nonpositive() {
        assert!(exp_integral_e1(0.0f64).is_err());
        assert!(exp_integral_e1(-2.0f64).is_err());
    }

    #[test]
    fn z_e1_bound_on_log_grid() {
        // z·E1(z) ≤ e^{-z} across (0, 50]
        for k in 0..200 {
            let z = 10f64.powf(-3.0 + 4.7 * k as f64 / 199.0);
            let v = exp_integral_e1(z).unwrap();
            assert!(z * v <= (-z).exp() * (1.0 + 1e-12), "bound failed at z = {z}");
        }
    }

    #[test]
    fn f32_smoke() {
        let v = exp_integral_e1(1.0f32).unwrap();
        assert!((v - 0.2193839).abs() < 1e-5);
    }
}
