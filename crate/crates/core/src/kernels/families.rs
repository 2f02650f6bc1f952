//! Built-in kernel families and their conjugate pairs.

use super::{ConjugatePair, Kernel, WeightFunction};
use crate::interp::CubicSpline;
use crate::quadrature::Singularity;
use crate::scalar::fl;
use crate::specfun::{
    exp_integral_e1, gamma, volterra_f_asymptotic, volterra_f_cumulative, volterra_f_with,
    SpecFunConfig,
};
use crate::{Error, Real, Result};

fn check_unit_alpha<T: Real>(alpha: T, open_top: bool) -> Result<()> {
    let ok = alpha > T::zero() && if open_top { alpha < T::one() } else { alpha <= T::one() };
    if ok {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "alpha must lie in (0, 1{}, got {alpha}",
            if open_top { ")" } else { "]" }
        )))
    }
}

/// The unit kernel 𝟙(x, y) = 1.
pub fn unit_kernel<T: Real>() -> Kernel<T> {
    Kernel::new("unit", |_x, _y| T::one(), Singularity::Regular, Singularity::Regular)
        .expect("unit kernel is always valid")
}

/// Power-difference kernel `(x−y)^(α−1)/Γ(α)` for α ∈ (0, 1].
pub fn riemann_liouville_kernel<T: Real>(alpha: T) -> Result<Kernel<T>> {
    check_unit_alpha(alpha, false)?;
    let c = gamma(alpha)?.recip();
    let diag = if alpha < T::one() {
        Singularity::Algebraic(T::one() - alpha)
    } else {
        Singularity::Regular
    };
    Ok(Kernel::new(
        format!("rl({alpha})"),
        move |x: T, y: T| c * (x - y).powf(alpha - T::one()),
        diag,
        Singularity::Regular,
    )?)
}

/// `(x−y)^(−α)/Γ(1−α)`, the conjugate of the power-difference kernel.
pub fn riemann_liouville_conjugate<T: Real>(alpha: T) -> Result<Kernel<T>> {
    check_unit_alpha(alpha, true)?;
    let c = gamma(T::one() - alpha)?.recip();
    Ok(Kernel::new(
        format!("rl'({alpha})"),
        move |x: T, y: T| c * (x - y).powf(-alpha),
        Singularity::Algebraic(alpha),
        Singularity::Regular,
    )?)
}

/// Riemann-Liouville pair with unit weight on `[a, b]`, α ∈ (0, 1).
pub fn riemann_liouville_pair<T: Real>(alpha: T, a: T, b: T) -> Result<ConjugatePair<T>> {
    check_unit_alpha(alpha, true)?;
    let weight = WeightFunction::unit(a, b)?;
    let g1 = gamma(alpha + T::one())?.recip();
    let g2 = gamma(fl::<T>(2.0) - alpha)?.recip();
    let kernel = riemann_liouville_kernel(alpha)?
        .with_closed_form_fk(move |y: T| (b - y).powf(alpha) * g1)
        .with_closed_form_gk(move |y: T| (y - a).powf(alpha) * g1);
    let conjugate = riemann_liouville_conjugate(alpha)?
        .with_closed_form_fk(move |y: T| (b - y).powf(T::one() - alpha) * g2)
        .with_closed_form_gk(move |y: T| (y - a).powf(T::one() - alpha) * g2);
    Ok(ConjugatePair { kernel, conjugate, weight })
}

/// Hadamard pair `(ln(x/y))^(α−1)/Γ(α)` with weight 1/x on `[a, b]`, 0 < a < b.
pub fn hadamard_pair<T: Real>(alpha: T, a: T, b: T) -> Result<ConjugatePair<T>> {
    check_unit_alpha(alpha, true)?;
    if !(a > T::zero()) {
        return Err(Error::Domain(format!("hadamard kernels need a > 0, got {a}")));
    }
    let weight = WeightFunction::reciprocal(a, b)?;
    let c1 = gamma(alpha)?.recip();
    let c2 = gamma(T::one() - alpha)?.recip();
    let g1 = gamma(alpha + T::one())?.recip();
    let g2 = gamma(fl::<T>(2.0) - alpha)?.recip();
    // ln(x/y) ~ (x−y)/y at the diagonal: same algebraic class as the
    // power-difference kernel
    let kernel = Kernel::new(
        format!("hadamard({alpha})"),
        move |x: T, y: T| c1 * (x / y).ln().powf(alpha - T::one()),
        Singularity::Algebraic(T::one() - alpha),
        Singularity::Regular,
    )?
    .with_closed_form_fk(move |y: T| (b / y).ln().powf(alpha) * g1)
    .with_closed_form_gk(move |y: T| (y / a).ln().powf(alpha) * g1);
    let conjugate = Kernel::new(
        format!("hadamard'({alpha})"),
        move |x: T, y: T| c2 * (x / y).ln().powf(-alpha),
        Singularity::Algebraic(alpha),
        Singularity::Regular,
    )?
    .with_closed_form_fk(move |y: T| (b / y).ln().powf(T::one() - alpha) * g2)
    .with_closed_form_gk(move |y: T| (y / a).ln().powf(T::one() - alpha) * g2);
    Ok(ConjugatePair { kernel, conjugate, weight })
}

/// Erdélyi-Kober-type pair `(x^σ − y^σ)^(α−1)/Γ(α)` with weight `σ x^(σ−1)`
/// on `[a, b]`, 0 < a < b, σ > 0.
pub fn erdelyi_kober_pair<T: Real>(alpha: T, sigma: T, a: T, b: T) -> Result<ConjugatePair<T>> {
    check_unit_alpha(alpha, true)?;
    if !(a > T::zero() && sigma > T::zero()) {
        return Err(Error::Domain("erdelyi-kober kernels need a > 0 and sigma > 0".into()));
    }
    let weight = WeightFunction::power(sigma, a, b)?;
    let c1 = gamma(alpha)?.recip();
    let c2 = gamma(T::one() - alpha)?.recip();
    let g1 = gamma(alpha + T::one())?.recip();
    let g2 = gamma(fl::<T>(2.0) - alpha)?.recip();
    let bsig = b.powf(sigma);
    let kernel = Kernel::new(
        format!("erdelyi_kober({alpha},{sigma})"),
        move |x: T, y: T| c1 * (x.powf(sigma) - y.powf(sigma)).powf(alpha - T::one()),
        Singularity::Algebraic(T::one() - alpha),
        Singularity::Regular,
    )?
    .with_closed_form_fk(move |y: T| (bsig - y.powf(sigma)).powf(alpha) * g1)
    .with_closed_form_gk(move |y: T| (y.powf(sigma) - a.powf(sigma)).powf(alpha) * g1);
    let conjugate = Kernel::new(
        format!("erdelyi_kober'({alpha},{sigma})"),
        move |x: T, y: T| c2 * (x.powf(sigma) - y.powf(sigma)).powf(-alpha),
        Singularity::Algebraic(alpha),
        Singularity::Regular,
    )?
    .with_closed_form_fk(move |y: T| (bsig - y.powf(sigma)).powf(T::one() - alpha) * g2)
    .with_closed_form_gk(move |y: T| (y.powf(sigma) - a.powf(sigma)).powf(T::one() - alpha) * g2);
    Ok(ConjugatePair { kernel, conjugate, weight })
}

/// `k'_α(x, y) = E₁((x−y)/α)/α` on [0, 1] with unit weight; log-singular at
/// the diagonal. Marginals have the closed form `1 + X E₁(X) − e^(−X)`.
pub fn exp_integral_kernel<T: Real>(alpha: T) -> Result<Kernel<T>> {
    if !(alpha > T::zero()) {
        return Err(Error::Domain(format!("exp-integral kernel needs alpha > 0, got {alpha}")));
    }
    let inv = alpha.recip();
    let cumulative = move |x_over_alpha: T| {
        if x_over_alpha <= T::zero() {
            return T::zero();
        }
        let e1 = exp_integral_e1(x_over_alpha).unwrap_or(T::zero());
        T::one() + x_over_alpha * e1 - (-x_over_alpha).exp()
    };
    Ok(Kernel::new(
        format!("e1({alpha})"),
        move |x: T, y: T| inv * exp_integral_e1((x - y) * inv).unwrap_or(T::infinity()),
        Singularity::Log,
        Singularity::Regular,
    )?
    .with_closed_form_fk(move |y: T| cumulative((T::one() - y) * inv))
    .with_closed_form_gk(move |y: T| cumulative(y * inv)))
}

/// `k_α(x, y) = F((x−y)/α)` on [0, 1] with unit weight, where F is the
/// Volterra-type function; the conjugate partner of [`exp_integral_kernel`].
///
/// F is tabulated once per kernel on a log-spaced mesh (cubic spline of
/// `u·F(u)` against `ln u`, relative error ~1e-8) with the asymptotic series
/// taking over below `u = e^(−12)`; a kernel evaluation is then table lookup
/// rather than a quadrature of the defining t-integral.
pub fn volterra_kernel<T: Real>(alpha: T) -> Result<Kernel<T>> {
    volterra_kernel_on(alpha, T::one())
}

pub(crate) fn volterra_kernel_on<T: Real>(alpha: T, span: T) -> Result<Kernel<T>> {
    if !(alpha > T::zero()) {
        return Err(Error::Domain(format!("volterra kernel needs alpha > 0, got {alpha}")));
    }
    let inv = alpha.recip();
    let cfg = SpecFunConfig::default();
    let theta_min = fl::<T>(-12.0);
    let theta_max = (span * inv).ln() + fl(1e-3);
    let n = ((theta_max - theta_min).to_f64().unwrap_or(12.0) / 0.008).ceil() as usize + 1;
    let mut xs = Vec::with_capacity(n);
    let mut ys = Vec::with_capacity(n);
    for i in 0..n {
        let theta = theta_min
            + (theta_max - theta_min) * fl::<T>(i as f64) / fl((n - 1) as f64);
        let u = theta.exp();
        let f = volterra_f_with(&cfg, u)?;
        xs.push(theta);
        ys.push(u * f);
    }
    let table = CubicSpline::new(xs, ys);

    let eval_f = move |u: T| {
        if u < fl(crate::specfun::VOLTERRA_ASYMPTOTIC_CUTOFF) {
            volterra_f_asymptotic(u)
        } else {
            table.eval(u.ln()) / u
        }
    };
    let alpha_c = alpha;
    Ok(Kernel::new(
        format!("volterra({alpha})"),
        move |x: T, y: T| eval_f((x - y) * inv),
        Singularity::SlowLog,
        Singularity::Regular,
    )?
    .with_closed_form_fk(move |y: T| {
        alpha_c * volterra_f_cumulative((T::one() - y) * inv).unwrap_or(T::nan())
    })
    .with_closed_form_gk(move |y: T| {
        alpha_c * volterra_f_cumulative(y * inv).unwrap_or(T::nan())
    }))
}

/// The §-five pair on [0, 1] with unit weight: Volterra-function kernel as the
/// integral side, exponential-integral kernel as the derivative side.
pub fn e1_volterra_pair<T: Real>(alpha: T) -> Result<ConjugatePair<T>> {
    let weight = WeightFunction::unit(T::zero(), T::one())?;
    Ok(ConjugatePair {
        kernel: volterra_kernel(alpha)?,
        conjugate: exp_integral_kernel(alpha)?,
        weight,
    })
}
