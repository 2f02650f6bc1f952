//! Weight functions, kernel-functions, admissibility estimates, composition
//! kernels and conjugacy verification.
//!
//! A kernel lives on the triangle `Ω = {(x, y): a ≤ y < x ≤ b}` and is
//! admissible (class `K_ω`) when its marginals
//! `F_k(y) = ∫_y^b k(x,y) ω(x) dx` and `G_k(y) = ∫_a^y k(y,x) ω(x) dx`
//! are essentially bounded. Two kernels `k`, `k'` are conjugate when the
//! composition kernel `δ_{k,k'}(x,y) = ∫_y^x k(x,z) k'(z,y) ω(z) dz` is
//! identically one in both orders; that is the condition that makes the
//! `k'`-derivative a left inverse of the `k`-integral. For difference kernels
//! with unit weight it reduces to the classical Sonine condition.

mod config;
mod families;

pub use config::{build_pair, KernelConfig, KernelFamily};
pub use families::{
    e1_volterra_pair, erdelyi_kober_pair, exp_integral_kernel, hadamard_pair,
    riemann_liouville_conjugate, riemann_liouville_kernel, riemann_liouville_pair, unit_kernel,
    volterra_kernel,
};

use std::sync::Arc;

use serde::Serialize;

use crate::quadrature::{integrate_singular, SingularSpec, Singularity};
use crate::scalar::{fl, fu};
use crate::{Error, Real, Result};

/// A weight `ω` on `[a, b]` with `ω` and `1/ω` essentially bounded.
#[derive(Clone)]
pub struct WeightFunction<T> {
    a: T,
    b: T,
    eval: Arc<dyn Fn(T) -> T + Send + Sync>,
    sup_norm: T,
    inv_sup_norm: T,
}

impl<T: Real> WeightFunction<T> {
    /// Build a weight, validating positivity and the two sup-norms on a
    /// sample grid.
    pub fn new(
        a: T,
        b: T,
        eval: impl Fn(T) -> T + Send + Sync + 'static,
        sup_norm: T,
        inv_sup_norm: T,
    ) -> Result<Self> {
        if !(b > a) {
            return Err(Error::Domain(format!("weight interval needs b > a, got [{a}, {b}]")));
        }
        let n = 64;
        for i in 0..=n {
            let x = a + (b - a) * fu::<T>(i) / fu(n);
            let w = eval(x);
            if !(w > T::zero()) || !w.is_finite() {
                return Err(Error::Domain(format!("weight must be positive, w({x}) = {w}")));
            }
            let slack = T::one() + fl(1e-12);
            if w > sup_norm * slack {
                return Err(Error::Domain(format!("w({x}) = {w} exceeds sup_norm {sup_norm}")));
            }
            if w.recip() > inv_sup_norm * slack {
                return Err(Error::Domain(format!("1/w({x}) exceeds inv_sup_norm {inv_sup_norm}")));
            }
        }
        Ok(WeightFunction { a, b, eval: Arc::new(eval), sup_norm, inv_sup_norm })
    }

    /// ω ≡ 1 on `[a, b]`.
    pub fn unit(a: T, b: T) -> Result<Self> {
        Self::new(a, b, |_| T::one(), T::one(), T::one())
    }

    /// ω(x) = 1/x on `[a, b]`, 0 < a < b (the Hadamard weight).
    pub fn reciprocal(a: T, b: T) -> Result<Self> {
        if !(a > T::zero()) {
            return Err(Error::Domain(format!("reciprocal weight needs a > 0, got {a}")));
        }
        Self::new(a, b, |x: T| x.recip(), a.recip(), b)
    }

    /// ω(x) = σ x^(σ−1) on `[a, b]`, 0 < a < b (the power weight).
    pub fn power(sigma: T, a: T, b: T) -> Result<Self> {
        if !(a > T::zero()) || !(sigma > T::zero()) {
            return Err(Error::Domain("power weight needs a > 0 and sigma > 0".into()));
        }
        let lo = sigma * a.powf(sigma - T::one());
        let hi = sigma * b.powf(sigma - T::one());
        let (sup, inv_sup) = if sigma >= T::one() { (hi, lo.recip()) } else { (lo, hi.recip()) };
        Self::new(a, b, move |x: T| sigma * x.powf(sigma - T::one()), sup, inv_sup)
    }

    pub fn a(&self) -> T {
        self.a
    }

    pub fn b(&self) -> T {
        self.b
    }

    pub fn eval(&self, x: T) -> T {
        (self.eval)(x)
    }

    /// ‖ω‖_∞
    pub fn sup_norm(&self) -> T {
        self.sup_norm
    }

    /// ‖ω⁻¹‖_∞
    pub fn inv_sup_norm(&self) -> T {
        self.inv_sup_norm
    }
}

impl<T: Real> std::fmt::Debug for WeightFunction<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("WeightFunction")
            .field("a", &self.a)
            .field("b", &self.b)
            .field("sup_norm", &self.sup_norm)
            .field("inv_sup_norm", &self.inv_sup_norm)
            .finish()
    }
}

/// A kernel-function on Ω with endpoint-singularity metadata.
///
/// `diag` describes the behavior of `k(x, y)` as `y → x⁻` (in the distance
/// `u = x − y`), `lower` the behavior as `y → a⁺`. Kernels are immutable after
/// construction. `closed_form_fk`/`closed_form_gk`, where a family has them,
/// give the marginals in closed form; tests use them as oracles against the
/// quadrature estimates, the main path never does.
#[derive(Clone)]
pub struct Kernel<T> {
    name: String,
    eval: Arc<dyn Fn(T, T) -> T + Send + Sync>,
    diag: Singularity<T>,
    lower: Singularity<T>,
    closed_form_fk: Option<Arc<dyn Fn(T) -> T + Send + Sync>>,
    closed_form_gk: Option<Arc<dyn Fn(T) -> T + Send + Sync>>,
}

impl<T: Real> Kernel<T> {
    /// User-defined kernel from an evaluation map and singularity metadata.
    /// Algebraic exponents must stay below one (integrable singularities).
    pub fn new(
        name: impl Into<String>,
        eval: impl Fn(T, T) -> T + Send + Sync + 'static,
        diag: Singularity<T>,
        lower: Singularity<T>,
    ) -> Result<Self> {
        for s in [&diag, &lower] {
            if let Singularity::Algebraic(p) = s {
                if !(*p > T::zero() && *p < T::one()) {
                    return Err(Error::Domain(format!(
                        "algebraic kernel exponent must lie in (0, 1), got {p}"
                    )));
                }
            }
        }
        Ok(Kernel {
            name: name.into(),
            eval: Arc::new(eval),
            diag,
            lower,
            closed_form_fk: None,
            closed_form_gk: None,
        })
    }

    pub(crate) fn with_closed_form_fk(
        mut self,
        fk: impl Fn(T) -> T + Send + Sync + 'static,
    ) -> Self {
        self.closed_form_fk = Some(Arc::new(fk));
        self
    }

    pub(crate) fn with_closed_form_gk(
        mut self,
        gk: impl Fn(T) -> T + Send + Sync + 'static,
    ) -> Self {
        self.closed_form_gk = Some(Arc::new(gk));
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// k(x, y) for (x, y) ∈ Ω.
    pub fn eval(&self, x: T, y: T) -> T {
        (self.eval)(x, y)
    }

    /// Singularity class of `k(x, ·)` at the diagonal.
    pub fn diag_singularity(&self) -> Singularity<T> {
        self.diag
    }

    /// Singularity class of `k(·, y)` as the second argument reaches `a`.
    pub fn lower_singularity(&self) -> Singularity<T> {
        self.lower
    }

    /// Closed-form marginal `F_k`, where the family has one.
    pub fn closed_form_fk(&self) -> Option<&(dyn Fn(T) -> T + Send + Sync)> {
        self.closed_form_fk.as_deref()
    }

    /// Closed-form marginal `G_k`, where the family has one.
    pub fn closed_form_gk(&self) -> Option<&(dyn Fn(T) -> T + Send + Sync)> {
        self.closed_form_gk.as_deref()
    }
}

impl<T: Real> std::fmt::Debug for Kernel<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Kernel")
            .field("name", &self.name)
            .field("diag", &self.diag)
            .field("lower", &self.lower)
            .finish()
    }
}

/// A kernel, its conjugate and the weight they are bound to.
#[derive(Debug, Clone)]
pub struct ConjugatePair<T> {
    pub kernel: Kernel<T>,
    pub conjugate: Kernel<T>,
    pub weight: WeightFunction<T>,
}

/// Numerical evidence that a kernel belongs to `K_ω`.
#[derive(Debug, Clone, Serialize)]
pub struct MembershipReport<T> {
    /// Estimate of `‖F_k‖_∞` over `[a, b)`.
    pub sup_fk: T,
    /// Estimate of `‖G_k‖_∞` over `(a, b]`.
    pub sup_gk: T,
    pub grid_size: usize,
    /// True iff both estimates are finite and every grid quadrature converged.
    pub passes: bool,
}

/// Estimate the marginal sup-norms on a y-grid biased toward the endpoints.
///
/// An essential-sup statement has no finite test; the grid mixes uniform
/// midpoints with geometric approaches to both endpoints and the report
/// records its size so failures are reproducible.
pub fn membership_report<T: Real>(
    k: &Kernel<T>,
    w: &WeightFunction<T>,
    grid_size: usize,
) -> Result<MembershipReport<T>> {
    if grid_size < 16 {
        return Err(Error::InvalidConfig("membership grid_size must be at least 16".into()));
    }
    let (a, b) = (w.a(), w.b());
    let span = b - a;
    let tol = fl::<T>(1e-8);
    let mut sup_fk = T::zero();
    let mut sup_gk = T::zero();
    let mut ok = true;

    for i in 0..grid_size {
        let frac: T = match i % 3 {
            0 => (fu::<T>(i / 3) + fl(0.5)) / fu((grid_size + 2) / 3),
            1 => fl::<T>(2.0).powi(-((i / 3) as i32 + 2)),
            _ => T::one() - fl::<T>(2.0).powi(-((i / 3) as i32 + 2)),
        };
        let y = a + span * frac;
        if !(y > a && y < b) {
            continue;
        }

        // F_k(y) = ∫_y^b k(x, y) ω(x) dx; k(x, y) singular as x → y⁺
        let fk_spec = SingularSpec::new(k.diag, Singularity::Regular);
        let fk = integrate_singular(|x: T| k.eval(x, y) * w.eval(x), y, b, &fk_spec, tol);
        // G_k(y) = ∫_a^y k(y, x) ω(x) dx; singular as x → y⁻, maybe also at a
        let gk_spec = SingularSpec::new(k.lower, k.diag);
        let gk = integrate_singular(|x: T| k.eval(y, x) * w.eval(x), a, y, &gk_spec, tol);

        ok &= fk.converged && gk.converged && fk.value.is_finite() && gk.value.is_finite();
        sup_fk = sup_fk.max(fk.value);
        sup_gk = sup_gk.max(gk.value);
    }

    Ok(MembershipReport {
        sup_fk,
        sup_gk,
        grid_size,
        passes: ok && sup_fk.is_finite() && sup_gk.is_finite(),
    })
}

/// δ_{k1,k2}(x, y) = ∫_y^x k1(x, z) k2(z, y) ω(z) dz by singular quadrature.
///
/// k1 is singular as z → x (its diagonal class), k2 as z → y; the quadrature
/// splits at the midpoint and removes each singularity on its own side.
pub fn composition_delta<T: Real>(
    k1: &Kernel<T>,
    k2: &Kernel<T>,
    w: &WeightFunction<T>,
    x: T,
    y: T,
    tol: T,
) -> Result<T> {
    if !(x > y) || y < w.a() || x > w.b() {
        return Err(Error::Domain(format!("({x}, {y}) is not inside the triangle Ω")));
    }
    let spec = SingularSpec::new(k2.diag_singularity(), k1.diag_singularity());
    let r = integrate_singular(
        |z: T| k1.eval(x, z) * k2.eval(z, y) * w.eval(z),
        y,
        x,
        &spec,
        tol,
    );
    r.require_converged(&format!("delta_{{{},{}}}({x}, {y})", k1.name(), k2.name()))
}

/// The composition kernel δ_{k1,k2} packaged as a kernel-function of its own.
#[derive(Clone)]
pub struct CompositionKernel<T> {
    pub k1: Kernel<T>,
    pub k2: Kernel<T>,
    pub weight: WeightFunction<T>,
    tol: T,
}

impl<T: Real> CompositionKernel<T> {
    pub fn new(k1: Kernel<T>, k2: Kernel<T>, weight: WeightFunction<T>, tol: T) -> Self {
        CompositionKernel { k1, k2, weight, tol }
    }

    pub fn eval(&self, x: T, y: T) -> Result<T> {
        composition_delta(&self.k1, &self.k2, &self.weight, x, y, self.tol)
    }

    /// Kernel view of δ. Algebraic diagonal exponents combine as
    /// `p1 + p2 − 1` when that is positive (the Beta-function reduction);
    /// anything involving a log class falls back to the slow-log treatment.
    pub fn as_kernel(&self) -> Result<Kernel<T>> {
        let diag = match (self.k1.diag_singularity(), self.k2.diag_singularity()) {
            (Singularity::Algebraic(p), Singularity::Algebraic(q)) => {
                let s = p + q - T::one();
                if s > T::zero() {
                    Singularity::Algebraic(s)
                } else {
                    Singularity::Regular
                }
            }
            (Singularity::Regular, Singularity::Regular) => Singularity::Regular,
            (Singularity::Regular, s) | (s, Singularity::Regular) => s,
            _ => Singularity::SlowLog,
        };
        let lower = self.k2.lower_singularity();
        let inner = self.clone();
        Kernel::new(
            format!("delta({},{})", self.k1.name(), self.k2.name()),
            move |x, y| inner.eval(x, y).unwrap_or_else(|_| T::nan()),
            diag,
            lower,
        )
    }

    /// Check the relation R (δ finite and positive) on an n-level triangular grid.
    pub fn check_relation(&self, n: usize) -> Result<()> {
        for (x, y) in triangular_grid(self.weight.a(), self.weight.b(), n) {
            let d = self.eval(x, y)?;
            if !(d > T::zero()) || !d.is_finite() {
                return Err(Error::Domain(format!(
                    "composition kernel not positive-finite at ({x}, {y}): {d}"
                )));
            }
        }
        Ok(())
    }
}

/// Interior points of Ω on a uniform n-level triangular mesh.
pub fn triangular_grid<T: Real>(a: T, b: T, n: usize) -> Vec<(T, T)> {
    let mut pts = Vec::new();
    let span = b - a;
    for i in 1..=n {
        let x = a + span * fu::<T>(i) / fu(n + 1);
        for j in 1..i {
            let y = a + span * fu::<T>(j) / fu(n + 1);
            pts.push((x, y));
        }
    }
    pts
}

/// Per-point deviation record for conjugacy checks.
#[derive(Debug, Clone, Serialize)]
pub struct DeltaDeviation<T> {
    pub x: T,
    pub y: T,
    /// |δ_{k1,k2}(x,y) − 1|
    pub forward: T,
    /// |δ_{k2,k1}(x,y) − 1|
    pub backward: T,
}

/// Grid evidence that δ_{k,k'} ≡ δ_{k',k} ≡ 1 (the generalized Sonine condition).
#[derive(Debug, Clone, Serialize)]
pub struct ConjugacyReport<T> {
    pub max_dev_forward: T,
    pub max_dev_backward: T,
    pub tolerance: T,
    pub conjugate: bool,
    pub points: Vec<DeltaDeviation<T>>,
}

/// Evaluate both composition kernels on the grid and compare against one.
///
/// Quadrature runs two orders of magnitude below the requested tolerance so
/// the verdict reflects the kernels, not the integrator.
pub fn check_conjugacy<T: Real>(
    k1: &Kernel<T>,
    k2: &Kernel<T>,
    w: &WeightFunction<T>,
    grid: &[(T, T)],
    tol: T,
) -> Result<ConjugacyReport<T>> {
    let quad_tol = tol * fl(1e-2);
    let mut points = Vec::with_capacity(grid.len());
    let mut max_f = T::zero();
    let mut max_b = T::zero();
    for &(x, y) in grid {
        if !(x > y) {
            return Err(Error::Domain(format!("grid point ({x}, {y}) not strictly inside Ω")));
        }
        let df = (composition_delta(k1, k2, w, x, y, quad_tol)? - T::one()).abs();
        let db = (composition_delta(k2, k1, w, x, y, quad_tol)? - T::one()).abs();
        max_f = max_f.max(df);
        max_b = max_b.max(db);
        points.push(DeltaDeviation { x, y, forward: df, backward: db });
    }
    Ok(ConjugacyReport {
        max_dev_forward: max_f,
        max_dev_backward: max_b,
        tolerance: tol,
        conjugate: max_f <= tol && max_b <= tol,
        points,
    })
}

/// Default conjugacy tolerance for a pair: algebraic families verify to 1e-7;
/// anything involving the E₁/Volterra pair to 1e-5, since the Volterra
/// function itself carries ~1e-6 evaluation error.
pub fn default_conjugacy_tol<T: Real>(k1: &Kernel<T>, k2: &Kernel<T>) -> T {
    let transcendental =
        |k: &Kernel<T>| matches!(k.diag_singularity(), Singularity::SlowLog | Singularity::Log);
    if transcendental(k1) || transcendental(k2) {
        fl(1e-5)
    } else {
        fl(1e-7)
    }
}

#[cfg(test)]
mod tests;
