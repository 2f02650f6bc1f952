//! Numerical integration of weakly singular integrands and numerical
//! differentiation; the engine beneath every operator in the crate.
//!
//! The base rule is an adaptive Gauss-Kronrod scheme. Endpoint singularities
//! are declared through [`SingularSpec`] and removed before adaptivity sees
//! them:
//!
//! - algebraic endpoints `u^{-p}` by the substitution `u = (t - a)^{1-p}`,
//! - logarithmic endpoints by geometrically graded panels in `w = ln(1/u)`
//!   (grading ratio ≈ 0.15),
//! - "slow-log" endpoints, whose cumulative mass decays only like
//!   `1/ln(1/u)` (the Volterra-function kernel), by the same graded panels
//!   plus extrapolation of the remaining mass in powers of `1/ln(1/u)`.
//!
//! The third class cannot be truncated at any floating-point scale: the mass
//! below `u = 1e-300` is still ~1/690 of the total, so the extrapolation step
//! is what makes those integrals converge at all.

mod gk;

use gk::{gk21, GK21_EVALS};

use crate::scalar::fl;
use crate::{Error, Real, Result};

/// Endpoint behavior of an integrand near one end of the interval.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Singularity<T> {
    /// Bounded and smooth enough for plain adaptive quadrature.
    Regular,
    /// Behaves like `u^{-p}` with `0 < p < 1` at distance `u` from the endpoint.
    Algebraic(T),
    /// Behaves like `ln(1/u)`.
    Log,
    /// Behaves like `1/(u ln²(1/u))`: integrable, but the endpoint mass decays
    /// only like `1/ln(1/u)`.
    SlowLog,
}

impl<T: Real> Singularity<T> {
    /// Worst-case combination when two singular factors multiply at the same
    /// endpoint. Algebraic exponents add; any mix involving a logarithmic kind
    /// falls back to the slow-log treatment, which handles every class here
    /// (at the price of a longer panel march).
    pub fn combine(self, other: Singularity<T>) -> Singularity<T> {
        use Singularity::*;
        match (self, other) {
            (Regular, s) | (s, Regular) => s,
            (Algebraic(p), Algebraic(q)) => Algebraic((p + q).min(fl(0.95))),
            _ => SlowLog,
        }
    }

    fn is_regular(&self) -> bool {
        matches!(self, Singularity::Regular)
    }
}

/// Declared endpoint singularities of an integrand on `[a, b]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SingularSpec<T> {
    pub lower: Singularity<T>,
    pub upper: Singularity<T>,
}

impl<T: Real> SingularSpec<T> {
    pub fn regular() -> Self {
        SingularSpec { lower: Singularity::Regular, upper: Singularity::Regular }
    }

    pub fn new(lower: Singularity<T>, upper: Singularity<T>) -> Self {
        SingularSpec { lower, upper }
    }

    /// Algebraic exponents at both ends (`0` meaning regular).
    pub fn algebraic(lower_exponent: T, upper_exponent: T) -> Self {
        let side = |p: T| {
            if p > T::zero() {
                Singularity::Algebraic(p)
            } else {
                Singularity::Regular
            }
        };
        SingularSpec { lower: side(lower_exponent), upper: side(upper_exponent) }
    }
}

/// Outcome of a quadrature call. `converged` is false when the error estimate
/// is still above tolerance at budget exhaustion; `value` is then the best
/// available estimate.
#[derive(Debug, Clone, Copy)]
pub struct QuadResult<T> {
    pub value: T,
    pub error_estimate: T,
    pub evaluations: usize,
    pub converged: bool,
}

impl<T: Real> QuadResult<T> {
    fn zero() -> Self {
        QuadResult { value: T::zero(), error_estimate: T::zero(), evaluations: 0, converged: true }
    }

    fn merge(self, other: QuadResult<T>) -> Self {
        QuadResult {
            value: self.value + other.value,
            error_estimate: self.error_estimate + other.error_estimate,
            evaluations: self.evaluations + other.evaluations,
            converged: self.converged && other.converged,
        }
    }

    /// Turn a non-converged result into a budget error.
    pub fn require_converged(self, what: &str) -> Result<T> {
        if self.converged {
            Ok(self.value)
        } else {
            Err(Error::QuadratureBudget(format!(
                "{what}: error estimate {:e} after {} evaluations",
                self.error_estimate.to_f64().unwrap_or(f64::NAN),
                self.evaluations
            )))
        }
    }
}

const DEFAULT_PANEL_BUDGET: usize = 600;

/// Adaptive Gauss-Kronrod integration of a regular integrand.
pub fn integrate<T: Real, F: Fn(T) -> T>(f: F, a: T, b: T, tol: T) -> QuadResult<T> {
    adaptive(&f, a, b, tol, DEFAULT_PANEL_BUDGET)
}

struct Segment<T> {
    a: T,
    b: T,
    value: T,
    err: T,
}

fn adaptive<T: Real, F: Fn(T) -> T>(f: &F, a: T, b: T, tol: T, max_panels: usize) -> QuadResult<T> {
    if !(b > a) {
        return QuadResult::zero();
    }
    let (v, e) = gk21(f, a, b);
    let mut evals = GK21_EVALS;
    let mut segs = vec![Segment { a, b, value: v, err: e }];

    loop {
        let mut total_err = T::zero();
        let mut total_abs = T::zero();
        let mut worst = 0usize;
        let mut worst_err = T::neg_infinity();
        for (i, s) in segs.iter().enumerate() {
            total_err = total_err + s.err;
            total_abs = total_abs + s.value.abs();
            if s.err > worst_err {
                worst_err = s.err;
                worst = i;
            }
        }
        let floor = fl::<T>(50.0) * T::epsilon() * total_abs;
        if total_err <= tol.max(floor) || segs.len() >= max_panels {
            let value = segs.iter().fold(T::zero(), |acc, s| acc + s.value);
            return QuadResult {
                value,
                error_estimate: total_err,
                evaluations: evals,
                converged: total_err
                    <= tol.max(floor).max(fl::<T>(4.0) * T::epsilon() * value.abs()),
            };
        }
        let Segment { a: sa, b: sb, .. } = segs[worst];
        let mid = (sa + sb) * fl(0.5);
        if !(mid > sa && mid < sb) {
            // interval no longer splittable in this precision
            let value = segs.iter().fold(T::zero(), |acc, s| acc + s.value);
            return QuadResult { value, error_estimate: total_err, evaluations: evals, converged: false };
        }
        let (v1, e1) = gk21(f, sa, mid);
        let (v2, e2) = gk21(f, mid, sb);
        evals += 2 * GK21_EVALS;
        segs[worst] = Segment { a: sa, b: mid, value: v1, err: e1 };
        segs.push(Segment { a: mid, b: sb, value: v2, err: e2 });
    }
}

/// Integrate `f` over `[a, b]` honoring the declared endpoint singularities.
pub fn integrate_singular<T: Real, F: Fn(T) -> T>(
    f: F,
    a: T,
    b: T,
    spec: &SingularSpec<T>,
    tol: T,
) -> QuadResult<T> {
    if !(b > a) {
        return QuadResult::zero();
    }
    let half = fl::<T>(0.5);
    match (spec.lower.is_regular(), spec.upper.is_regular()) {
        (true, true) => adaptive(&f, a, b, tol, DEFAULT_PANEL_BUDGET),
        (false, true) => lower_piece(&f, a, b, spec.lower, tol),
        (true, false) => upper_piece(&f, a, b, spec.upper, tol),
        (false, false) => {
            let m = (a + b) * half;
            let left = lower_piece(&f, a, m, spec.lower, tol * half);
            let right = upper_piece(&f, m, b, spec.upper, tol * half);
            left.merge(right)
        }
    }
}

fn lower_piece<T: Real, F: Fn(T) -> T>(
    f: &F,
    a: T,
    m: T,
    sing: Singularity<T>,
    tol: T,
) -> QuadResult<T> {
    match sing {
        Singularity::Regular => adaptive(f, a, m, tol, DEFAULT_PANEL_BUDGET),
        Singularity::Algebraic(p) => {
            let s = (T::one() - p).recip();
            let upper = (m - a).powf(T::one() - p);
            let g = move |u: T| {
                let dt = u.powf(s);
                f(a + dt) * s * u.powf(s - T::one())
            };
            adaptive(&g, T::zero(), upper, tol, DEFAULT_PANEL_BUDGET)
        }
        Singularity::Log => log_march(f, a, m, tol, false, false),
        Singularity::SlowLog => log_march(f, a, m, tol, true, false),
    }
}

fn upper_piece<T: Real, F: Fn(T) -> T>(
    f: &F,
    m: T,
    b: T,
    sing: Singularity<T>,
    tol: T,
) -> QuadResult<T> {
    match sing {
        Singularity::Regular => adaptive(f, m, b, tol, DEFAULT_PANEL_BUDGET),
        Singularity::Algebraic(p) => {
            let s = (T::one() - p).recip();
            let upper = (b - m).powf(T::one() - p);
            let g = move |u: T| {
                let dt = u.powf(s);
                f(b - dt) * s * u.powf(s - T::one())
            };
            adaptive(&g, T::zero(), upper, tol, DEFAULT_PANEL_BUDGET)
        }
        Singularity::Log => log_march(f, b, m, tol, false, true),
        Singularity::SlowLog => log_march(f, b, m, tol, true, true),
    }
}

/// Number of graded panels per extrapolation mark (mark spacing 15 in `w`).
const MARCH_PANELS_PER_MARK: usize = 8;
const MARCH_MARKS: usize = 4;
const MARCH_STEP: f64 = 15.0 / MARCH_PANELS_PER_MARK as f64;

/// Integrate toward a logarithmic-type endpoint in the variable `w = ln(1/u)`
/// where `u` is the distance to the endpoint. Panels are geometric in `u`
/// (ratio `e^{-1.875} ≈ 0.15`). For exponentially dying tails the march exits
/// early; otherwise the mass beyond `w = w0 + 60` is recovered by fitting the
/// partial sums `A(L)` to `A(L) = I - c₁/L - c₂/L² - c₃/L³`.
fn log_march<T: Real, F: Fn(T) -> T>(
    f: &F,
    endpoint: T,
    far: T,
    tol: T,
    slow: bool,
    from_above: bool,
) -> QuadResult<T> {
    let h = (far - endpoint).abs();
    if h == T::zero() {
        return QuadResult::zero();
    }
    let w0 = -h.ln();
    let g = move |w: T| {
        let u = (-w).exp();
        let t = if from_above { endpoint - u } else { endpoint + u };
        f(t) * u
    };

    let mut acc = T::zero();
    let mut err = T::zero();
    let mut evals = 0usize;
    let mut converged = true;
    let mut marks = [T::zero(); MARCH_MARKS];
    let mut prev_small = false;

    let total_panels = MARCH_PANELS_PER_MARK * MARCH_MARKS;
    let panel_tol = tol * fl(0.02);
    let mut full_march = true;

    for j in 0..total_panels {
        let w_lo = w0 + fl::<T>(MARCH_STEP * j as f64);
        let w_hi = w0 + fl::<T>(MARCH_STEP * (j + 1) as f64);
        let r = adaptive(&g, w_lo, w_hi, panel_tol, 24);
        acc = acc + r.value;
        err = err + r.error_estimate;
        evals += r.evaluations;
        converged &= r.converged;

        if (j + 1) % MARCH_PANELS_PER_MARK == 0 {
            marks[(j + 1) / MARCH_PANELS_PER_MARK - 1] = acc;
        }

        if !slow {
            let small = r.value.abs() <= panel_tol;
            if small && prev_small && j >= 4 {
                full_march = false;
                break;
            }
            prev_small = small;
        }
    }

    if full_march {
        // A(L_j) = I - Σ_k c_k / L_j^k with L_j = w0 + 15 j
        let ls: [T; MARCH_MARKS] =
            std::array::from_fn(|j| w0 + fl::<T>(15.0 * (j + 1) as f64));
        if let Some(total) = fit_tail(&ls, &marks) {
            // residual estimate: same fit from the last three marks only
            let total3 = fit_tail3(&ls, &marks).unwrap_or(total);
            err = err + (total - total3).abs();
            acc = total;
        } else {
            converged = false;
        }
    }

    QuadResult { value: acc, error_estimate: err, evaluations: evals, converged }
}

/// Solve for `I` in `A_j = I - c₁/L_j - c₂/L_j² - c₃/L_j³` (4 unknowns).
fn fit_tail<T: Real>(ls: &[T; 4], a: &[T; 4]) -> Option<T> {
    let mut m = [[T::zero(); 5]; 4];
    for j in 0..4 {
        let inv = ls[j].recip();
        m[j][0] = T::one();
        m[j][1] = -inv;
        m[j][2] = -inv * inv;
        m[j][3] = -inv * inv * inv;
        m[j][4] = a[j];
    }
    solve_aug(&mut m).map(|x| x[0])
}

fn fit_tail3<T: Real>(ls: &[T; 4], a: &[T; 4]) -> Option<T> {
    let mut m = [[T::zero(); 4]; 3];
    for j in 0..3 {
        let inv = ls[j + 1].recip();
        m[j][0] = T::one();
        m[j][1] = -inv;
        m[j][2] = -inv * inv;
        m[j][3] = a[j + 1];
    }
    solve_aug3(&mut m).map(|x| x[0])
}

fn solve_aug<T: Real>(m: &mut [[T; 5]; 4]) -> Option<[T; 4]> {
    gauss_solve::<T, 4, 5>(m)
}

fn solve_aug3<T: Real>(m: &mut [[T; 4]; 3]) -> Option<[T; 3]> {
    gauss_solve::<T, 3, 4>(m)
}

fn gauss_solve<T: Real, const N: usize, const M: usize>(m: &mut [[T; M]; N]) -> Option<[T; N]> {
    for col in 0..N {
        let mut piv = col;
        for r in (col + 1)..N {
            if m[r][col].abs() > m[piv][col].abs() {
                piv = r;
            }
        }
        if m[piv][col].abs() < T::epsilon() {
            return None;
        }
        m.swap(col, piv);
        for r in 0..N {
            if r == col {
                continue;
            }
            let factor = m[r][col] / m[col][col];
            for c in col..M {
                m[r][c] = m[r][c] - factor * m[col][c];
            }
        }
    }
    let mut out = [T::zero(); N];
    for r in 0..N {
        out[r] = m[r][M - 1] / m[r][r];
    }
    Some(out)
}

/// Derivative by central differences with two-level Richardson extrapolation.
///
/// Step start `h₀ = tol^{1/3} · max(1, |x|)`, floored at `1e-7 (b - a)`; falls
/// back to one-sided stencils when `x` sits within a couple of steps of a
/// domain endpoint. The floor caps achievable accuracy near `1e-6` when `g`
/// itself is computed by quadrature.
pub fn differentiate<T: Real, G: Fn(T) -> T>(g: G, x: T, tol: T, domain: (T, T)) -> Result<T> {
    let (a, b) = domain;
    if !(b > a) || x < a || x > b {
        return Err(Error::Domain(format!("derivative point {x} outside [{a}, {b}]")));
    }
    let span = b - a;
    let third = fl::<T>(1.0 / 3.0);
    let mut h = tol.abs().powf(third) * x.abs().max(T::one());
    h = h.max(fl::<T>(1e-7) * span).min(span * fl(0.25));

    let room_left = x - a;
    let room_right = b - x;
    let (value, spread) = if room_left >= h && room_right >= h {
        central_richardson(&g, x, h)
    } else if room_right >= room_left {
        let h1 = h.min(room_right / fl(3.2));
        one_sided_richardson(&g, x, h1)
    } else {
        let h1 = h.min(room_left / fl(3.2));
        let (v, s) = one_sided_richardson(&|t| g(x + x - t), x, h1);
        (-v, s)
    };

    let scale = T::one() + value.abs();
    if spread <= tol.max(fl(1e-10)) * scale * fl(100.0) {
        Ok(value)
    } else {
        Err(Error::DerivativeNonConvergent(format!(
            "extrapolation spread {:e} at x = {x}",
            spread.to_f64().unwrap_or(f64::NAN)
        )))
    }
}

/// Internal variant for nested evaluation: the caller bounds the step so the
/// stencil stays inside the domain, and accepts the spread estimate instead of
/// an error. Used where the integrand of an outer singular quadrature is
/// itself a derivative.
pub(crate) fn differentiate_scaled<T: Real, G: Fn(T) -> T>(
    g: G,
    x: T,
    tol: T,
    h_max: T,
) -> (T, T) {
    let third = fl::<T>(1.0 / 3.0);
    let mut h = tol.abs().powf(third) * x.abs().max(T::one());
    h = h.min(h_max);
    let h_min = x.abs().max(T::one()) * T::epsilon() * fl(64.0);
    if h < h_min {
        h = h_min;
    }
    central_richardson(&g, x, h)
}

fn central_richardson<T: Real, G: Fn(T) -> T>(g: &G, x: T, h: T) -> (T, T) {
    let half = fl::<T>(0.5);
    let d = |hh: T| (g(x + hh) - g(x - hh)) / (hh + hh);
    let d1 = d(h);
    let d2 = d(h * half);
    let d3 = d(h * half * half);
    let r1 = (fl::<T>(4.0) * d2 - d1) / fl(3.0);
    let r1b = (fl::<T>(4.0) * d3 - d2) / fl(3.0);
    let r2 = (fl::<T>(16.0) * r1b - r1) / fl(15.0);
    (r2, (r2 - r1b).abs())
}

// third-order one-sided stencil, one Richardson level (h³ term cancelled)
fn one_sided_richardson<T: Real, G: Fn(T) -> T>(g: &G, x: T, h: T) -> (T, T) {
    let d = |hh: T| {
        (fl::<T>(-11.0) * g(x)
            + fl::<T>(18.0) * g(x + hh)
            + fl::<T>(-9.0) * g(x + hh + hh)
            + fl::<T>(2.0) * g(x + hh + hh + hh))
            / (fl::<T>(6.0) * hh)
    };
    let d1 = d(h);
    let d2 = d(h * fl(0.5));
    let r = (fl::<T>(8.0) * d2 - d1) / fl(7.0);
    (r, (r - d2).abs())
}
