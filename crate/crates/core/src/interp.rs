//! Natural cubic spline on a strictly increasing mesh; clamp-extends outside.

use crate::scalar::fl;
use crate::Real;

#[derive(Debug, Clone)]
pub(crate) struct CubicSpline<T> {
    xs: Vec<T>,
    ys: Vec<T>,
    y2: Vec<T>,
}

impl<T: Real> CubicSpline<T> {
    /// Requires `xs` strictly increasing with at least two nodes.
    pub(crate) fn new(xs: Vec<T>, ys: Vec<T>) -> Self {
        let n = xs.len();
        assert!(n >= 2 && n == ys.len(), "spline needs matching mesh/values, n >= 2");
        let mut y2 = vec![T::zero(); n];
        let mut u = vec![T::zero(); n];
        for i in 1..n - 1 {
            let sig = (xs[i] - xs[i - 1]) / (xs[i + 1] - xs[i - 1]);
            let p = sig * y2[i - 1] + fl(2.0);
            y2[i] = (sig - T::one()) / p;
            let d = (ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i])
                - (ys[i] - ys[i - 1]) / (xs[i] - xs[i - 1]);
            u[i] = (fl::<T>(6.0) * d / (xs[i + 1] - xs[i - 1]) - sig * u[i - 1]) / p;
        }
        for i in (0..n - 1).rev() {
            y2[i] = y2[i] * y2[i + 1] + u[i];
        }
        CubicSpline { xs, ys, y2 }
    }

    pub(crate) fn eval(&self, x: T) -> T {
        let n = self.xs.len();
        if x <= self.xs[0] {
            return self.ys[0];
        }
        if x >= self.xs[n - 1] {
            return self.ys[n - 1];
        }
        let mut lo = 0usize;
        let mut hi = n - 1;
        while hi - lo > 1 {
            let mid = (lo + hi) / 2;
            if self.xs[mid] > x {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        let h = self.xs[hi] - self.xs[lo];
        let a = (self.xs[hi] - x) / h;
        let b = (x - self.xs[lo]) / h;
        let six = fl::<T>(6.0);
        a * self.ys[lo]
            + b * self.ys[hi]
            + ((a * a * a - a) * self.y2[lo] + (b * b * b - b) * self.y2[hi]) * (h * h) / six
    }
}
