//! Sampled functions on a mesh: the numerical stand-in for L¹ elements.

use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};

use crate::interp::CubicSpline;
use crate::scalar::{fl, fu};
use crate::{Error, Real, Result};

/// Interpolation order between mesh nodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Interp {
    /// Piecewise linear (the default; O(h²) accurate).
    Linear,
    /// Natural cubic spline, for materialized operator outputs.
    Cubic,
}

/// A real function sampled on a strictly increasing mesh of `[a, b]`.
/// Evaluation clamp-extends outside the mesh.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GridFunction<T> {
    mesh: Vec<T>,
    values: Vec<T>,
    interp: Interp,
    #[serde(skip)]
    spline: Option<CubicSpline<T>>,
}

impl<T: Real> GridFunction<T> {
    pub fn new(mesh: Vec<T>, values: Vec<T>) -> Result<Self> {
        if mesh.len() != values.len() {
            return Err(Error::InvalidConfig(format!(
                "mesh has {} nodes but {} values",
                mesh.len(),
                values.len()
            )));
        }
        if mesh.len() < 2 {
            return Err(Error::InvalidConfig("grid function needs at least 2 nodes".into()));
        }
        if mesh.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(Error::InvalidConfig("mesh must be strictly increasing".into()));
        }
        Ok(GridFunction { mesh, values, interp: Interp::Linear, spline: None })
    }

    /// Switch to cubic-spline interpolation.
    pub fn with_cubic(mut self) -> Self {
        self.spline = Some(CubicSpline::new(self.mesh.clone(), self.values.clone()));
        self.interp = Interp::Cubic;
        self
    }

    /// Sample `f` on the given mesh.
    pub fn sample(f: impl Fn(T) -> T, mesh: Vec<T>) -> Result<Self> {
        let values = mesh.iter().map(|&x| f(x)).collect();
        Self::new(mesh, values)
    }

    pub fn mesh(&self) -> &[T] {
        &self.mesh
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn interp(&self) -> Interp {
        self.interp
    }

    pub fn a(&self) -> T {
        self.mesh[0]
    }

    pub fn b(&self) -> T {
        *self.mesh.last().unwrap()
    }

    pub fn eval(&self, x: T) -> T {
        match self.interp {
            Interp::Cubic => match &self.spline {
                Some(s) => s.eval(x),
                // deserialized in cubic mode without the cached spline
                None => self.eval_linear(x),
            },
            Interp::Linear => self.eval_linear(x),
        }
    }

    fn eval_linear(&self, x: T) -> T {
        let n = self.mesh.len();
        if x <= self.mesh[0] {
            return self.values[0];
        }
        if x >= self.mesh[n - 1] {
            return self.values[n - 1];
        }
        let mut lo = 0usize;
        let mut hi = n - 1;
        while hi - lo > 1 {
            let mid = (lo + hi) / 2;
            if self.mesh[mid] > x {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        let t = (x - self.mesh[lo]) / (self.mesh[hi] - self.mesh[lo]);
        self.values[lo] + t * (self.values[hi] - self.values[lo])
    }

    /// Restore the spline cache after deserialization, if in cubic mode.
    pub fn rebuild_interp(mut self) -> Self {
        if self.interp == Interp::Cubic {
            self.spline = Some(CubicSpline::new(self.mesh.clone(), self.values.clone()));
        }
        self
    }

    /// Sup-norm of the nodal difference against another grid function on the
    /// same mesh.
    pub fn sup_diff(&self, other: &GridFunction<T>) -> T {
        self.values
            .iter()
            .zip(other.values.iter())
            .fold(T::zero(), |m, (&u, &v)| m.max((u - v).abs()))
    }

    /// Write `x,value` rows (RFC-4180-style, full double precision).
    pub fn to_csv(&self, out: &mut impl Write) -> std::io::Result<()> {
        writeln!(out, "x,value")?;
        for (x, v) in self.mesh.iter().zip(self.values.iter()) {
            writeln!(out, "{:.16e},{:.16e}", x.to_f64().unwrap(), v.to_f64().unwrap())?;
        }
        Ok(())
    }

    /// Read `x,value` rows; a leading header line is skipped if present.
    pub fn from_csv(input: impl BufRead) -> Result<Self> {
        let mut mesh = Vec::new();
        let mut values = Vec::new();
        for (lineno, line) in input.lines().enumerate() {
            let line = line.map_err(|e| Error::InvalidConfig(format!("csv read: {e}")))?;
            let line = line.trim();
            if line.is_empty() || (lineno == 0 && line.starts_with('x')) {
                continue;
            }
            let mut parts = line.split(',');
            let (sx, sv) = (parts.next(), parts.next());
            match (sx, sv) {
                (Some(sx), Some(sv)) => {
                    let x: f64 = sx.trim().parse().map_err(|e| {
                        Error::InvalidConfig(format!("csv line {}: {e}", lineno + 1))
                    })?;
                    let v: f64 = sv.trim().parse().map_err(|e| {
                        Error::InvalidConfig(format!("csv line {}: {e}", lineno + 1))
                    })?;
                    mesh.push(fl(x));
                    values.push(fl(v));
                }
                _ => {
                    return Err(Error::InvalidConfig(format!(
                        "csv line {}: expected 'x,value'",
                        lineno + 1
                    )))
                }
            }
        }
        Self::new(mesh, values)
    }
}

/// Uniform mesh with `n` nodes on `[a, b]`.
pub fn uniform_mesh<T: Real>(a: T, b: T, n: usize) -> Vec<T> {
    (0..n).map(|i| a + (b - a) * fu::<T>(i) / fu(n - 1)).collect()
}

/// Mesh graded quadratically toward both endpoints (smoothstep image of the
/// uniform mesh); resolves the weak endpoint behavior of operator outputs.
pub fn graded_mesh<T: Real>(a: T, b: T, n: usize) -> Vec<T> {
    (0..n)
        .map(|i| {
            let t = fu::<T>(i) / fu(n - 1);
            let s = t * t * (fl::<T>(3.0) - fl::<T>(2.0) * t);
            a + (b - a) * s
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_meshes() {
        assert!(GridFunction::new(vec![0.0, 1.0], vec![1.0]).is_err());
        assert!(GridFunction::new(vec![0.0, 0.0, 1.0], vec![1.0, 2.0, 3.0]).is_err());
        assert!(GridFunction::new(vec![0.0f64], vec![1.0]).is_err());
    }

    #[test]
    fn linear_interpolation_and_clamping() {
        let g = GridFunction::new(vec![0.0, 1.0, 2.0], vec![0.0, 2.0, 0.0]).unwrap();
        assert_eq!(g.eval(0.5), 1.0);
        assert_eq!(g.eval(1.5), 1.0);
        assert_eq!(g.eval(-3.0), 0.0);
        assert_eq!(g.eval(9.0), 0.0);
    }

    #[test]
    fn cubic_beats_linear_on_smooth_data() {
        let mesh = uniform_mesh(0.0f64, 1.0, 33);
        let f = |x: f64| (3.0 * x).sin();
        let lin = GridFunction::sample(f, mesh.clone()).unwrap();
        let cub = GridFunction::sample(f, mesh).unwrap().with_cubic();
        let mut lin_err = 0.0f64;
        let mut cub_err = 0.0f64;
        for k in 0..97 {
            let x = k as f64 / 96.0;
            lin_err = lin_err.max((lin.eval(x) - f(x)).abs());
            cub_err = cub_err.max((cub.eval(x) - f(x)).abs());
        }
        assert!(cub_err < lin_err / 10.0, "cubic {cub_err} vs linear {lin_err}");
    }

    #[test]
    fn csv_round_trip() {
        let g = GridFunction::new(vec![0.0, 0.5, 1.0], vec![1.0, -2.25, 0.125]).unwrap();
        let mut buf = Vec::new();
        g.to_csv(&mut buf).unwrap();
        let back = GridFunction::<f64>::from_csv(buf.as_slice()).unwrap();
        assert_eq!(g.mesh(), back.mesh());
        assert_eq!(g.values(), back.values());
    }

    #[test]
    fn graded_mesh_properties() {
        let m = graded_mesh(0.0f64, 1.0, 65);
        assert_eq!(m.len(), 65);
        assert_eq!(m[0], 0.0);
        assert_eq!(m[64], 1.0);
        assert!(m.windows(2).all(|w| w[1] > w[0]));
        // first cell much smaller than the middle one
        assert!(m[1] - m[0] < (m[33] - m[32]) / 5.0);
    }
}
