//! Integral and derivative operators with respect to arbitrary kernel-functions.
//!
//! A kernel-function `k` is a positive function on the triangle
//! `Ω = {(x, y): a ≤ y < x ≤ b}`. Together with a weight `ω` it generates the
//! integral operator `(I_a^k f)(x) = ∫_a^x k(x,y) f(y) ω(y) dy` and, for a
//! conjugate kernel `k'` (one with `δ_{k,k'} ≡ δ_{k',k} ≡ 1`), the derivative
//! operator `(D_a^{k'} f)(x) = (1/ω) d/dx (I_a^{k'} f)(x)` which inverts it.
//! The classical Riemann-Liouville, Hadamard and Erdélyi-Kober fractional
//! operators are recovered for particular kernel families, and an
//! exponential-integral/Volterra-function pair provides a genuinely new family.
//!
//! Modules:
//! - [`specfun`]: scalar special functions (E₁, incomplete gamma, Volterra F).
//! - [`quadrature`]: weakly singular integration and numerical differentiation.
//! - [`kernels`]: weights, kernel families, composition kernels, conjugacy checks.
//! - [`operators`]: k-integrals, k'-derivatives and the theorem-verification ops.
//! - [`bvp`]: Picard solver for kernel-derivative boundary value problems.
//!
//! All numerics are generic over the scalar type via [`Real`]; the `*64`
//! aliases at the crate root fix `f64`, which is what the tolerances in the
//! verification suites are calibrated for.

pub mod bvp;
pub mod error;
mod interp;
pub mod kernels;
pub mod operators;
pub mod quadrature;
pub mod scalar;
pub mod specfun;

pub use error::Error;
pub use scalar::Real;

pub type Result<T> = std::result::Result<T, Error>;

pub type Kernel64 = kernels::Kernel<f64>;
pub type WeightFunction64 = kernels::WeightFunction<f64>;
pub type ConjugatePair64 = kernels::ConjugatePair<f64>;
pub type GridFunction64 = operators::GridFunction<f64>;
pub type OperatorContext64 = operators::OperatorContext<f64>;
pub type BvpProblem64 = bvp::BvpProblem<f64>;
pub type BvpSolution64 = bvp::BvpSolution<f64>;
