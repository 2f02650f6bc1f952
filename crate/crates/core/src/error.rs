//! Error type shared across the crate.

use std::fmt;

/// Errors raised by special functions, quadrature, operators and the solver.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Argument outside the mathematical domain of an operation.
    Domain(String),
    /// A series or continued fraction failed to converge within its budget.
    Convergence(String),
    /// Adaptive quadrature exhausted its budget before reaching the tolerance.
    QuadratureBudget(String),
    /// The Richardson extrapolation table for a numerical derivative did not settle.
    DerivativeNonConvergent(String),
    /// Contraction constant `c_f · ‖I_0^k 1‖_∞ ≥ 1`: the fixed-point theorem does not apply.
    ContractionViolated { constant: f64 },
    /// Picard iteration hit the iteration cap before the stopping tolerance.
    MaxIterExceeded { iterations: usize, residual: f64 },
    /// Malformed configuration (kernel family, mesh, tolerances, ...).
    InvalidConfig(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Convergence(msg) => write!(f, "convergence failure: {msg}"),
            Error::QuadratureBudget(msg) => write!(f, "quadrature budget exhausted: {msg}"),
            Error::DerivativeNonConvergent(msg) => {
                write!(f, "numerical derivative did not converge: {msg}")
            }
            Error::ContractionViolated { constant } => {
                write!(f, "contraction constant {constant} >= 1; theorem hypothesis unmet")
            }
            Error::MaxIterExceeded { iterations, residual } => {
                write!(f, "no convergence after {iterations} iterations (residual {residual:e})")
            }
            Error::InvalidConfig(msg) => write!(f, "invalid configuration: {msg}"),
        }
    }
}

impl std::error::Error for Error {}
