//! Kernel definitions loadable from structured JSON.
//!
//! ```json
//! { "family": "rl", "alpha": 0.5, "a": 0.0, "b": 1.0 }
//! { "family": "erdelyi_kober", "alpha": 0.5, "sigma": 2.0, "a": 0.5, "b": 1.5 }
//! ```

use serde::{Deserialize, Serialize};

use super::families::{
    e1_volterra_pair, erdelyi_kober_pair, hadamard_pair, riemann_liouville_pair, unit_kernel,
};
use super::{Kernel, WeightFunction};
use crate::scalar::fl;
use crate::{Error, Real, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum KernelFamily {
    Rl,
    Hadamard,
    ErdelyiKober,
    E1,
    Volterra,
    Unit,
}

impl std::fmt::Display for KernelFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            KernelFamily::Rl => "rl",
            KernelFamily::Hadamard => "hadamard",
            KernelFamily::ErdelyiKober => "erdelyi_kober",
            KernelFamily::E1 => "e1",
            KernelFamily::Volterra => "volterra",
            KernelFamily::Unit => "unit",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for KernelFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rl" => Ok(KernelFamily::Rl),
            "hadamard" => Ok(KernelFamily::Hadamard),
            "erdelyi_kober" => Ok(KernelFamily::ErdelyiKober),
            "e1" => Ok(KernelFamily::E1),
            "volterra" => Ok(KernelFamily::Volterra),
            "unit" => Ok(KernelFamily::Unit),
            other => Err(Error::InvalidConfig(format!("unknown kernel family '{other}'"))),
        }
    }
}

/// Declarative kernel description; omitted bounds use per-family defaults
/// (rl: [0,1], hadamard: [1,e], erdelyi_kober: [0.5,1.5], e1/volterra: fixed [0,1]).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct KernelConfig {
    pub family: KernelFamily,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<f64>,
}

impl KernelConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text)
            .map_err(|e| Error::InvalidConfig(format!("kernel config: {e}")))
    }

    fn alpha(&self) -> Result<f64> {
        self.alpha
            .ok_or_else(|| Error::InvalidConfig(format!("family '{}' needs alpha", self.family)))
    }

    fn bounds(&self, default: (f64, f64)) -> (f64, f64) {
        (self.a.unwrap_or(default.0), self.b.unwrap_or(default.1))
    }
}

/// Resolve a config into (kernel, conjugate-if-defined, weight).
pub fn build_pair<T: Real>(
    cfg: &KernelConfig,
) -> Result<(Kernel<T>, Option<Kernel<T>>, WeightFunction<T>)> {
    match cfg.family {
        KernelFamily::Unit => {
            let (a, b) = cfg.bounds((0.0, 1.0));
            let w = WeightFunction::unit(fl(a), fl(b))?;
            Ok((unit_kernel(), None, w))
        }
        KernelFamily::Rl => {
            let (a, b) = cfg.bounds((0.0, 1.0));
            let pair = riemann_liouville_pair(fl::<T>(cfg.alpha()?), fl(a), fl(b))?;
            Ok((pair.kernel, Some(pair.conjugate), pair.weight))
        }
        KernelFamily::Hadamard => {
            let (a, b) = cfg.bounds((1.0, std::f64::consts::E));
            let pair = hadamard_pair(fl::<T>(cfg.alpha()?), fl(a), fl(b))?;
            Ok((pair.kernel, Some(pair.conjugate), pair.weight))
        }
        KernelFamily::ErdelyiKober => {
            let sigma = cfg.sigma.ok_or_else(|| {
                Error::InvalidConfig("family 'erdelyi_kober' needs sigma".into())
            })?;
            let (a, b) = cfg.bounds((0.5, 1.5));
            let pair = erdelyi_kober_pair(fl::<T>(cfg.alpha()?), fl(sigma), fl(a), fl(b))?;
            Ok((pair.kernel, Some(pair.conjugate), pair.weight))
        }
        KernelFamily::E1 | KernelFamily::Volterra => {
            if cfg.a.is_some_and(|a| a != 0.0) || cfg.b.is_some_and(|b| b != 1.0) {
                return Err(Error::InvalidConfig(
                    "e1/volterra kernels are defined on [0, 1] with unit weight".into(),
                ));
            }
            let pair = e1_volterra_pair(fl::<T>(cfg.alpha()?))?;
            if cfg.family == KernelFamily::E1 {
                Ok((pair.conjugate, Some(pair.kernel), pair.weight))
            } else {
                Ok((pair.kernel, Some(pair.conjugate), pair.weight))
            }
        }
    }
}
