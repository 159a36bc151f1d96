//! Distribution kit for the roughness statistics: location-scale Student t
//! for perturbation amplitudes, generalized extreme value for the angular
//! placement of strong cells, minimum-type Gumbel for pattern summary
//! statistics, and a Kolmogorov-Smirnov check tying samplers to their CDFs.

use alloc::vec::Vec;
use core::fmt;

pub mod ev;
pub mod gev;
pub mod ks;
pub mod nelder;
pub mod special;
pub mod tls;

#[derive(Debug, Clone, PartialEq)]
pub enum FitError {
    TooFewSamples { n: usize, need: usize },
    NonFiniteSample,
    /// All samples identical, or the optimizer could not move.
    Degenerate,
    NoConvergence,
}

impl fmt::Display for FitError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FitError::TooFewSamples { n, need } => {
                write!(f, "fit needs at least {need} samples, got {n}")
            }
            FitError::NonFiniteSample => write!(f, "sample contains a non-finite value"),
            FitError::Degenerate => write!(f, "sample is degenerate (no spread)"),
            FitError::NoConvergence => write!(f, "fit did not converge"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for FitError {}

pub(crate) fn check_sample(samples: &[f64], need: usize) -> Result<(), FitError> {
    if samples.len() < need {
        return Err(FitError::TooFewSamples {
            n: samples.len(),
            need,
        });
    }
    if samples.iter().any(|v| !v.is_finite()) {
        return Err(FitError::NonFiniteSample);
    }
    let first = samples[0];
    if samples.iter().all(|&v| v == first) {
        return Err(FitError::Degenerate);
    }
    Ok(())
}

pub(crate) fn sorted_copy(samples: &[f64]) -> Vec<f64> {
    let mut v = samples.to_vec();
    v.sort_unstable_by(f64::total_cmp);
    v
}

/// Linear-interpolation quantile of an ascending slice, `q` in `[0, 1]`.
pub(crate) fn quantile_sorted(sorted: &[f64], q: f64) -> f64 {
    let n = sorted.len();
    if n == 1 {
        return sorted[0];
    }
    let pos = q * (n - 1) as f64;
    let lo = pos as usize;
    if lo + 1 >= n {
        return sorted[n - 1];
    }
    let w = pos - lo as f64;
    sorted[lo] * (1.0 - w) + sorted[lo + 1] * w
}

pub(crate) fn mean(samples: &[f64]) -> f64 {
    samples.iter().sum::<f64>() / samples.len() as f64
}

pub(crate) fn sample_sd(samples: &[f64]) -> f64 {
    let m = mean(samples);
    let ss = samples.iter().map(|v| (v - m) * (v - m)).sum::<f64>();
    libm::sqrt(ss / (samples.len() - 1) as f64)
}
