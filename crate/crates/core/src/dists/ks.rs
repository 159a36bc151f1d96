//! One-sample Kolmogorov-Smirnov test against a fully specified CDF.

use super::{sorted_copy, FitError};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KsOutcome {
    pub statistic: f64,
    pub critical: f64,
    pub accepted: bool,
}

/// Supremum distance between the empirical CDF of `samples` and `cdf`.
pub fn statistic<F: Fn(f64) -> f64>(samples: &[f64], cdf: F) -> Result<f64, FitError> {
    if samples.is_empty() {
        return Err(FitError::TooFewSamples { n: 0, need: 1 });
    }
    if samples.iter().any(|v| !v.is_finite()) {
        return Err(FitError::NonFiniteSample);
    }
    let sorted = sorted_copy(samples);
    let n = sorted.len() as f64;
    let mut d: f64 = 0.0;
    for (i, &x) in sorted.iter().enumerate() {
        let f = cdf(x);
        let lo = i as f64 / n;
        let hi = (i + 1) as f64 / n;
        d = d.max(libm::fabs(f - lo)).max(libm::fabs(hi - f));
    }
    Ok(d)
}

/// Asymptotic critical distance at significance `alpha` for sample size `n`:
/// `sqrt(-ln(alpha/2)/2) / sqrt(n)`.
pub fn critical(alpha: f64, n: usize) -> f64 {
    assert!(alpha > 0.0 && alpha < 1.0);
    libm::sqrt(-libm::log(alpha / 2.0) / 2.0) / libm::sqrt(n as f64)
}

pub fn test<F: Fn(f64) -> f64>(
    samples: &[f64],
    cdf: F,
    alpha: f64,
) -> Result<KsOutcome, FitError> {
    let d = statistic(samples, cdf)?;
    let c = critical(alpha, samples.len());
    Ok(KsOutcome {
        statistic: d,
        critical: c,
        accepted: d <= c,
    })
}
