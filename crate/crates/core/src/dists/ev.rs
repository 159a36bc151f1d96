//! Minimum-type Gumbel distribution. Pattern-level summaries (the location
//! and spread of main-lobe magnitudes in dB) are reported in this family:
//! deep fades dominate, so the relevant extreme is the minimum.

use super::{check_sample, mean, sample_sd, FitError};
use rand::Rng;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvMin {
    pub location: f64,
    pub scale: f64,
}

impl EvMin {
    pub fn new(location: f64, scale: f64) -> Option<Self> {
        if scale > 0.0 && location.is_finite() {
            Some(EvMin { location, scale })
        } else {
            None
        }
    }

    pub fn pdf(&self, x: f64) -> f64 {
        let z = (x - self.location) / self.scale;
        libm::exp(z - libm::exp(z)) / self.scale
    }

    pub fn cdf(&self, x: f64) -> f64 {
        let z = (x - self.location) / self.scale;
        -libm::expm1(-libm::exp(z))
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        let mut u: f64 = rng.gen();
        while u <= 0.0 {
            u = rng.gen();
        }
        // inverse of 1 - exp(-exp(z)) at 1-u (same distribution, avoids log(0))
        self.location + self.scale * libm::log(-libm::log(u))
    }
}

/// Maximum-likelihood fit.
///
/// Negating the sample turns the problem into the maximum-type Gumbel fit,
/// whose scale satisfies a one-dimensional score equation with a unique
/// root for any non-degenerate sample: the score is negative as the scale
/// approaches zero and positive once the scale exceeds the sample spread,
/// so a bracketed bisection always lands on the optimum — including for
/// samples with extreme outliers (clamp floors hundreds of dB down), where
/// the textbook fixed-point iteration stalls. The location then follows in
/// closed form. Exponentials are shifted by the sample extreme so huge dB
/// ranges cannot overflow.
pub fn fit(samples: &[f64]) -> Result<EvMin, FitError> {
    check_sample(samples, 4)?;
    let y: alloc::vec::Vec<f64> = samples.iter().map(|&x| -x).collect();
    let y_mean = mean(&y);
    let y_min = y.iter().cloned().fold(f64::INFINITY, f64::min);

    let sd = sample_sd(&y);
    let start = sd * libm::sqrt(6.0) / core::f64::consts::PI;
    if !(start > 0.0) {
        return Err(FitError::Degenerate);
    }

    // score(s) = s - (mean(y) - weighted mean of y), weights exp(-y/s);
    // its root is the maximum-likelihood scale.
    let score = |s: f64| -> f64 {
        let mut num = 0.0;
        let mut den = 0.0;
        for &v in &y {
            let w = libm::exp(-(v - y_min) / s);
            num += v * w;
            den += w;
        }
        s - (y_mean - num / den)
    };

    let mut lo = start;
    let mut hi = start;
    for _ in 0..200 {
        if score(lo) <= 0.0 {
            break;
        }
        lo /= 2.0;
    }
    for _ in 0..200 {
        if score(hi) >= 0.0 {
            break;
        }
        hi *= 2.0;
    }
    if !(score(lo) <= 0.0 && score(hi) >= 0.0) {
        return Err(FitError::NoConvergence);
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if score(mid) <= 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= 1e-14 * hi {
            break;
        }
    }
    let scale = 0.5 * (lo + hi);
    if !(scale > 0.0) || !scale.is_finite() {
        return Err(FitError::NoConvergence);
    }

    let s_shift = mean(&y.iter().map(|&v| libm::exp(-(v - y_min) / scale)).collect::<alloc::vec::Vec<_>>());
    let m = y_min - scale * libm::log(s_shift);
    Ok(EvMin {
        location: -m,
        scale,
    })
}
