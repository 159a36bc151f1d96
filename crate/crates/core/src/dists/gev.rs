//! Generalized extreme value distribution.
//!
//! Shape convention: positive `shape` gives a heavy upper tail, negative
//! bounds the distribution above at `location + scale/|shape|`. The angular
//! placement statistics in the presets all have negative shape (offsets from
//! specular cannot grow without bound).

use super::nelder::{self, Options};
use super::special::ln_gamma;
use super::{check_sample, mean, sorted_copy, FitError};
use rand::Rng;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Gev {
    pub shape: f64,
    pub scale: f64,
    pub location: f64,
}

impl Gev {
    pub fn new(shape: f64, scale: f64, location: f64) -> Option<Self> {
        if scale > 0.0 && shape.is_finite() && location.is_finite() {
            Some(Gev {
                shape,
                scale,
                location,
            })
        } else {
            None
        }
    }

    /// Natural log of `t(x) = (1 + shape*z)^(-1/shape)`, the core transform;
    /// `None` outside the support.
    fn ln_t(&self, x: f64) -> Option<f64> {
        let z = (x - self.location) / self.scale;
        if libm::fabs(self.shape) < 1e-12 {
            return Some(-z);
        }
        let u = 1.0 + self.shape * z;
        if u <= 0.0 {
            None
        } else {
            Some(-libm::log(u) / self.shape)
        }
    }

    pub fn ln_pdf(&self, x: f64) -> f64 {
        match self.ln_t(x) {
            None => f64::NEG_INFINITY,
            Some(lt) => (self.shape + 1.0) * lt - libm::exp(lt) - libm::log(self.scale),
        }
    }

    pub fn pdf(&self, x: f64) -> f64 {
        libm::exp(self.ln_pdf(x))
    }

    pub fn cdf(&self, x: f64) -> f64 {
        match self.ln_t(x) {
            None => {
                // outside the support: above the upper end when the shape is
                // negative (z > 0), below the lower end when positive (z < 0)
                let z = (x - self.location) / self.scale;
                if z > 0.0 {
                    1.0
                } else {
                    0.0
                }
            }
            Some(lt) => libm::exp(-libm::exp(lt)),
        }
    }

    /// Inverse CDF at probability `u` in `(0, 1)`.
    pub fn quantile(&self, u: f64) -> f64 {
        assert!(u > 0.0 && u < 1.0, "quantile needs u in (0,1)");
        let ln_w = libm::log(-libm::log(u)); // ln(-ln u)
        if libm::fabs(self.shape) < 1e-12 {
            self.location - self.scale * ln_w
        } else {
            self.location + self.scale * libm::expm1(-self.shape * ln_w) / self.shape
        }
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        let mut u: f64 = rng.gen();
        while u <= 0.0 {
            u = rng.gen();
        }
        self.quantile(u)
    }

    pub(crate) fn nll(&self, samples: &[f64]) -> f64 {
        -samples.iter().map(|&x| self.ln_pdf(x)).sum::<f64>()
    }
}

/// Fit by probability-weighted moments, then polish with a likelihood
/// search. PWM alone is already consistent and gives the polish a starting
/// point inside the support, which plain moment estimates often do not.
pub fn fit(samples: &[f64]) -> Result<Gev, FitError> {
    check_sample(samples, 8)?;
    let init = pwm_estimate(samples).unwrap_or(Gev {
        shape: 0.1,
        scale: super::sample_sd(samples),
        location: mean(samples),
    });

    let obj = |p: &[f64]| {
        let d = Gev {
            shape: p[0],
            scale: libm::exp(p[1]),
            location: p[2],
        };
        if !d.scale.is_finite() || libm::fabs(d.shape) > 5.0 {
            return f64::INFINITY;
        }
        d.nll(samples)
    };
    let x0 = [init.shape, libm::log(init.scale), init.location];
    let m = nelder::minimize(
        obj,
        &x0,
        &[0.08, 0.15, 0.3 * init.scale],
        &Options::default(),
    );
    if m.f.is_finite() {
        Gev::new(m.x[0], libm::exp(m.x[1]), m.x[2]).ok_or(FitError::NoConvergence)
    } else {
        // likelihood never became finite; fall back to the moment solution
        Gev::new(init.shape, init.scale, init.location).ok_or(FitError::NoConvergence)
    }
}

/// Hosking's probability-weighted-moment estimator.
fn pwm_estimate(samples: &[f64]) -> Option<Gev> {
    let x = sorted_copy(samples);
    let n = x.len();
    let nf = n as f64;
    let (mut b0, mut b1, mut b2) = (0.0, 0.0, 0.0);
    for (j, &v) in x.iter().enumerate() {
        let j = j as f64;
        b0 += v;
        b1 += j / (nf - 1.0) * v;
        b2 += j * (j - 1.0) / ((nf - 1.0) * (nf - 2.0)) * v;
    }
    b0 /= nf;
    b1 /= nf;
    b2 /= nf;

    let denom = 3.0 * b2 - b0;
    if denom == 0.0 {
        return None;
    }
    let c = (2.0 * b1 - b0) / denom - core::f64::consts::LN_2 / libm::log(3.0);
    // Hosking's kappa, equal to minus our shape
    let kappa = 7.859 * c + 2.9554 * c * c;
    if libm::fabs(kappa) < 1e-9 {
        // Gumbel edge of the family
        const EULER: f64 = 0.5772156649015329;
        let scale = (2.0 * b1 - b0) / core::f64::consts::LN_2;
        return Gev::new(0.0, scale, b0 - EULER * scale);
    }
    let g = libm::exp(ln_gamma(1.0 + kappa));
    let scale = (2.0 * b1 - b0) * kappa / (g * (1.0 - libm::exp2(-kappa)));
    let location = b0 - scale * (1.0 - g) / kappa;
    Gev::new(-kappa, scale, location)
}
