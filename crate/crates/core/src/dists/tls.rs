//! Location-scale Student t. The roughness perturbation amplitudes follow
//! this family with tail indices around 1.3 to 2.5, so second moments barely
//! exist and fitting goes through the likelihood, not moments.

use super::nelder::{self, Options};
use super::special::{betainc, ln_gamma};
use super::{check_sample, quantile_sorted, sorted_copy, FitError};
use rand::Rng;
use rand_distr::{Distribution, StudentT};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tls {
    pub location: f64,
    pub scale: f64,
    /// Degrees of freedom; must be positive but need not be an integer.
    pub dof: f64,
}

impl Tls {
    pub fn new(location: f64, scale: f64, dof: f64) -> Option<Self> {
        if scale > 0.0 && dof > 0.0 && location.is_finite() {
            Some(Tls {
                location,
                scale,
                dof,
            })
        } else {
            None
        }
    }

    pub fn ln_pdf(&self, x: f64) -> f64 {
        let nu = self.dof;
        let z = (x - self.location) / self.scale;
        ln_gamma((nu + 1.0) / 2.0)
            - ln_gamma(nu / 2.0)
            - 0.5 * libm::log(nu * core::f64::consts::PI)
            - libm::log(self.scale)
            - 0.5 * (nu + 1.0) * libm::log1p(z * z / nu)
    }

    pub fn pdf(&self, x: f64) -> f64 {
        libm::exp(self.ln_pdf(x))
    }

    pub fn cdf(&self, x: f64) -> f64 {
        let nu = self.dof;
        let z = (x - self.location) / self.scale;
        if z == 0.0 {
            return 0.5;
        }
        let w = betainc(nu / 2.0, 0.5, nu / (nu + z * z));
        if z > 0.0 {
            1.0 - 0.5 * w
        } else {
            0.5 * w
        }
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        let t = StudentT::new(self.dof).expect("dof checked positive").sample(rng);
        self.location + self.scale * t
    }

    fn nll(&self, samples: &[f64]) -> f64 {
        -samples.iter().map(|&x| self.ln_pdf(x)).sum::<f64>()
    }
}

/// Maximum-likelihood fit of all three parameters.
///
/// The search runs over `(location, ln scale, ln dof)` so the optimizer
/// cannot leave the valid domain. Initial scale comes from the interquartile
/// range, which stays finite even when the tail index is below 2 and the
/// sample variance is useless.
pub fn fit(samples: &[f64]) -> Result<Tls, FitError> {
    check_sample(samples, 8)?;
    let sorted = sorted_copy(samples);
    let med = quantile_sorted(&sorted, 0.5);
    let iqr = quantile_sorted(&sorted, 0.75) - quantile_sorted(&sorted, 0.25);
    let scale0 = if iqr > 0.0 {
        iqr / 1.349
    } else {
        // degenerate middle, spread must sit in the tails
        (sorted[sorted.len() - 1] - sorted[0]) / 4.0
    };

    let obj = |p: &[f64]| {
        let d = Tls {
            location: p[0],
            scale: libm::exp(p[1]),
            dof: libm::exp(p[2]),
        };
        if !d.scale.is_finite() || !d.dof.is_finite() {
            return f64::INFINITY;
        }
        d.nll(samples)
    };
    let x0 = [med, libm::log(scale0), libm::log(3.0)];
    let m = nelder::minimize(obj, &x0, &[0.3 * scale0, 0.25, 0.4], &Options::default());
    if !m.f.is_finite() {
        return Err(FitError::NoConvergence);
    }
    Tls::new(m.x[0], libm::exp(m.x[1]), libm::exp(m.x[2])).ok_or(FitError::NoConvergence)
}
