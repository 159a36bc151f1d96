//! Nelder-Mead simplex minimizer for the low-dimensional likelihood
//! surfaces in this crate. Objectives may return `INFINITY` outside their
//! domain; the simplex walks back inside on its own.

use alloc::vec;
use alloc::vec::Vec;

pub struct Options {
    pub max_iter: usize,
    pub f_tol: f64,
    pub x_tol: f64,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            max_iter: 2000,
            f_tol: 1e-10,
            x_tol: 1e-10,
        }
    }
}

pub struct Minimum {
    pub x: Vec<f64>,
    pub f: f64,
    pub iterations: usize,
    pub converged: bool,
}

/// Minimize `f` starting from `x0` with initial per-coordinate steps.
pub fn minimize<F>(f: F, x0: &[f64], step: &[f64], opts: &Options) -> Minimum
where
    F: Fn(&[f64]) -> f64,
{
    assert_eq!(x0.len(), step.len());
    let n = x0.len();
    assert!(n > 0);

    let mut simplex: Vec<Vec<f64>> = vec![x0.to_vec()];
    for i in 0..n {
        let mut v = x0.to_vec();
        v[i] += if step[i] != 0.0 { step[i] } else { 1e-4 };
        simplex.push(v);
    }
    let mut fv: Vec<f64> = simplex.iter().map(|v| f(v)).collect();

    let (alpha, gamma, rho, sigma) = (1.0, 2.0, 0.5, 0.5);
    let mut iterations = 0;
    let mut converged = false;

    while iterations < opts.max_iter {
        iterations += 1;
        // order ascending by objective
        let mut idx: Vec<usize> = (0..=n).collect();
        idx.sort_by(|&a, &b| fv[a].total_cmp(&fv[b]));
        let reorder: Vec<Vec<f64>> = idx.iter().map(|&i| simplex[i].clone()).collect();
        let refv: Vec<f64> = idx.iter().map(|&i| fv[i]).collect();
        simplex = reorder;
        fv = refv;

        let f_spread = fv[n] - fv[0];
        let x_spread = (0..n)
            .map(|j| {
                simplex[1..]
                    .iter()
                    .map(|v| libm::fabs(v[j] - simplex[0][j]))
                    .fold(0.0, f64::max)
            })
            .fold(0.0, f64::max);
        if f_spread.is_finite() && f_spread < opts.f_tol && x_spread < opts.x_tol {
            converged = true;
            break;
        }

        // centroid of all but the worst
        let mut cen = vec![0.0; n];
        for v in &simplex[..n] {
            for j in 0..n {
                cen[j] += v[j] / n as f64;
            }
        }

        let lerp = |t: f64| -> Vec<f64> {
            (0..n)
                .map(|j| cen[j] + t * (cen[j] - simplex[n][j]))
                .collect()
        };

        let xr = lerp(alpha);
        let fr = f(&xr);
        if fr < fv[0] {
            let xe = lerp(gamma);
            let fe = f(&xe);
            if fe < fr {
                simplex[n] = xe;
                fv[n] = fe;
            } else {
                simplex[n] = xr;
                fv[n] = fr;
            }
        } else if fr < fv[n - 1] {
            simplex[n] = xr;
            fv[n] = fr;
        } else {
            let (xc, fc) = if fr < fv[n] {
                let x = lerp(rho);
                let fx = f(&x);
                (x, fx)
            } else {
                let x = lerp(-rho);
                let fx = f(&x);
                (x, fx)
            };
            if fc < fv[n].min(fr) {
                simplex[n] = xc;
                fv[n] = fc;
            } else {
                for i in 1..=n {
                    for j in 0..n {
                        simplex[i][j] = simplex[0][j] + sigma * (simplex[i][j] - simplex[0][j]);
                    }
                    fv[i] = f(&simplex[i]);
                }
            }
        }
    }

    let mut best = 0;
    for i in 1..=n {
        if fv[i] < fv[best] {
            best = i;
        }
    }
    Minimum {
        x: simplex[best].clone(),
        f: fv[best],
        iterations,
        converged,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_rosenbrock_minimum() {
        let rosen =
            |v: &[f64]| (1.0 - v[0]).powi(2) + 100.0 * (v[1] - v[0] * v[0]).powi(2);
        let m = minimize(rosen, &[-1.2, 1.0], &[0.5, 0.5], &Options::default());
        assert!(m.converged, "no convergence after {} iters", m.iterations);
        assert!(libm::fabs(m.x[0] - 1.0) < 1e-4);
        assert!(libm::fabs(m.x[1] - 1.0) < 1e-4);
    }

    #[test]
    fn walks_out_of_infinite_region() {
        // objective undefined for x < 0, minimum at x = 2
        let f = |v: &[f64]| {
            if v[0] < 0.0 {
                f64::INFINITY
            } else {
                (v[0] - 2.0) * (v[0] - 2.0)
            }
        };
        let m = minimize(f, &[-0.5, 0.0], &[1.0, 0.1], &Options::default());
        assert!(libm::fabs(m.x[0] - 2.0) < 1e-4);
    }

    #[test]
    fn quadratic_bowl_three_dims() {
        let f = |v: &[f64]| v.iter().map(|x| x * x).sum::<f64>();
        let m = minimize(f, &[3.0, -4.0, 5.0], &[1.0, 1.0, 1.0], &Options::default());
        assert!(m.f < 1e-8);
    }
}
