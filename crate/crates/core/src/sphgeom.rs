//! Spherical geometry over the upper observation hemisphere.
//!
//! Directions are unit vectors in a right-handed frame with `z` along the
//! surface normal and the incidence plane in `xz`. A direction is addressed
//! by zenith angle theta (0 at the normal, 90 at the horizon) and azimuth phi
//! (0 toward the specular side, counterclockwise), both in degrees.

use alloc::vec::Vec;
use core::fmt;

pub const DEG: f64 = core::f64::consts::PI / 180.0;

/// Unit direction for zenith `theta_deg`, azimuth `phi_deg`.
pub fn unit_dir(theta_deg: f64, phi_deg: f64) -> [f64; 3] {
    let (st, ct) = (libm::sin(theta_deg * DEG), libm::cos(theta_deg * DEG));
    let (sp, cp) = (libm::sin(phi_deg * DEG), libm::cos(phi_deg * DEG));
    [st * cp, st * sp, ct]
}

/// Specular reflection direction for a wave incident at `theta_r_deg`.
/// Incidence is in the `xz` plane, so the reflected axis has azimuth 0.
pub fn specular_dir(theta_r_deg: f64) -> [f64; 3] {
    unit_dir(theta_r_deg, 0.0)
}

pub fn dot(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

/// Angle in degrees between a direction and the specular axis.
pub fn deviation_deg(dir: [f64; 3], theta_r_deg: f64) -> f64 {
    let c = dot(dir, specular_dir(theta_r_deg)).clamp(-1.0, 1.0);
    libm::acos(c) / DEG
}

/// Squared cosine of the roll angle of `dir` around the specular axis,
/// measured from the incidence plane. 1 means the offset from the axis is
/// purely in-plane (vertical cut), 0 means purely cross-plane (horizontal
/// cut). On the axis itself the roll is undefined and 1 is returned.
pub fn plane_mix(dir: [f64; 3], theta_r_deg: f64) -> f64 {
    let (sr, cr) = (libm::sin(theta_r_deg * DEG), libm::cos(theta_r_deg * DEG));
    // tangent basis at the axis: in-plane (toward larger zenith) and cross-plane
    let d1 = dir[0] * cr - dir[2] * sr;
    let d2 = dir[1];
    let q = d1 * d1 + d2 * d2;
    if q < 1e-300 {
        1.0
    } else {
        d1 * d1 / q
    }
}

/// Wrap an azimuth into `[0, 360)`.
pub fn wrap_phi(phi_deg: f64) -> f64 {
    let mut p = phi_deg % 360.0;
    if p < 0.0 {
        p += 360.0;
    }
    p
}

/// Signed azimuth difference `a - b` wrapped into `(-180, 180]`.
pub fn signed_dphi(a_deg: f64, b_deg: f64) -> f64 {
    let mut d = (a_deg - b_deg) % 360.0;
    if d <= -180.0 {
        d += 360.0;
    } else if d > 180.0 {
        d -= 360.0;
    }
    d
}

/// Scattering frame: everything is referenced to the specular axis fixed by
/// the incidence zenith. Azimuth 0 points at the specular direction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpecularFrame {
    pub theta_r_deg: f64,
}

impl SpecularFrame {
    pub fn new(theta_r_deg: f64) -> Self {
        SpecularFrame { theta_r_deg }
    }

    pub fn axis(&self) -> [f64; 3] {
        specular_dir(self.theta_r_deg)
    }

    pub fn deviation_deg(&self, dir: [f64; 3]) -> f64 {
        deviation_deg(dir, self.theta_r_deg)
    }

    pub fn plane_mix(&self, dir: [f64; 3]) -> f64 {
        plane_mix(dir, self.theta_r_deg)
    }

    /// Widest deviation angle on the hemisphere for a roll angle whose
    /// cosine is `cos_chi`: the horizon seen from the lobe axis.
    pub fn horizon_deviation_deg(&self, cos_chi: f64) -> f64 {
        let t = libm::tan(self.theta_r_deg * DEG);
        libm::atan2(1.0, cos_chi * t) / DEG
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum GridError {
    /// Resolution must be positive and divide both 90 and 360 evenly.
    BadResolution(f64),
}

impl fmt::Display for GridError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GridError::BadResolution(r) => {
                write!(f, "grid resolution {r} does not divide the hemisphere evenly")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for GridError {}

/// Regular theta/phi grid over the hemisphere.
///
/// Rows run theta = 0..=90 and columns phi = 0..360 (exclusive), both in
/// steps of the resolution. Cells are ordered theta-major, so index
/// `i = row * n_phi + col`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    res_deg: f64,
    n_theta: usize,
    n_phi: usize,
}

impl Grid {
    pub fn new(res_deg: f64) -> Result<Self, GridError> {
        if !(res_deg > 0.0) || !res_deg.is_finite() {
            return Err(GridError::BadResolution(res_deg));
        }
        let nt = 90.0 / res_deg;
        let np = 360.0 / res_deg;
        if libm::fabs(nt - libm::round(nt)) > 1e-9 || libm::fabs(np - libm::round(np)) > 1e-9 {
            return Err(GridError::BadResolution(res_deg));
        }
        Ok(Grid {
            res_deg,
            n_theta: libm::round(nt) as usize + 1,
            n_phi: libm::round(np) as usize,
        })
    }

    pub fn res_deg(&self) -> f64 {
        self.res_deg
    }

    pub fn n_theta(&self) -> usize {
        self.n_theta
    }

    pub fn n_phi(&self) -> usize {
        self.n_phi
    }

    pub fn len(&self) -> usize {
        self.n_theta * self.n_phi
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn theta_of_row(&self, row: usize) -> f64 {
        row as f64 * self.res_deg
    }

    pub fn phi_of_col(&self, col: usize) -> f64 {
        col as f64 * self.res_deg
    }

    /// `(theta_deg, phi_deg)` of cell `i` in theta-major order.
    pub fn cell(&self, i: usize) -> (f64, f64) {
        let row = i / self.n_phi;
        let col = i % self.n_phi;
        (self.theta_of_row(row), self.phi_of_col(col))
    }

    /// Index of the cell whose angles are nearest `(theta_deg, phi_deg)`.
    pub fn nearest(&self, theta_deg: f64, phi_deg: f64) -> usize {
        let row = (libm::round(theta_deg / self.res_deg) as i64)
            .clamp(0, self.n_theta as i64 - 1) as usize;
        let mut col = libm::round(wrap_phi(phi_deg) / self.res_deg) as usize;
        if col >= self.n_phi {
            col = 0; // phi wrapped back to the seam
        }
        row * self.n_phi + col
    }

    pub fn iter(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        (0..self.len()).map(move |i| self.cell(i))
    }

    /// All cell angles as a vector, theta-major.
    pub fn angles(&self) -> Vec<(f64, f64)> {
        self.iter().collect()
    }
}
