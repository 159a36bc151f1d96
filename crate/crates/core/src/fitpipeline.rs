//! Inverse path: ingest a hemisphere field, recover the deterministic-lobe
//! parameters from the principal cuts, extract per-cell roughness residuals,
//! fit their amplitude and placement laws, and compare two fields by their
//! main-lobe extreme-value statistics.

use alloc::vec::Vec;

use crate::dists::ev::{self, EvMin};
use crate::dists::gev::{self, Gev};
use crate::dists::ks;
use crate::dists::nelder;
use crate::dists::tls::{self, Tls};
use crate::dists::FitError;
use crate::dsmodel::{
    ds_field, f_alpha_radial, lobe_base_db, DsParams, GeometryConfig, ParamError, ScatterField,
};
use crate::reconstruct::{
    main_lobe_mask, split_threshold, three_db_widths, LobeMask, MainLobeSpec, ReconstructError,
};
use crate::sphgeom::{signed_dphi, unit_dir, SpecularFrame, DEG};

/// Number of radial nodes for normalization integrals during fitting.
const FIT_F_NODES: usize = 2048;
/// Coarser node count for the normalization inside the transverse search
/// loop, evaluated per cut point per iterate. Its quadrature error is a few
/// parts in 1e5 — orders below the dB residuals the search minimizes — while
/// the final intercept inversions keep the full node count.
const SEARCH_F_NODES: usize = 256;

/// Minimum cut size and deviation-angle span for a trustworthy regression.
const MIN_CUT_POINTS: usize = 20;
const MIN_CUT_SPAN_DEG: f64 = 15.0;

#[derive(Debug, Clone, PartialEq)]
pub enum FitPipelineError {
    /// Too few cut points inside the fitting window.
    CutTooSparse { n: usize, need: usize },
    /// The cut's deviation angles span too narrow a range.
    SpanTooNarrow { span_deg: f64 },
    /// The regression produced a negative lobe exponent; the data does not
    /// decay away from the specular direction.
    NegativeAlpha { alpha: f64 },
    /// Recovered parameters violate their domain.
    Param(ParamError),
    /// Fields live on different grids or frames.
    GridMismatch,
    /// Mask does not belong to the fields' grid.
    MaskMismatch,
    /// Distribution fit failure.
    Dist(FitError),
    /// Width or mask construction failure.
    Lobe(ReconstructError),
    /// Iterative lobe fit did not converge.
    NoConvergence,
}

impl core::fmt::Display for FitPipelineError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            FitPipelineError::CutTooSparse { n, need } => {
                write!(f, "cut has {n} usable points, need {need}")
            }
            FitPipelineError::SpanTooNarrow { span_deg } => {
                write!(f, "cut spans only {span_deg} degrees of deviation")
            }
            FitPipelineError::NegativeAlpha { alpha } => {
                write!(f, "fitted lobe exponent {alpha} is negative")
            }
            FitPipelineError::Param(e) => write!(f, "recovered parameters invalid: {e}"),
            FitPipelineError::GridMismatch => write!(f, "fields use different grids or frames"),
            FitPipelineError::MaskMismatch => write!(f, "mask does not match the field grid"),
            FitPipelineError::Dist(e) => write!(f, "distribution fit failed: {e}"),
            FitPipelineError::Lobe(e) => write!(f, "lobe construction failed: {e}"),
            FitPipelineError::NoConvergence => write!(f, "lobe fit did not converge"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for FitPipelineError {}

impl From<FitError> for FitPipelineError {
    fn from(e: FitError) -> Self {
        FitPipelineError::Dist(e)
    }
}

impl From<ReconstructError> for FitPipelineError {
    fn from(e: ReconstructError) -> Self {
        FitPipelineError::Lobe(e)
    }
}

impl From<ParamError> for FitPipelineError {
    fn from(e: ParamError) -> Self {
        FitPipelineError::Param(e)
    }
}

/// The two principal cuts through the specular direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CutAxis {
    /// Incidence-plane cut: zenith sweep at azimuth 0 and 180.
    Vertical,
    /// Transverse cut: azimuth sweep along the specular zenith row.
    Horizontal,
}

/// One cut sample: grid cell, signed coordinate along the cut, deviation
/// angle, blend factor between the two principal lobes, and the value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CutPoint {
    pub cell: usize,
    /// Signed distance along the cut, degrees. Vertical: zenith offset from
    /// the specular direction, continued as negative past the pole.
    /// Horizontal: signed azimuth offset.
    pub t_deg: f64,
    pub psi_deg: f64,
    /// 1 on the incidence plane, 0 on the pure transverse offset.
    pub mix: f64,
    pub value_db: f64,
}

/// Extract a principal-plane cut from a hemisphere field.
///
/// The vertical cut walks the azimuth-0 meridian over the pole down the
/// azimuth-180 meridian; the horizontal cut walks the grid row nearest the
/// specular zenith.
pub fn plane_cut(field: &ScatterField, axis: CutAxis) -> Vec<CutPoint> {
    let grid = &field.grid;
    let frame = field.frame();
    let mut out = Vec::new();
    let mut push = |theta: f64, phi: f64, t: f64| {
        let i = grid.nearest(theta, phi);
        let dir = unit_dir(theta, phi);
        out.push(CutPoint {
            cell: i,
            t_deg: t,
            psi_deg: frame.deviation_deg(dir),
            mix: frame.plane_mix(dir),
            value_db: field.values_db[i],
        });
    };
    match axis {
        CutAxis::Vertical => {
            let res = grid.res_deg();
            let n = grid.n_theta();
            for row in 0..n {
                let theta = row as f64 * res;
                push(theta, 0.0, theta - frame.theta_r_deg);
            }
            // Continue over the pole; skip the pole row itself, already
            // visited on the azimuth-0 side.
            for row in 1..n {
                let theta = row as f64 * res;
                push(theta, 180.0, -(theta + frame.theta_r_deg));
            }
        }
        CutAxis::Horizontal => {
            let res = grid.res_deg();
            for col in 0..grid.n_phi() {
                let phi = col as f64 * res;
                push(frame.theta_r_deg, phi, signed_dphi(phi, 0.0));
            }
        }
    }
    out
}

/// What the intercept of a dB-domain lobe regression needs to recover the
/// scattering coefficient: frame, illuminated area, and the calibration
/// constant baked into the field values.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FitFrame {
    pub theta_r_deg: f64,
    pub area_mm2: f64,
    pub calibration_db: f64,
}

impl FitFrame {
    pub fn new(g: &GeometryConfig, calibration_db: f64) -> Self {
        FitFrame {
            theta_r_deg: g.theta_i_deg,
            area_mm2: g.area_mm2,
            calibration_db,
        }
    }

    pub fn frame(&self) -> SpecularFrame {
        SpecularFrame::new(self.theta_r_deg)
    }

    /// dB level of `s^2 * area * cos(theta_i) / F(alpha)`, the
    /// angle-independent part of the lobe in the log domain.
    fn level_db(&self, s: f64, alpha: f64) -> f64 {
        let f = f_alpha_radial(alpha, self.frame(), FIT_F_NODES);
        let cos_i = libm::cos(self.theta_r_deg * DEG);
        10.0 * libm::log10(s * s * self.area_mm2 * cos_i / f) + self.calibration_db
    }

    /// Invert `level_db` for the scattering coefficient.
    fn s_from_intercept(&self, intercept_db: f64, alpha: f64) -> f64 {
        let f = f_alpha_radial(alpha, self.frame(), FIT_F_NODES);
        let cos_i = libm::cos(self.theta_r_deg * DEG);
        let s_sq =
            libm::pow(10.0, (intercept_db - self.calibration_db) / 10.0) * f / (self.area_mm2 * cos_i);
        libm::sqrt(s_sq)
    }
}

/// Fit a single-exponent lobe to one plane cut by linear regression in the
/// log domain: `value_db = intercept + alpha * 10 log10((1+cos psi)/2)`.
///
/// The slope is the lobe exponent; the intercept yields the scattering
/// coefficient through the normalization integral. Adding a constant dB
/// offset to every point leaves alpha unchanged and scales the recovered
/// coefficient, which is how an unknown calibration is absorbed.
pub fn fit_ds_plane(points: &[CutPoint], fr: &FitFrame) -> Result<(f64, f64), FitPipelineError> {
    if points.len() < MIN_CUT_POINTS {
        return Err(FitPipelineError::CutTooSparse {
            n: points.len(),
            need: MIN_CUT_POINTS,
        });
    }
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for p in points {
        lo = lo.min(p.psi_deg);
        hi = hi.max(p.psi_deg);
    }
    if hi - lo < MIN_CUT_SPAN_DEG {
        return Err(FitPipelineError::SpanTooNarrow { span_deg: hi - lo });
    }

    let n = points.len() as f64;
    let mut sx = 0.0;
    let mut sy = 0.0;
    let mut sxx = 0.0;
    let mut sxy = 0.0;
    for p in points {
        let x = lobe_base_db(p.psi_deg);
        sx += x;
        sy += p.value_db;
        sxx += x * x;
        sxy += x * p.value_db;
    }
    let denom = n * sxx - sx * sx;
    if denom.abs() < 1e-12 {
        return Err(FitPipelineError::SpanTooNarrow { span_deg: hi - lo });
    }
    let alpha = (n * sxy - sx * sy) / denom;
    let intercept = (sy - alpha * sx) / n;
    if alpha < 0.0 {
        if alpha > -1e-9 {
            return Ok((0.0, fr.s_from_intercept(intercept, 0.0)));
        }
        return Err(FitPipelineError::NegativeAlpha { alpha });
    }
    Ok((alpha, fr.s_from_intercept(intercept, alpha)))
}

/// Model value of the blended lobe at one cut point, dB. The transverse
/// search inlines this with a hoisted quadrature; this form backs the tests
/// that pin the two against each other.
#[cfg(test)]
fn blended_value_db(p: &DsParams, fr: &FitFrame, pt: &CutPoint) -> f64 {
    let alpha = p.effective_alpha(pt.mix);
    let s = p.effective_s(pt.mix);
    fr.level_db(s, alpha) + alpha * lobe_base_db(pt.psi_deg)
}

/// Fit the transverse-lobe pair given the incidence-plane pair.
///
/// Away from the specular direction the transverse cut blends both lobes,
/// so a plain regression on it is biased; instead, minimize the dB-domain
/// squared error of the full blended model over (alpha_h, ln s_h), with
/// (alpha_v, s_v) held at their incidence-plane estimates.
pub fn fit_transverse_pair(
    points: &[CutPoint],
    fr: &FitFrame,
    alpha_v: f64,
    s_v: f64,
    init: (f64, f64),
) -> Result<(f64, f64), FitPipelineError> {
    if points.len() < MIN_CUT_POINTS {
        return Err(FitPipelineError::CutTooSparse {
            n: points.len(),
            need: MIN_CUT_POINTS,
        });
    }
    // The normalization is evaluated once per cut point per iterate, so the
    // frame's horizon factor per quadrature node is hoisted out of the
    // search; each evaluation then costs one `pow` per node.
    let frame = fr.frame();
    let h = 2.0 * core::f64::consts::PI / SEARCH_F_NODES as f64;
    let w_maxes: Vec<f64> = (0..SEARCH_F_NODES)
        .map(|k| {
            let chi = (k as f64 + 0.5) * h;
            crate::dsmodel::lobe_base(frame.horizon_deviation_deg(libm::cos(chi)))
        })
        .collect();
    let f_of = |alpha: f64| -> f64 {
        let mut sum = 0.0;
        for &w in &w_maxes {
            sum += 1.0 - libm::pow(w, alpha + 1.0);
        }
        2.0 / (alpha + 1.0) * sum * h
    };
    let cos_i = libm::cos(fr.theta_r_deg * DEG);
    let pts: Vec<(f64, f64, f64)> = points
        .iter()
        .map(|pt| (pt.mix, lobe_base_db(pt.psi_deg), pt.value_db))
        .collect();
    let sse = |alpha_h: f64, s_h: f64| -> f64 {
        let p = match DsParams::new(s_v, alpha_v, s_h, alpha_h) {
            Ok(p) => p,
            Err(_) => return f64::INFINITY,
        };
        let mut acc = 0.0;
        for &(mix, base_db, value_db) in &pts {
            let alpha = p.effective_alpha(mix);
            let s = p.effective_s(mix);
            let level =
                10.0 * libm::log10(s * s * fr.area_mm2 * cos_i / f_of(alpha)) + fr.calibration_db;
            let d = level + alpha * base_db - value_db;
            acc += d * d;
        }
        acc
    };
    let objective = |x: &[f64]| sse(x[0], libm::exp(x[1]));
    let x0 = [init.0, libm::log(init.1.max(1e-6))];
    let steps = [0.2 * init.0.max(1.0), 0.2];
    let min = nelder::minimize(
        objective,
        &x0,
        &steps,
        &nelder::Options {
            max_iter: 4000,
            f_tol: 1e-12,
            x_tol: 1e-10,
        },
    );
    if !min.converged || !min.f.is_finite() {
        return Err(FitPipelineError::NoConvergence);
    }
    let alpha_h = min.x[0];
    let s_h = libm::exp(min.x[1]);
    if alpha_h < 0.0 {
        return Err(FitPipelineError::NegativeAlpha { alpha: alpha_h });
    }
    Ok((alpha_h, s_h))
}

/// Signed per-cell roughness increments: calibrated linear power density of
/// the field minus that of the deterministic baseline, over the mask cells
/// in mask order.
pub fn extract_residuals(
    field: &ScatterField,
    baseline: &ScatterField,
    mask: &LobeMask,
) -> Result<Vec<f64>, FitPipelineError> {
    if field.grid != baseline.grid || field.theta_r_deg != baseline.theta_r_deg {
        return Err(FitPipelineError::GridMismatch);
    }
    let len = field.values_db.len();
    let mut out = Vec::with_capacity(mask.len());
    for c in mask.cells() {
        if c.cell >= len {
            return Err(FitPipelineError::MaskMismatch);
        }
        out.push(field.power_of(c.cell) - baseline.power_of(c.cell));
    }
    Ok(out)
}

/// Everything the inverse pipeline recovers from one hemisphere field.
#[derive(Debug, Clone)]
pub struct FitReport {
    pub ds: DsParams,
    pub widths: MainLobeSpec,
    pub tls: Tls,
    /// Placement law of the strong components. Strong sets are tiny for a
    /// single field (often one to three cells), so this is only populated
    /// when enough angles exist to fit; pool `psi_high_deg` across fields
    /// for a meaningful estimate.
    pub gev: Option<Gev>,
    /// Deviation angles of the strong residual components, degrees.
    pub psi_high_deg: Vec<f64>,
    /// Extreme-value fit of the ingested field's main-lobe values.
    pub ev_ingested: EvMin,
    /// Extreme-value fit of the fitted deterministic baseline's main-lobe
    /// values.
    pub ev_baseline: EvMin,
    /// Absolute differences (|d location|, |d scale|) between the two
    /// extreme-value fits, dB.
    pub errors_db: (f64, f64),
    /// Kolmogorov-Smirnov acceptance of `ev_ingested` against the ingested
    /// main-lobe values at significance 0.01.
    pub ks_pass: bool,
}

/// Fitting configuration: geometry of the illumination, the calibration
/// constant assumed for the ingested values, the strong/weak threshold
/// offset, and the deviation-angle window for the lobe regressions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FitConfig {
    pub geometry: GeometryConfig,
    pub calibration_db: f64,
    pub threshold_offset_db: f64,
    pub psi_window_deg: f64,
}

impl FitConfig {
    pub fn new(geometry: GeometryConfig, calibration_db: f64) -> Self {
        FitConfig {
            geometry,
            calibration_db,
            threshold_offset_db: 8.0,
            psi_window_deg: 45.0,
        }
    }
}

fn window(points: &[CutPoint], window_deg: f64, exclude_abs_t_below: f64) -> Vec<CutPoint> {
    points
        .iter()
        .filter(|p| p.psi_deg <= window_deg && p.t_deg.abs() >= exclude_abs_t_below)
        .cloned()
        .collect()
}

fn fit_lobe_pair(
    v_cut: &[CutPoint],
    h_cut: &[CutPoint],
    fr: &FitFrame,
    cfg: &FitConfig,
    exclude_v: f64,
    exclude_h: f64,
    init_h: Option<(f64, f64)>,
) -> Result<DsParams, FitPipelineError> {
    let v_pts = window(v_cut, cfg.psi_window_deg, exclude_v);
    let (alpha_v, s_v) = fit_ds_plane(&v_pts, fr)?;
    let h_pts = window(h_cut, cfg.psi_window_deg, exclude_h);
    let init = match init_h {
        Some(i) => i,
        None => fit_ds_plane(&h_pts, fr)?,
    };
    let (alpha_h, s_h) = fit_transverse_pair(&h_pts, fr, alpha_v, s_v, init)?;
    Ok(DsParams::new(s_v, alpha_v, s_h, alpha_h)?)
}

/// Recover lobe parameters, roughness laws, and main-lobe extreme-value
/// statistics from one hemisphere field.
///
/// Two-pass lobe fit: the first pass uses the full cuts inside the window;
/// its widths locate the main lobe, which the second pass excludes (plus
/// one grid cell of margin) so roughness perturbations cannot bias the
/// recovered exponents.
pub fn full_fit(field: &ScatterField, cfg: &FitConfig) -> Result<FitReport, FitPipelineError> {
    if field.theta_r_deg != cfg.geometry.theta_i_deg {
        return Err(FitPipelineError::GridMismatch);
    }
    let fr = FitFrame::new(&cfg.geometry, cfg.calibration_db);
    let frame = fr.frame();
    let v_cut = plane_cut(field, CutAxis::Vertical);
    let h_cut = plane_cut(field, CutAxis::Horizontal);

    let ds1 = fit_lobe_pair(&v_cut, &h_cut, &fr, cfg, 0.0, 0.0, None)?;
    let w1 = three_db_widths(&ds1, frame)?;
    let res = field.grid.res_deg();
    let ds = fit_lobe_pair(
        &v_cut,
        &h_cut,
        &fr,
        cfg,
        w1.v_main_deg / 2.0 + res,
        w1.h_main_deg / 2.0 + res,
        Some((ds1.alpha_h, ds1.s_h)),
    )?;
    let widths = three_db_widths(&ds, frame)?;

    let baseline = ds_field(field.grid, &ds, &cfg.geometry, cfg.calibration_db);
    let mask = main_lobe_mask(&field.grid, frame, &widths)?;
    let residuals = extract_residuals(field, &baseline, &mask)?;
    let tls = tls::fit(&residuals)?;

    let (high, _) = split_threshold(&residuals, cfg.threshold_offset_db)?;
    let psi_high_deg: Vec<f64> = high.iter().map(|&i| mask.cells()[i].psi_deg).collect();
    let gev = gev::fit(&psi_high_deg).ok();

    let ingested: Vec<f64> = mask.cells().iter().map(|c| field.values_db[c.cell]).collect();
    let base_vals: Vec<f64> = mask
        .cells()
        .iter()
        .map(|c| baseline.values_db[c.cell])
        .collect();
    let ev_ingested = ev::fit(&ingested)?;
    let ev_baseline = ev::fit(&base_vals)?;
    let errors_db = ev_errors(&ev_ingested, &ev_baseline);
    let ks_pass = ks::test(&ingested, |x| ev_ingested.cdf(x), 0.01)?.accepted;

    Ok(FitReport {
        ds,
        widths,
        tls,
        gev,
        psi_high_deg,
        ev_ingested,
        ev_baseline,
        errors_db,
        ks_pass,
    })
}

/// Absolute differences of extreme-value parameters, dB.
pub fn ev_errors(a: &EvMin, b: &EvMin) -> (f64, f64) {
    (
        (a.location - b.location).abs(),
        (a.scale - b.scale).abs(),
    )
}

/// Fit extreme-value laws to both fields' main-lobe values and report the
/// absolute parameter differences. Swapping the inputs swaps the fits and
/// leaves the errors unchanged.
pub fn evaluate_against(
    field_a: &ScatterField,
    field_b: &ScatterField,
    mask: &LobeMask,
) -> Result<(EvMin, EvMin, (f64, f64)), FitPipelineError> {
    if field_a.grid != field_b.grid || field_a.theta_r_deg != field_b.theta_r_deg {
        return Err(FitPipelineError::GridMismatch);
    }
    let len = field_a.values_db.len();
    let mut va = Vec::with_capacity(mask.len());
    let mut vb = Vec::with_capacity(mask.len());
    for c in mask.cells() {
        if c.cell >= len {
            return Err(FitPipelineError::MaskMismatch);
        }
        va.push(field_a.values_db[c.cell]);
        vb.push(field_b.values_db[c.cell]);
    }
    let ev_a = ev::fit(&va)?;
    let ev_b = ev::fit(&vb)?;
    let errors = ev_errors(&ev_a, &ev_b);
    Ok((ev_a, ev_b, errors))
}
