//! Scenario configuration: plain-text `key=value` files describing one
//! synthesis run. A scenario either references a catalog preset (and may
//! override individual values) or spells out every model parameter.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use thzscat_core::dists::gev::Gev;
use thzscat_core::dists::tls::Tls;
use thzscat_core::dsmodel::{DsParams, GeometryConfig};
use thzscat_core::presets::{self, Preset, DEFAULT_CALIBRATION_DB, PATCH_AREA_MM2};
use thzscat_core::reconstruct::{three_db_widths, MainLobeSpec, RoughnessLaw};
use thzscat_core::sphgeom::SpecularFrame;

use crate::seeds::{format_seeds, parse_seeds};

#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    /// Preset name this scenario was derived from, if any.
    pub preset: Option<String>,
    pub theta_i_deg: f64,
    pub area_mm2: f64,
    pub resolution_deg: f64,
    pub calibration_db: f64,
    pub ds: DsParams,
    pub law: RoughnessLaw,
    /// Stated main-lobe widths; when absent they are computed from the lobe
    /// exponents.
    pub widths_override: Option<MainLobeSpec>,
    pub seeds: Vec<u64>,
}

impl Scenario {
    pub fn from_preset(p: &Preset) -> Self {
        Scenario {
            preset: Some(p.name.to_string()),
            theta_i_deg: p.theta_i(),
            area_mm2: PATCH_AREA_MM2,
            resolution_deg: 1.0,
            calibration_db: DEFAULT_CALIBRATION_DB,
            ds: p.ds(),
            law: p.law(),
            widths_override: Some(p.widths()),
            seeds: vec![1],
        }
    }

    pub fn geometry(&self) -> GeometryConfig {
        GeometryConfig::plane_wave(self.theta_i_deg, self.area_mm2)
    }

    /// Effective main-lobe widths: the override when present, otherwise the
    /// widths implied by the lobe exponents.
    pub fn widths(&self) -> Result<MainLobeSpec> {
        match self.widths_override {
            Some(w) => Ok(w),
            None => three_db_widths(&self.ds, SpecularFrame::new(self.theta_i_deg))
                .map_err(|e| anyhow::anyhow!("computing main-lobe widths: {e}")),
        }
    }

    /// Render as `key=value` text with every effective value echoed.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Some(p) = &self.preset {
            let _ = writeln!(out, "preset={p}");
        }
        let _ = writeln!(out, "theta_i_deg={}", self.theta_i_deg);
        let _ = writeln!(out, "area_mm2={}", self.area_mm2);
        let _ = writeln!(out, "resolution_deg={}", self.resolution_deg);
        let _ = writeln!(out, "calibration_db={}", self.calibration_db);
        let _ = writeln!(out, "alpha_v={}", self.ds.alpha_v);
        let _ = writeln!(out, "s_v={}", self.ds.s_v);
        let _ = writeln!(out, "alpha_h={}", self.ds.alpha_h);
        let _ = writeln!(out, "s_h={}", self.ds.s_h);
        let _ = writeln!(out, "tls_location={}", self.law.tls.location);
        let _ = writeln!(out, "tls_scale={}", self.law.tls.scale);
        let _ = writeln!(out, "tls_dof={}", self.law.tls.dof);
        let _ = writeln!(out, "gev_shape={}", self.law.gev.shape);
        let _ = writeln!(out, "gev_scale={}", self.law.gev.scale);
        let _ = writeln!(out, "gev_location={}", self.law.gev.location);
        let _ = writeln!(out, "threshold_offset_db={}", self.law.threshold_offset_db);
        if let Some(w) = self.widths_override {
            let _ = writeln!(out, "v_main_deg={}", w.v_main_deg);
            let _ = writeln!(out, "h_main_deg={}", w.h_main_deg);
        }
        let _ = writeln!(out, "seeds={}", format_seeds(&self.seeds));
        out
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        fs::write(path, self.to_text())
            .with_context(|| format!("writing scenario {}", path.display()))
    }
}

/// Every key the scenario format accepts.
const KEYS: [&str; 19] = [
    "preset",
    "theta_i_deg",
    "area_mm2",
    "resolution_deg",
    "calibration_db",
    "alpha_v",
    "s_v",
    "alpha_h",
    "s_h",
    "tls_location",
    "tls_scale",
    "tls_dof",
    "gev_shape",
    "gev_scale",
    "gev_location",
    "threshold_offset_db",
    "v_main_deg",
    "h_main_deg",
    "seeds",
];

pub fn parse_scenario(text: &str) -> Result<Scenario> {
    let mut kv: Vec<(usize, String, String)> = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((k, v)) = line.split_once('=') else {
            bail!("line {}: expected key=value, got {line:?}", ln + 1);
        };
        let key = k.trim().to_string();
        if !KEYS.contains(&key.as_str()) {
            bail!("line {}: unknown key {key:?}", ln + 1);
        }
        if kv.iter().any(|(_, k2, _)| *k2 == key) {
            bail!("line {}: duplicate key {key:?}", ln + 1);
        }
        kv.push((ln + 1, key, v.trim().to_string()));
    }

    let get = |key: &str| kv.iter().find(|(_, k, _)| k == key).map(|(_, _, v)| v.as_str());
    let num = |key: &str| -> Result<Option<f64>> {
        match get(key) {
            None => Ok(None),
            Some(v) => Ok(Some(
                v.parse::<f64>().with_context(|| format!("bad number for {key}: {v:?}"))?,
            )),
        }
    };
    let required = |key: &str, preset_val: Option<f64>, parsed: Option<f64>| -> Result<f64> {
        parsed
            .or(preset_val)
            .ok_or_else(|| anyhow::anyhow!("missing required key {key:?}"))
    };

    let base = match get("preset") {
        Some(name) => Some(
            presets::find(name)
                .ok_or_else(|| anyhow::anyhow!("unknown preset {name:?}"))?,
        ),
        None => None,
    };
    let b = |f: fn(&Preset) -> f64| base.map(f);

    let theta_i_deg = required("theta_i_deg", b(|p| p.theta_i()), num("theta_i_deg")?)?;
    let area_mm2 = num("area_mm2")?.unwrap_or(PATCH_AREA_MM2);
    let resolution_deg = num("resolution_deg")?.unwrap_or(1.0);
    let calibration_db = num("calibration_db")?.unwrap_or(DEFAULT_CALIBRATION_DB);

    let alpha_v = required("alpha_v", b(|p| p.ds().alpha_v), num("alpha_v")?)?;
    let s_v = required("s_v", b(|p| p.ds().s_v), num("s_v")?)?;
    let alpha_h = required("alpha_h", b(|p| p.ds().alpha_h), num("alpha_h")?)?;
    let s_h = required("s_h", b(|p| p.ds().s_h), num("s_h")?)?;
    let ds = DsParams::new(s_v, alpha_v, s_h, alpha_h)
        .map_err(|e| anyhow::anyhow!("lobe parameters: {e}"))?;

    let tls = Tls::new(
        required("tls_location", b(|p| p.tls().location), num("tls_location")?)?,
        required("tls_scale", b(|p| p.tls().scale), num("tls_scale")?)?,
        required("tls_dof", b(|p| p.tls().dof), num("tls_dof")?)?,
    )
    .ok_or_else(|| anyhow::anyhow!("amplitude-law scale and dof must be positive"))?;
    let gev = Gev::new(
        required("gev_shape", b(|p| p.gev().shape), num("gev_shape")?)?,
        required("gev_scale", b(|p| p.gev().scale), num("gev_scale")?)?,
        required("gev_location", b(|p| p.gev().location), num("gev_location")?)?,
    )
    .ok_or_else(|| anyhow::anyhow!("placement-law scale must be positive"))?;
    let offset = num("threshold_offset_db")?.unwrap_or(8.0);
    let law = RoughnessLaw::with_offset(tls, gev, offset)
        .map_err(|e| anyhow::anyhow!("threshold offset: {e}"))?;

    let v_main = num("v_main_deg")?.or(b(|p| p.widths().v_main_deg));
    let h_main = num("h_main_deg")?.or(b(|p| p.widths().h_main_deg));
    let widths_override = match (v_main, h_main) {
        (Some(v), Some(h)) => Some(MainLobeSpec {
            v_main_deg: v,
            h_main_deg: h,
        }),
        (None, None) => None,
        _ => bail!("v_main_deg and h_main_deg must be given together"),
    };

    let seeds = match get("seeds") {
        Some(s) => parse_seeds(s)?,
        None => vec![1],
    };

    Ok(Scenario {
        preset: base.map(|p| p.name.to_string()),
        theta_i_deg,
        area_mm2,
        resolution_deg,
        calibration_db,
        ds,
        law,
        widths_override,
        seeds,
    })
}

pub fn load_scenario(path: &Path) -> Result<Scenario> {
    let text =
        fs::read_to_string(path).with_context(|| format!("reading scenario {}", path.display()))?;
    parse_scenario(&text).with_context(|| format!("parsing scenario {}", path.display()))
}
