//! Fit-report serialization: flat `key=value` text mirroring
//! [`thzscat_core::fitpipeline::FitReport`], plus the conversion that turns a
//! report back into a synthesis scenario for closed-loop checks.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use thzscat_core::dists::ev::EvMin;
use thzscat_core::dists::gev::Gev;
use thzscat_core::dists::tls::Tls;
use thzscat_core::dsmodel::DsParams;
use thzscat_core::fitpipeline::{FitConfig, FitReport};
use thzscat_core::reconstruct::{MainLobeSpec, RoughnessLaw};

use crate::scenario::Scenario;

fn kv(out: &mut String, k: &str, v: f64) {
    let _ = writeln!(out, "{k}={v}");
}

pub fn report_to_text(r: &FitReport) -> String {
    let mut out = String::new();
    kv(&mut out, "alpha_v", r.ds.alpha_v);
    kv(&mut out, "s_v", r.ds.s_v);
    kv(&mut out, "alpha_h", r.ds.alpha_h);
    kv(&mut out, "s_h", r.ds.s_h);
    kv(&mut out, "v_main_deg", r.widths.v_main_deg);
    kv(&mut out, "h_main_deg", r.widths.h_main_deg);
    kv(&mut out, "tls_location", r.tls.location);
    kv(&mut out, "tls_scale", r.tls.scale);
    kv(&mut out, "tls_dof", r.tls.dof);
    if let Some(g) = &r.gev {
        kv(&mut out, "gev_shape", g.shape);
        kv(&mut out, "gev_scale", g.scale);
        kv(&mut out, "gev_location", g.location);
    }
    let psi: Vec<String> = r.psi_high_deg.iter().map(|v| v.to_string()).collect();
    let _ = writeln!(out, "psi_high_deg={}", psi.join(","));
    kv(&mut out, "ev_ingested_location", r.ev_ingested.location);
    kv(&mut out, "ev_ingested_scale", r.ev_ingested.scale);
    kv(&mut out, "ev_baseline_location", r.ev_baseline.location);
    kv(&mut out, "ev_baseline_scale", r.ev_baseline.scale);
    kv(&mut out, "error_mu_db", r.errors_db.0);
    kv(&mut out, "error_sigma_db", r.errors_db.1);
    let _ = writeln!(out, "ks_pass={}", r.ks_pass);
    out
}

pub fn report_from_text(text: &str) -> Result<FitReport> {
    let mut kv: Vec<(String, String)> = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((k, v)) = line.split_once('=') else {
            bail!("line {}: expected key=value, got {line:?}", ln + 1);
        };
        kv.push((k.trim().to_string(), v.trim().to_string()));
    }
    let get = |key: &str| kv.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str());
    let num = |key: &str| -> Result<f64> {
        let v = get(key).ok_or_else(|| anyhow::anyhow!("missing key {key:?}"))?;
        v.parse::<f64>()
            .with_context(|| format!("bad number for {key}: {v:?}"))
    };

    let ds = DsParams::new(num("s_v")?, num("alpha_v")?, num("s_h")?, num("alpha_h")?)
        .map_err(|e| anyhow::anyhow!("lobe parameters: {e}"))?;
    let widths = MainLobeSpec {
        v_main_deg: num("v_main_deg")?,
        h_main_deg: num("h_main_deg")?,
    };
    let tls = Tls::new(num("tls_location")?, num("tls_scale")?, num("tls_dof")?)
        .ok_or_else(|| anyhow::anyhow!("amplitude-law scale and dof must be positive"))?;
    let gev = match get("gev_shape") {
        Some(_) => Some(
            Gev::new(num("gev_shape")?, num("gev_scale")?, num("gev_location")?)
                .ok_or_else(|| anyhow::anyhow!("placement-law scale must be positive"))?,
        ),
        None => None,
    };
    let psi_raw = get("psi_high_deg").ok_or_else(|| anyhow::anyhow!("missing key \"psi_high_deg\""))?;
    let mut psi_high_deg = Vec::new();
    for part in psi_raw.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        psi_high_deg.push(
            part.parse::<f64>()
                .with_context(|| format!("bad deviation angle {part:?}"))?,
        );
    }
    let ev = |prefix: &str| -> Result<EvMin> {
        EvMin::new(
            num(&format!("{prefix}_location"))?,
            num(&format!("{prefix}_scale"))?,
        )
        .ok_or_else(|| anyhow::anyhow!("{prefix} scale must be positive"))
    };
    let ks_raw = get("ks_pass").ok_or_else(|| anyhow::anyhow!("missing key \"ks_pass\""))?;
    let ks_pass = match ks_raw {
        "true" => true,
        "false" => false,
        other => bail!("ks_pass must be true or false, got {other:?}"),
    };

    Ok(FitReport {
        ds,
        widths,
        tls,
        gev,
        psi_high_deg,
        ev_ingested: ev("ev_ingested")?,
        ev_baseline: ev("ev_baseline")?,
        errors_db: (num("error_mu_db")?, num("error_sigma_db")?),
        ks_pass,
    })
}

pub fn write_report(path: &Path, r: &FitReport) -> Result<()> {
    fs::write(path, report_to_text(r)).with_context(|| format!("writing report {}", path.display()))
}

pub fn read_report(path: &Path) -> Result<FitReport> {
    let text =
        fs::read_to_string(path).with_context(|| format!("reading report {}", path.display()))?;
    report_from_text(&text).with_context(|| format!("parsing report {}", path.display()))
}

/// Turn a fit report back into a synthesis scenario so the recovered model
/// can regenerate fields. Fails when the report carries no placement law.
pub fn report_to_scenario(
    r: &FitReport,
    cfg: &FitConfig,
    resolution_deg: f64,
    seeds: &[u64],
) -> Result<Scenario> {
    let Some(gev) = r.gev else {
        bail!("report has no placement law; pool strong-component angles across seeds first");
    };
    let law = RoughnessLaw::with_offset(r.tls, gev, cfg.threshold_offset_db)
        .map_err(|e| anyhow::anyhow!("threshold offset: {e}"))?;
    Ok(Scenario {
        preset: None,
        theta_i_deg: cfg.geometry.theta_i_deg,
        area_mm2: cfg.geometry.area_mm2,
        resolution_deg,
        calibration_db: cfg.calibration_db,
        ds: r.ds,
        law,
        widths_override: Some(r.widths),
        seeds: seeds.to_vec(),
    })
}
