//! Batch runners behind the CLI subcommands. Each run writes its outputs
//! plus a manifest (config echo, seed list, code version) so any file can be
//! reproduced from the manifest alone.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use anyhow::{Context, Result};
use rayon::prelude::*;
use thzscat_core::dists::ev::{self, EvMin};
use thzscat_core::dsmodel::{ds_field, ScatterField};
use thzscat_core::fitpipeline::{evaluate_against, full_fit, FitConfig, FitReport};
use thzscat_core::presets::{shape_name, PatchShape};
use thzscat_core::reconstruct::{main_lobe_mask, perturb_field, LobeMask, MainLobeSpec};
use thzscat_core::sphgeom::{Grid, SpecularFrame};

use crate::fieldcsv;
use crate::manifest::Manifest;
use crate::mesh;
use crate::report;
use crate::scenario::Scenario;
use crate::seeds::format_seeds;
use crate::surface::{
    apply_shape_mask, generate_surface, mask_pixel_area, realized_acf_at_lag, realized_rms,
    shape_dimension, surface_to_csv, SurfaceSpec,
};

/// Extreme-value fit of one synthesized field's main-lobe values.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeedEv {
    pub seed: u64,
    pub location_db: f64,
    pub scale_db: f64,
}

/// The seed-independent part of a scenario run: the deterministic lobe and
/// the main-lobe mask. Sweeping seeds against one baseline keeps batch cost
/// linear in the cheap per-seed perturbation instead of recomputing the
/// lobe's normalization table every seed.
pub struct ScenarioBaseline {
    pub field: ScatterField,
    pub mask: LobeMask,
}

pub fn scenario_baseline(sc: &Scenario) -> Result<ScenarioBaseline> {
    let grid = Grid::new(sc.resolution_deg)?;
    let widths = sc.widths()?;
    let field = ds_field(grid, &sc.ds, &sc.geometry(), sc.calibration_db);
    let mask = main_lobe_mask(&field.grid, field.frame(), &widths)?;
    Ok(ScenarioBaseline { field, mask })
}

fn perturb_and_fit(
    base: &ScenarioBaseline,
    sc: &Scenario,
    seed: u64,
) -> Result<(ScatterField, SeedEv)> {
    let synth = perturb_field(&base.field, &base.mask, &sc.law, seed)?;
    let values: Vec<f64> = base
        .mask
        .cells()
        .iter()
        .map(|c| synth.field.values_db[c.cell])
        .collect();
    let fit = ev::fit(&values)?;
    Ok((
        synth.field,
        SeedEv {
            seed,
            location_db: fit.location,
            scale_db: fit.scale,
        },
    ))
}

/// Synthesize one seed of a scenario and fit the main-lobe extreme-value law.
pub fn synthesize_one(sc: &Scenario, seed: u64) -> Result<(ScatterField, SeedEv)> {
    let base = scenario_baseline(sc)?;
    perturb_and_fit(&base, sc, seed)
}

/// Per-seed extreme-value fits for every seed of a scenario, in seed order.
/// No file output; the synthesize runner and the calibration search share it.
pub fn batch_ev(sc: &Scenario) -> Result<Vec<SeedEv>> {
    let base = scenario_baseline(sc)?;
    sc.seeds
        .par_iter()
        .map(|&seed| perturb_and_fit(&base, sc, seed).map(|(_, ev)| ev))
        .collect()
}

fn median(mut xs: Vec<f64>) -> f64 {
    xs.sort_by(|a, b| a.total_cmp(b));
    let n = xs.len();
    if n % 2 == 1 {
        xs[n / 2]
    } else {
        0.5 * (xs[n / 2 - 1] + xs[n / 2])
    }
}

/// Aggregate summary plus the per-seed table, as diffable text.
pub fn ev_aggregate_text(fits: &[SeedEv]) -> String {
    let locations: Vec<f64> = fits.iter().map(|f| f.location_db).collect();
    let scales: Vec<f64> = fits.iter().map(|f| f.scale_db).collect();
    let mean = |v: &[f64]| v.iter().sum::<f64>() / v.len() as f64;
    let mut out = String::from("[summary]\n");
    let _ = writeln!(out, "count={}", fits.len());
    let _ = writeln!(out, "median_location_db={}", median(locations.clone()));
    let _ = writeln!(out, "median_scale_db={}", median(scales.clone()));
    let _ = writeln!(out, "mean_location_db={}", mean(&locations));
    let _ = writeln!(out, "mean_scale_db={}", mean(&scales));
    out.push_str("[per_seed]\n");
    out.push_str("seed,location_db,scale_db\n");
    for f in fits {
        let _ = writeln!(out, "{},{},{}", f.seed, f.location_db, f.scale_db);
    }
    out
}

/// Synthesize every seed of the scenario into `out_dir`: one field CSV per
/// seed, one aggregate extreme-value summary, one manifest. Returns the
/// per-seed fits.
pub fn run_synthesize(sc: &Scenario, out_dir: &Path, command: &str) -> Result<Vec<SeedEv>> {
    fs::create_dir_all(out_dir)
        .with_context(|| format!("creating output directory {}", out_dir.display()))?;
    let base = scenario_baseline(sc)?;
    let results: Vec<(u64, SeedEv)> = sc
        .seeds
        .par_iter()
        .map(|&seed| {
            let (field, fit) = perturb_and_fit(&base, sc, seed)?;
            let name = format!("field_seed{seed}.csv");
            fieldcsv::write_field(&field, &out_dir.join(&name))?;
            Ok((seed, fit))
        })
        .collect::<Result<_>>()?;
    let mut fits: Vec<SeedEv> = results.into_iter().map(|(_, f)| f).collect();
    fits.sort_by_key(|f| f.seed);

    fs::write(out_dir.join("ev_aggregate.txt"), ev_aggregate_text(&fits))
        .with_context(|| "writing ev_aggregate.txt".to_string())?;

    let mut m = Manifest::new(command, sc.to_text());
    m.outputs = sc
        .seeds
        .iter()
        .map(|s| format!("field_seed{s}.csv"))
        .collect();
    m.outputs.push("ev_aggregate.txt".to_string());
    m.save(&out_dir.join("manifest.txt"))?;
    Ok(fits)
}

/// Fit the full inverse pipeline to an ingested field CSV and write the
/// report next to a manifest.
pub fn run_fit(
    field_path: &Path,
    cfg: &FitConfig,
    out_dir: &Path,
    command: &str,
) -> Result<FitReport> {
    let field = fieldcsv::read_field(field_path, cfg.geometry.theta_i_deg, cfg.calibration_db)?;
    let fit = full_fit(&field, cfg)?;
    fs::create_dir_all(out_dir)
        .with_context(|| format!("creating output directory {}", out_dir.display()))?;
    report::write_report(&out_dir.join("report.txt"), &fit)?;

    let mut config = String::new();
    let _ = writeln!(config, "field={}", field_path.display());
    let _ = writeln!(config, "theta_i_deg={}", cfg.geometry.theta_i_deg);
    let _ = writeln!(config, "area_mm2={}", cfg.geometry.area_mm2);
    let _ = writeln!(config, "calibration_db={}", cfg.calibration_db);
    let _ = writeln!(config, "threshold_offset_db={}", cfg.threshold_offset_db);
    let _ = writeln!(config, "psi_window_deg={}", cfg.psi_window_deg);
    let mut m = Manifest::new(command, config);
    m.outputs = vec!["report.txt".to_string()];
    m.save(&out_dir.join("manifest.txt"))?;
    Ok(fit)
}

/// Compare two fields' main-lobe extreme-value statistics.
pub struct EvalOutcome {
    pub ev_a: EvMin,
    pub ev_b: EvMin,
    pub errors_db: (f64, f64),
}

pub fn eval_text(o: &EvalOutcome) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "ev_a_location_db={}", o.ev_a.location);
    let _ = writeln!(out, "ev_a_scale_db={}", o.ev_a.scale);
    let _ = writeln!(out, "ev_b_location_db={}", o.ev_b.location);
    let _ = writeln!(out, "ev_b_scale_db={}", o.ev_b.scale);
    let _ = writeln!(out, "error_mu_db={}", o.errors_db.0);
    let _ = writeln!(out, "error_sigma_db={}", o.errors_db.1);
    out
}

pub fn run_eval(
    field_a: &Path,
    field_b: &Path,
    theta_r_deg: f64,
    calibration_db: f64,
    widths: &MainLobeSpec,
    out_dir: &Path,
    command: &str,
) -> Result<EvalOutcome> {
    let a = fieldcsv::read_field(field_a, theta_r_deg, calibration_db)?;
    let b = fieldcsv::read_field(field_b, theta_r_deg, calibration_db)?;
    let mask = main_lobe_mask(&a.grid, SpecularFrame::new(theta_r_deg), widths)?;
    let (ev_a, ev_b, errors_db) = evaluate_against(&a, &b, &mask)?;
    let outcome = EvalOutcome {
        ev_a,
        ev_b,
        errors_db,
    };
    fs::create_dir_all(out_dir)
        .with_context(|| format!("creating output directory {}", out_dir.display()))?;
    fs::write(out_dir.join("eval.txt"), eval_text(&outcome))
        .with_context(|| "writing eval.txt".to_string())?;

    let mut config = String::new();
    let _ = writeln!(config, "field_a={}", field_a.display());
    let _ = writeln!(config, "field_b={}", field_b.display());
    let _ = writeln!(config, "theta_r_deg={theta_r_deg}");
    let _ = writeln!(config, "calibration_db={calibration_db}");
    let _ = writeln!(config, "v_main_deg={}", widths.v_main_deg);
    let _ = writeln!(config, "h_main_deg={}", widths.h_main_deg);
    let mut m = Manifest::new(command, config);
    m.outputs = vec!["eval.txt".to_string()];
    m.save(&out_dir.join("manifest.txt"))?;
    Ok(outcome)
}

pub fn parse_shape(name: &str) -> Result<PatchShape> {
    match name {
        "triangle" => Ok(PatchShape::Triangle),
        "square" => Ok(PatchShape::Square),
        "hexagon" => Ok(PatchShape::Hexagon),
        "circle" => Ok(PatchShape::Circle),
        other => anyhow::bail!("unknown shape {other:?} (triangle|square|hexagon|circle)"),
    }
}

pub fn surface_spec_text(spec: &SurfaceSpec) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "delta_mm={}", spec.delta_mm);
    let _ = writeln!(out, "corr_len_mm={}", spec.corr_len_mm);
    let _ = writeln!(out, "extent_mm={}", spec.extent_mm);
    let _ = writeln!(out, "step_mm={}", spec.step_mm);
    let _ = writeln!(out, "shape={}", shape_name(spec.shape));
    let _ = writeln!(out, "target_area_mm2={}", spec.target_area_mm2);
    let _ = writeln!(out, "seed={}", spec.seed);
    out
}

/// Generate a masked surface: height-map CSV, mesh, realized statistics, and
/// a manifest.
pub fn run_surface(spec: &SurfaceSpec, out_dir: &Path, command: &str) -> Result<String> {
    let mut surface = generate_surface(spec)?;
    apply_shape_mask(&mut surface, spec)?;
    fs::create_dir_all(out_dir)
        .with_context(|| format!("creating output directory {}", out_dir.display()))?;
    fs::write(out_dir.join("surface.csv"), surface_to_csv(&surface))
        .with_context(|| "writing surface.csv".to_string())?;
    let stats = mesh::export_mesh(&out_dir.join("surface.stl"), &surface)?;

    let lag = (spec.corr_len_mm / spec.step_mm).round() as usize;
    let mut text = String::new();
    let _ = writeln!(text, "retained_points={}", surface.retained_count());
    let _ = writeln!(text, "mesh_vertices={}", stats.vertices);
    let _ = writeln!(text, "mesh_triangles={}", stats.triangles);
    let _ = writeln!(text, "realized_rms_mm={}", realized_rms(&surface));
    let _ = writeln!(
        text,
        "acf_at_corr_len={}",
        realized_acf_at_lag(&surface, lag)
    );
    let _ = writeln!(text, "mask_pixel_area_mm2={}", mask_pixel_area(spec)?);
    let _ = writeln!(
        text,
        "shape_dimension_mm={}",
        shape_dimension(spec.shape, spec.target_area_mm2)
    );
    fs::write(out_dir.join("stats.txt"), &text)
        .with_context(|| "writing stats.txt".to_string())?;

    let mut m = Manifest::new(command, surface_spec_text(spec));
    m.outputs = vec![
        "surface.csv".to_string(),
        "surface.stl".to_string(),
        "stats.txt".to_string(),
    ];
    m.save(&out_dir.join("manifest.txt"))?;
    Ok(text)
}

/// The seed list a manifest echoes for a scenario.
pub fn seed_summary(sc: &Scenario) -> String {
    format_seeds(&sc.seeds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scenario::parse_scenario;

    #[test]
    fn batch_runs_are_deterministic_and_seed_ordered() {
        let sc = parse_scenario("preset=angle45\nresolution_deg=3\nseeds=4,2,9\n").unwrap();
        let a = batch_ev(&sc).unwrap();
        let b = batch_ev(&sc).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 3);
        let seeds: Vec<u64> = a.iter().map(|f| f.seed).collect();
        assert_eq!(seeds, vec![4, 2, 9], "results follow the scenario's order");
        let (_, single) = synthesize_one(&sc, 2).unwrap();
        let from_batch = a.iter().find(|f| f.seed == 2).unwrap();
        assert_eq!(single, *from_batch);
    }

    #[test]
    fn synthesize_writes_fields_aggregate_and_manifest() {
        let dir = tempfile::tempdir().unwrap();
        let sc = parse_scenario("preset=angle45\nresolution_deg=3\nseeds=1..3\n").unwrap();
        let fits = run_synthesize(&sc, dir.path(), "synthesize --preset angle45").unwrap();
        assert_eq!(fits.len(), 3);
        for seed in 1..=3u64 {
            assert!(dir.path().join(format!("field_seed{seed}.csv")).exists());
        }
        let aggregate = fs::read_to_string(dir.path().join("ev_aggregate.txt")).unwrap();
        assert!(aggregate.contains("count=3"));
        assert!(aggregate.contains("median_location_db="));
        let manifest = fs::read_to_string(dir.path().join("manifest.txt")).unwrap();
        assert!(manifest.contains("command=synthesize --preset angle45"));
        assert!(manifest.contains("seeds=1..3"));
        assert!(manifest.contains("field_seed2.csv"));

        // Reread one field and check it matches the in-memory synthesis.
        let (field, _) = synthesize_one(&sc, 2).unwrap();
        let reread = fieldcsv::read_field(
            &dir.path().join("field_seed2.csv"),
            sc.theta_i_deg,
            sc.calibration_db,
        )
        .unwrap();
        assert_eq!(field.values_db, reread.values_db);
    }

    #[test]
    fn median_handles_even_and_odd_counts() {
        assert_eq!(median(vec![3.0, 1.0, 2.0]), 2.0);
        assert_eq!(median(vec![4.0, 1.0, 2.0, 3.0]), 2.5);
    }

    #[test]
    fn surface_run_writes_mesh_and_stats() {
        let dir = tempfile::tempdir().unwrap();
        let spec = SurfaceSpec {
            delta_mm: 0.5,
            corr_len_mm: 8.0,
            extent_mm: 60.0,
            step_mm: 2.0,
            shape: PatchShape::Circle,
            target_area_mm2: 2500.0,
            seed: 3,
        };
        let stats = run_surface(&spec, dir.path(), "surface --shape circle").unwrap();
        assert!(stats.contains("realized_rms_mm="));
        assert!(dir.path().join("surface.stl").exists());
        assert!(dir.path().join("surface.csv").exists());
        assert!(dir.path().join("manifest.txt").exists());
    }

    #[test]
    fn shape_names_round_trip() {
        for shape in [
            PatchShape::Triangle,
            PatchShape::Square,
            PatchShape::Hexagon,
            PatchShape::Circle,
        ] {
            assert_eq!(parse_shape(shape_name(shape)).unwrap(), shape);
        }
        assert!(parse_shape("pentagon").is_err());
    }
}
