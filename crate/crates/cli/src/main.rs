use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Result};
use clap::{Parser, Subcommand};
use thzscat::core::dsmodel::GeometryConfig;
use thzscat::core::fitpipeline::FitConfig;
use thzscat::core::presets::{self, DEFAULT_CALIBRATION_DB, PATCH_AREA_MM2};
use thzscat::core::reconstruct::MainLobeSpec;
use thzscat::runner;
use thzscat::scenario::{load_scenario, Scenario};
use thzscat::seeds::parse_seeds;
use thzscat::surface::SurfaceSpec;

/// Synthesize terahertz rough-surface scattering fields, fit the stochastic
/// model to external full-wave data, and generate solver-ready surfaces.
#[derive(Parser)]
#[command(name = "thzscat", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the built-in parameter presets
    Presets {
        /// Print one preset instead of the whole catalog
        #[arg(long)]
        name: Option<String>,
    },
    /// Generate field CSVs for every seed of a scenario
    Synthesize {
        /// Preset name to start from (see `presets`)
        #[arg(long)]
        preset: Option<String>,
        /// Scenario file (key=value); overrides are applied on top
        #[arg(long)]
        config: Option<PathBuf>,
        /// Seed list: `a..b` inclusive or comma-separated
        #[arg(long)]
        seeds: Option<String>,
        /// Grid resolution, degrees
        #[arg(long)]
        resolution: Option<f64>,
        /// Calibration constant added to every dB value
        #[arg(long)]
        calibration_db: Option<f64>,
        /// Output directory
        #[arg(long)]
        out: PathBuf,
    },
    /// Fit the scattering model to an ingested field CSV
    Fit {
        /// Field CSV (theta_deg,phi_deg,value_dbmv)
        #[arg(long)]
        field: PathBuf,
        /// Incidence zenith angle of the measurement, degrees
        #[arg(long)]
        theta_i: f64,
        /// Illuminated patch area, mm²
        #[arg(long, default_value_t = PATCH_AREA_MM2)]
        area: f64,
        #[arg(long, default_value_t = DEFAULT_CALIBRATION_DB)]
        calibration_db: f64,
        /// Output directory
        #[arg(long)]
        out: PathBuf,
    },
    /// Compare the main-lobe statistics of two fields
    Eval {
        #[arg(long)]
        field_a: PathBuf,
        #[arg(long)]
        field_b: PathBuf,
        /// Incidence zenith angle of both fields, degrees
        #[arg(long)]
        theta_i: f64,
        /// Take main-lobe widths from this preset
        #[arg(long)]
        preset: Option<String>,
        /// Vertical main-lobe width, degrees (with --h-main)
        #[arg(long)]
        v_main: Option<f64>,
        /// Horizontal main-lobe width, degrees (with --v-main)
        #[arg(long)]
        h_main: Option<f64>,
        #[arg(long, default_value_t = DEFAULT_CALIBRATION_DB)]
        calibration_db: f64,
        /// Output directory
        #[arg(long)]
        out: PathBuf,
    },
    /// Generate a Gaussian-correlated rough surface with a shape mask
    Surface {
        /// triangle | square | hexagon | circle
        #[arg(long)]
        shape: String,
        /// RMS height, mm
        #[arg(long, default_value_t = 0.5)]
        delta: f64,
        /// Correlation length, mm
        #[arg(long, default_value_t = 8.0)]
        corr_len: f64,
        /// Lattice footprint side, mm
        #[arg(long, default_value_t = 50.0)]
        extent: f64,
        /// Lattice spacing, mm
        #[arg(long, default_value_t = 0.25)]
        step: f64,
        /// Shape area, mm²
        #[arg(long, default_value_t = 2500.0)]
        target_area: f64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Output directory
        #[arg(long)]
        out: PathBuf,
    },
}

fn command_line() -> String {
    std::env::args().skip(1).collect::<Vec<_>>().join(" ")
}

fn scenario_from_flags(
    preset: Option<String>,
    config: Option<PathBuf>,
    seeds: Option<String>,
    resolution: Option<f64>,
    calibration_db: Option<f64>,
) -> Result<Scenario> {
    let mut sc = match (&preset, &config) {
        (Some(_), Some(_)) => bail!("--preset and --config are mutually exclusive"),
        (Some(name), None) => {
            let p = presets::find(name)
                .ok_or_else(|| anyhow::anyhow!("unknown preset {name:?}"))?;
            Scenario::from_preset(p)
        }
        (None, Some(path)) => load_scenario(path)?,
        (None, None) => bail!("one of --preset or --config is required"),
    };
    if let Some(s) = seeds {
        sc.seeds = parse_seeds(&s)?;
    }
    if let Some(r) = resolution {
        sc.resolution_deg = r;
    }
    if let Some(c) = calibration_db {
        sc.calibration_db = c;
    }
    Ok(sc)
}

fn run() -> Result<()> {
    let cli = Cli::parse();
    let command = command_line();
    match cli.command {
        Command::Presets { name } => match name {
            Some(n) => {
                let p = presets::find(&n)
                    .ok_or_else(|| anyhow::anyhow!("unknown preset {n:?}"))?;
                print!("{}", p.dump());
            }
            None => print!("{}", presets::dump_catalog()),
        },
        Command::Synthesize {
            preset,
            config,
            seeds,
            resolution,
            calibration_db,
            out,
        } => {
            let sc = scenario_from_flags(preset, config, seeds, resolution, calibration_db)?;
            let fits = runner::run_synthesize(&sc, &out, &command)?;
            print!("{}", runner::ev_aggregate_text(&fits));
        }
        Command::Fit {
            field,
            theta_i,
            area,
            calibration_db,
            out,
        } => {
            let cfg = FitConfig::new(GeometryConfig::plane_wave(theta_i, area), calibration_db);
            let fit = runner::run_fit(&field, &cfg, &out, &command)?;
            print!("{}", thzscat::report::report_to_text(&fit));
        }
        Command::Eval {
            field_a,
            field_b,
            theta_i,
            preset,
            v_main,
            h_main,
            calibration_db,
            out,
        } => {
            let widths = match (preset, v_main, h_main) {
                (Some(name), None, None) => presets::find(&name)
                    .ok_or_else(|| anyhow::anyhow!("unknown preset {name:?}"))?
                    .widths(),
                (None, Some(v), Some(h)) => MainLobeSpec {
                    v_main_deg: v,
                    h_main_deg: h,
                },
                _ => bail!("give either --preset or both --v-main and --h-main"),
            };
            let outcome = runner::run_eval(
                &field_a,
                &field_b,
                theta_i,
                calibration_db,
                &widths,
                &out,
                &command,
            )?;
            print!("{}", runner::eval_text(&outcome));
        }
        Command::Surface {
            shape,
            delta,
            corr_len,
            extent,
            step,
            target_area,
            seed,
            out,
        } => {
            let spec = SurfaceSpec {
                delta_mm: delta,
                corr_len_mm: corr_len,
                extent_mm: extent,
                step_mm: step,
                shape: runner::parse_shape(&shape)?,
                target_area_mm2: target_area,
                seed,
            };
            let stats = runner::run_surface(&spec, &out, &command)?;
            print!("{stats}");
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
