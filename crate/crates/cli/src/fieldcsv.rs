//! Hemisphere-field CSV: header `theta_deg,phi_deg,value_dbmv`, one row per
//! grid cell, rows sorted by zenith then azimuth. Values are written with
//! Rust's shortest round-trip float formatting, so write → read is
//! bit-exact for finite values.

use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use thzscat_core::dsmodel::ScatterField;
use thzscat_core::sphgeom::Grid;

pub const HEADER: &str = "theta_deg,phi_deg,value_dbmv";

pub fn field_to_string(field: &ScatterField) -> String {
    let mut out = String::with_capacity(field.values_db.len() * 24);
    out.push_str(HEADER);
    out.push('\n');
    for (i, (theta, phi)) in field.grid.iter().enumerate() {
        out.push_str(&format!("{theta},{phi},{}\n", field.values_db[i]));
    }
    out
}

pub fn write_field(field: &ScatterField, path: &Path) -> Result<()> {
    fs::write(path, field_to_string(field))
        .with_context(|| format!("writing field CSV {}", path.display()))
}

/// Parse a field CSV. The grid resolution is inferred from the distinct
/// zenith values; every cell must appear exactly once. `theta_r_deg` and
/// `calibration_db` are not part of the file format and must be supplied by
/// the caller.
pub fn field_from_string(text: &str, theta_r_deg: f64, calibration_db: f64) -> Result<ScatterField> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, h)) if h.trim() == HEADER => {}
        Some((_, h)) => bail!("bad header {h:?}, expected {HEADER:?}"),
        None => bail!("empty field file"),
    }
    let mut rows: Vec<(f64, f64, f64)> = Vec::new();
    for (ln, line) in lines {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let mut parts = line.split(',');
        let mut next = |name: &str| -> Result<f64> {
            parts
                .next()
                .ok_or_else(|| anyhow::anyhow!("line {}: missing {name}", ln + 1))?
                .trim()
                .parse::<f64>()
                .with_context(|| format!("line {}: bad {name}", ln + 1))
        };
        let theta = next("theta_deg")?;
        let phi = next("phi_deg")?;
        let value = next("value_dbmv")?;
        if parts.next().is_some() {
            bail!("line {}: too many columns", ln + 1);
        }
        rows.push((theta, phi, value));
    }
    if rows.is_empty() {
        bail!("field file has no data rows");
    }

    let mut thetas: Vec<f64> = rows.iter().map(|r| r.0).collect();
    thetas.sort_by(f64::total_cmp);
    thetas.dedup();
    if thetas[0] != 0.0 {
        bail!("grid must start at zenith 0, found {}", thetas[0]);
    }
    let res = if thetas.len() > 1 {
        thetas[1] - thetas[0]
    } else {
        bail!("only one zenith row; cannot infer resolution");
    };
    let grid = Grid::new(res).map_err(|e| anyhow::anyhow!("inferred resolution {res}: {e:?}"))?;

    let mut values = vec![f64::NAN; grid.len()];
    let mut seen = vec![false; grid.len()];
    for (theta, phi, value) in rows {
        let i = grid.nearest(theta, phi);
        let (gt, gp) = grid.cell(i);
        if (theta - gt).abs() > 1e-9 || (phi - gp).abs() > 1e-9 {
            bail!("row ({theta}, {phi}) is not a grid cell at resolution {res}");
        }
        if seen[i] {
            bail!("duplicate cell ({theta}, {phi})");
        }
        seen[i] = true;
        values[i] = value;
    }
    let missing = seen.iter().filter(|s| !**s).count();
    if missing > 0 {
        bail!("{missing} grid cells missing from field file");
    }
    Ok(ScatterField {
        grid,
        values_db: values,
        theta_r_deg,
        calibration_db,
    })
}

pub fn read_field(path: &Path, theta_r_deg: f64, calibration_db: f64) -> Result<ScatterField> {
    let text =
        fs::read_to_string(path).with_context(|| format!("reading field CSV {}", path.display()))?;
    field_from_string(&text, theta_r_deg, calibration_db)
}

#[cfg(test)]
mod tests {
    use super::*;
    use thzscat_core::dsmodel::{ds_field, DsParams, GeometryConfig};

    fn sample_field(res: f64) -> ScatterField {
        let p = DsParams::new(0.037, 57.18, 0.028, 103.75).unwrap();
        let g = GeometryConfig::plane_wave(45.0, 2500.0);
        ds_field(Grid::new(res).unwrap(), &p, &g, 35.6)
    }

    #[test]
    fn round_trip_is_bit_exact() {
        let f = sample_field(5.0);
        let text = field_to_string(&f);
        let g = field_from_string(&text, f.theta_r_deg, f.calibration_db).unwrap();
        assert_eq!(f.values_db, g.values_db);
        assert_eq!(f.grid, g.grid);
    }

    #[test]
    fn one_degree_file_has_expected_line_count() {
        let f = sample_field(1.0);
        let text = field_to_string(&f);
        assert_eq!(text.lines().count(), 91 * 360 + 1);
    }

    #[test]
    fn rows_are_sorted_by_theta_then_phi() {
        let f = sample_field(5.0);
        let text = field_to_string(&f);
        let cells: Vec<(f64, f64)> = text
            .lines()
            .skip(1)
            .map(|l| {
                let mut p = l.split(',');
                (
                    p.next().unwrap().parse().unwrap(),
                    p.next().unwrap().parse().unwrap(),
                )
            })
            .collect();
        let mut sorted = cells.clone();
        sorted.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)));
        assert_eq!(cells, sorted);
    }

    #[test]
    fn duplicate_cell_is_rejected() {
        let f = sample_field(5.0);
        let mut text = field_to_string(&f);
        text.push_str("0,0,-12.5\n");
        let err = field_from_string(&text, 45.0, 0.0).unwrap_err();
        assert!(err.to_string().contains("duplicate"), "{err}");
    }

    #[test]
    fn missing_cell_is_rejected() {
        let f = sample_field(5.0);
        let text = field_to_string(&f);
        let truncated: String = text
            .lines()
            .take(text.lines().count() - 1)
            .map(|l| format!("{l}\n"))
            .collect();
        let err = field_from_string(&truncated, 45.0, 0.0).unwrap_err();
        assert!(err.to_string().contains("missing"), "{err}");
    }

    #[test]
    fn malformed_rows_are_rejected_with_line_numbers() {
        let text = format!("{HEADER}\n0,0,1.0\n0,5,not_a_number\n");
        let err = field_from_string(&text, 45.0, 0.0).unwrap_err();
        assert!(format!("{err:#}").contains("line 3"), "{err:#}");

        let text = format!("{HEADER}\n0,0\n");
        assert!(field_from_string(&text, 45.0, 0.0).is_err());

        let text = "wrong,header,here\n0,0,1.0\n".to_string();
        assert!(field_from_string(&text, 45.0, 0.0).is_err());
    }

    #[test]
    fn off_grid_rows_are_rejected() {
        let text = format!("{HEADER}\n0,0,1.0\n0.3,0,2.0\n");
        assert!(field_from_string(&text, 45.0, 0.0).is_err());
    }
}
