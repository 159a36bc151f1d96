//! ASCII triangle-mesh (STL) export of masked height maps, for hand-off to
//! external full-wave solvers, plus a parser for round-trip verification.
//!
//! Each lattice cell splits into two upward-facing triangles; a triangle is
//! kept only when all three of its lattice vertices survive the shape mask,
//! so the mesh is a watertight in-plane triangulation of the retained region.
//! Coordinates are written in the shortest decimal form that parses back to
//! the identical float.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};

use crate::surface::Surface;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MeshStats {
    /// Distinct lattice vertices referenced by at least one facet.
    pub vertices: usize,
    pub triangles: usize,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Facet {
    pub normal: [f64; 3],
    pub vertices: [[f64; 3]; 3],
}

fn facet_for(v0: [f64; 3], v1: [f64; 3], v2: [f64; 3]) -> Facet {
    let a = [v1[0] - v0[0], v1[1] - v0[1], v1[2] - v0[2]];
    let b = [v2[0] - v0[0], v2[1] - v0[1], v2[2] - v0[2]];
    let cross = [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ];
    let len = (cross[0] * cross[0] + cross[1] * cross[1] + cross[2] * cross[2]).sqrt();
    Facet {
        normal: [cross[0] / len, cross[1] / len, cross[2] / len],
        vertices: [v0, v1, v2],
    }
}

/// Triangulate the retained lattice region, counter-clockwise seen from +z.
pub fn triangulate(surface: &Surface) -> Vec<Facet> {
    let n = surface.n;
    let at = |i: usize, j: usize| -> [f64; 3] {
        [
            i as f64 * surface.step_mm,
            j as f64 * surface.step_mm,
            surface.heights_mm[i * n + j],
        ]
    };
    let kept = |i: usize, j: usize| surface.retained[i * n + j];
    let mut facets = Vec::new();
    for i in 0..n.saturating_sub(1) {
        for j in 0..n - 1 {
            if kept(i, j) && kept(i + 1, j) && kept(i + 1, j + 1) {
                facets.push(facet_for(at(i, j), at(i + 1, j), at(i + 1, j + 1)));
            }
            if kept(i, j) && kept(i + 1, j + 1) && kept(i, j + 1) {
                facets.push(facet_for(at(i, j), at(i + 1, j + 1), at(i, j + 1)));
            }
        }
    }
    facets
}

fn vertex_key(v: &[f64; 3]) -> (u64, u64, u64) {
    (v[0].to_bits(), v[1].to_bits(), v[2].to_bits())
}

pub fn mesh_to_string(surface: &Surface) -> Result<(String, MeshStats)> {
    let facets = triangulate(surface);
    if facets.is_empty() {
        bail!("no fully retained lattice cell; nothing to mesh");
    }
    let mut unique = HashSet::new();
    let mut out = String::from("solid surface\n");
    for f in &facets {
        let _ = writeln!(
            out,
            "  facet normal {} {} {}",
            f.normal[0], f.normal[1], f.normal[2]
        );
        out.push_str("    outer loop\n");
        for v in &f.vertices {
            let _ = writeln!(out, "      vertex {} {} {}", v[0], v[1], v[2]);
            unique.insert(vertex_key(v));
        }
        out.push_str("    endloop\n");
        out.push_str("  endfacet\n");
    }
    out.push_str("endsolid surface\n");
    Ok((
        out,
        MeshStats {
            vertices: unique.len(),
            triangles: facets.len(),
        },
    ))
}

pub fn export_mesh(path: &Path, surface: &Surface) -> Result<MeshStats> {
    let (text, stats) = mesh_to_string(surface)?;
    fs::write(path, text).with_context(|| format!("writing mesh {}", path.display()))?;
    Ok(stats)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ParsedMesh {
    pub facets: Vec<Facet>,
}

impl ParsedMesh {
    pub fn unique_vertex_count(&self) -> usize {
        let mut unique = HashSet::new();
        for f in &self.facets {
            for v in &f.vertices {
                unique.insert(vertex_key(v));
            }
        }
        unique.len()
    }
}

fn three_floats(parts: &[&str], ln: usize) -> Result<[f64; 3]> {
    if parts.len() != 3 {
        bail!("line {ln}: expected three coordinates, got {}", parts.len());
    }
    let mut out = [0.0; 3];
    for (slot, raw) in out.iter_mut().zip(parts) {
        *slot = raw
            .parse::<f64>()
            .with_context(|| format!("line {ln}: bad coordinate {raw:?}"))?;
    }
    Ok(out)
}

pub fn parse_mesh(text: &str) -> Result<ParsedMesh> {
    let mut lines = text.lines().enumerate();
    let Some((_, first)) = lines.next() else {
        bail!("empty mesh file");
    };
    if !first.trim_start().starts_with("solid") {
        bail!("line 1: expected a solid header");
    }
    let mut facets = Vec::new();
    loop {
        let Some((ln0, line)) = lines.next() else {
            bail!("missing endsolid footer");
        };
        let line = line.trim();
        if line.starts_with("endsolid") {
            break;
        }
        let Some(rest) = line.strip_prefix("facet normal ") else {
            bail!("line {}: expected a facet, got {line:?}", ln0 + 1);
        };
        let normal = three_floats(&rest.split_whitespace().collect::<Vec<_>>(), ln0 + 1)?;
        let expect = |step: Option<(usize, &str)>, want: &str| -> Result<()> {
            match step {
                Some((_, l)) if l.trim() == want => Ok(()),
                Some((ln, l)) => bail!("line {}: expected {want:?}, got {l:?}", ln + 1),
                None => bail!("truncated facet block"),
            }
        };
        expect(lines.next(), "outer loop")?;
        let mut vertices = [[0.0; 3]; 3];
        for slot in &mut vertices {
            let Some((ln, l)) = lines.next() else {
                bail!("truncated facet block");
            };
            let Some(rest) = l.trim().strip_prefix("vertex ") else {
                bail!("line {}: expected a vertex, got {l:?}", ln + 1);
            };
            *slot = three_floats(&rest.split_whitespace().collect::<Vec<_>>(), ln + 1)?;
        }
        expect(lines.next(), "endloop")?;
        expect(lines.next(), "endfacet")?;
        facets.push(Facet { normal, vertices });
    }
    Ok(ParsedMesh { facets })
}
