//! Stochastic synthesis and parameter fitting for terahertz scattering
//! patterns on rough surfaces.
//!
//! The model represents the scattered field over the upper hemisphere as a
//! directive lobe around the specular direction plus a stochastic roughness
//! perturbation. [`dsmodel`] evaluates the deterministic lobe, [`reconstruct`]
//! plants perturbation samples drawn from heavy-tailed distributions onto the
//! main-lobe cells, and [`fitpipeline`] runs the inverse direction: given a
//! simulated or measured pattern, recover the lobe and perturbation
//! parameters. [`presets`] carries published parameter sets for five incidence
//! angles and four surface outlines.
//!
//! The crate is `no_std`-compatible (`alloc` required); file IO, surface
//! generation and the command line layer live in the companion `thzscat`
//! crate.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod dists;
pub mod dsmodel;
pub mod fitpipeline;
pub mod presets;
pub mod reconstruct;
pub mod sphgeom;

/// Free-space wave impedance in ohms, used to convert between field
/// magnitude and power density.
pub const ETA: f64 = 120.0 * core::f64::consts::PI;
