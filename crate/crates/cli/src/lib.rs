//! File formats, scenario configuration, batch runners, and rough-surface
//! mesh export around the `thzscat-core` synthesis/fitting library.

pub mod fieldcsv;
pub mod manifest;
pub mod mesh;
pub mod report;
pub mod runner;
pub mod scenario;
pub mod seeds;
pub mod surface;

pub use thzscat_core as core;
