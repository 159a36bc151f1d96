//! Run manifests: every batch operation writes one next to its outputs so a
//! run can be reproduced from the manifest alone. Deliberately timestamp-free
//! so reruns are byte-identical.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use anyhow::{Context, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Manifest {
    /// Code version the run was produced with.
    pub version: String,
    /// The subcommand and its arguments, space-joined.
    pub command: String,
    /// Echo of the effective configuration (scenario or spec text).
    pub config: String,
    /// Files the run wrote, relative to the manifest's directory.
    pub outputs: Vec<String>,
}

impl Manifest {
    pub fn new(command: impl Into<String>, config: impl Into<String>) -> Self {
        Manifest {
            version: env!("CARGO_PKG_VERSION").to_string(),
            command: command.into(),
            config: config.into(),
            outputs: Vec::new(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "version={}", self.version);
        let _ = writeln!(out, "command={}", self.command);
        let _ = writeln!(out, "[config]");
        for line in self.config.lines() {
            let _ = writeln!(out, "  {line}");
        }
        let _ = writeln!(out, "[outputs]");
        for f in &self.outputs {
            let _ = writeln!(out, "  {f}");
        }
        out
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        fs::write(path, self.to_text())
            .with_context(|| format!("writing manifest {}", path.display()))
    }
}

pub fn parse_manifest(text: &str) -> Result<Manifest> {
    let mut version = None;
    let mut command = None;
    let mut config = String::new();
    let mut outputs = Vec::new();
    let mut section = "";
    for line in text.lines() {
        match line.trim_end() {
            "[config]" => {
                section = "config";
                continue;
            }
            "[outputs]" => {
                section = "outputs";
                continue;
            }
            _ => {}
        }
        match section {
            "config" => {
                config.push_str(line.strip_prefix("  ").unwrap_or(line));
                config.push('\n');
            }
            "outputs" => {
                let f = line.trim();
                if !f.is_empty() {
                    outputs.push(f.to_string());
                }
            }
            _ => {
                if let Some(v) = line.strip_prefix("version=") {
                    version = Some(v.to_string());
                } else if let Some(c) = line.strip_prefix("command=") {
                    command = Some(c.to_string());
                }
            }
        }
    }
    Ok(Manifest {
        version: version.ok_or_else(|| anyhow::anyhow!("manifest missing version"))?,
        command: command.ok_or_else(|| anyhow::anyhow!("manifest missing command"))?,
        config,
        outputs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips_and_is_timestamp_free() {
        let mut m = Manifest::new("synthesize --preset angle45", "preset=angle45\nseeds=1..3\n");
        m.outputs = vec!["field_seed1.csv".into(), "manifest.txt".into()];
        let a = m.to_text();
        let b = m.to_text();
        assert_eq!(a, b, "rendering must be deterministic");
        let back = parse_manifest(&a).unwrap();
        assert_eq!(back, m);
        assert_eq!(back.version, env!("CARGO_PKG_VERSION"));
    }

    #[test]
    fn config_echo_preserves_lines() {
        let m = Manifest::new("fit", "a=1\nb=2\n");
        let back = parse_manifest(&m.to_text()).unwrap();
        assert_eq!(back.config, "a=1\nb=2\n");
    }
}
