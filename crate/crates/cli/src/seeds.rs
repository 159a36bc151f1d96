//! Seed-list syntax: either an inclusive range `a..b` or a comma list
//! `a,b,c`. A single number is a one-element list.

use anyhow::{bail, Context, Result};

pub fn parse_seeds(text: &str) -> Result<Vec<u64>> {
    let t = text.trim();
    if t.is_empty() {
        bail!("empty seed list");
    }
    if let Some((a, b)) = t.split_once("..") {
        let lo: u64 = a.trim().parse().with_context(|| format!("bad seed range start {a:?}"))?;
        let hi: u64 = b.trim().parse().with_context(|| format!("bad seed range end {b:?}"))?;
        if hi < lo {
            bail!("seed range {t:?} is empty (end below start)");
        }
        return Ok((lo..=hi).collect());
    }
    t.split(',')
        .map(|s| {
            s.trim()
                .parse::<u64>()
                .with_context(|| format!("bad seed {s:?}"))
        })
        .collect()
}

/// Canonical text for a seed list: `a..b` when the list is a contiguous
/// ascending range of length > 1, otherwise a comma list.
pub fn format_seeds(seeds: &[u64]) -> String {
    if seeds.len() > 1 {
        let contiguous = seeds.windows(2).all(|w| w[1] == w[0] + 1);
        if contiguous {
            return format!("{}..{}", seeds[0], seeds[seeds.len() - 1]);
        }
    }
    seeds
        .iter()
        .map(|s| s.to_string())
        .collect::<Vec<_>>()
        .join(",")
}
