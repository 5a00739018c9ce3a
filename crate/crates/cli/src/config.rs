//! Run settings: defaults, a `key = value` file, and command-line overrides, applied in
//! that order.

use std::path::{Path, PathBuf};
use std::str::FromStr;

use alm_core::alm::{Diffusion, Extraction};

const MAX_GRID: usize = 4096;
const MAX_RADIUS: usize = 256;
const MAX_THICKEN_PASSES: usize = 256;

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub nx: usize,
    pub ny: usize,
    /// IDS radius in cells.
    pub radius: usize,
    /// IDS radius in input units; overrides `radius` per plane when set.
    pub spread: Option<f64>,
    pub height: u64,
    pub diffusion: Diffusion,
    pub extraction: Extraction,
    pub tau: u64,
    pub thicken_passes: usize,
    pub gap_threshold: Option<usize>,
    pub seed: u64,
    pub octet: Option<PathBuf>,
    pub out_dir: PathBuf,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            nx: 64,
            ny: 64,
            radius: 1,
            spread: None,
            height: 1,
            diffusion: Diffusion::Ids,
            extraction: Extraction::Cog,
            tau: 1,
            thicken_passes: 1,
            gap_threshold: None,
            seed: 0,
            octet: None,
            out_dir: PathBuf::from("out"),
        }
    }
}

/// Values given on the command line; `None` leaves the file or default value in place.
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub nx: Option<usize>,
    pub ny: Option<usize>,
    pub radius: Option<usize>,
    pub spread: Option<f64>,
    pub height: Option<u64>,
    pub diffusion: Option<Diffusion>,
    pub extraction: Option<Extraction>,
    pub tau: Option<u64>,
    pub thicken_passes: Option<usize>,
    pub gap_threshold: Option<usize>,
    pub seed: Option<u64>,
    pub octet: Option<PathBuf>,
    pub out_dir: Option<PathBuf>,
}

pub fn parse_diffusion(s: &str) -> Result<Diffusion, String> {
    match s {
        "ids" => Ok(Diffusion::Ids),
        "thicken" => Ok(Diffusion::Thicken),
        other => Err(format!(
            "unknown diffusion mode {other:?} (expected ids or thicken)"
        )),
    }
}

pub fn parse_extraction(s: &str) -> Result<Extraction, String> {
    match s {
        "cog" => Ok(Extraction::Cog),
        "thin" => Ok(Extraction::Thin),
        other => Err(format!(
            "unknown extraction mode {other:?} (expected cog or thin)"
        )),
    }
}

fn number<T: FromStr>(key: &str, value: &str) -> Result<T, String> {
    value
        .parse()
        .map_err(|_| format!("{key}: cannot parse {value:?}"))
}

impl RunConfig {
    /// Applies `key = value` lines. Blank lines and `#` comments are skipped; unknown keys
    /// are errors.
    pub fn apply_text(&mut self, text: &str) -> Result<(), String> {
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| format!("line {}: expected key = value", i + 1))?;
            self.set(key.trim(), value.trim())
                .map_err(|e| format!("line {}: {e}", i + 1))?;
        }
        Ok(())
    }

    fn set(&mut self, key: &str, value: &str) -> Result<(), String> {
        match key {
            "nx" => self.nx = number(key, value)?,
            "ny" => self.ny = number(key, value)?,
            "radius" => self.radius = number(key, value)?,
            "spread" => self.spread = Some(number(key, value)?),
            "height" => self.height = number(key, value)?,
            "diffusion" => self.diffusion = parse_diffusion(value)?,
            "extraction" => self.extraction = parse_extraction(value)?,
            "tau" => self.tau = number(key, value)?,
            "thicken_passes" => self.thicken_passes = number(key, value)?,
            "gap_threshold" => self.gap_threshold = Some(number(key, value)?),
            "seed" => self.seed = number(key, value)?,
            "octet" => self.octet = Some(PathBuf::from(value)),
            "out_dir" => self.out_dir = PathBuf::from(value),
            other => return Err(format!("unknown key {other:?}")),
        }
        Ok(())
    }

    pub fn apply_overrides(&mut self, o: &Overrides) {
        macro_rules! take {
            ($($field:ident),*) => {
                $(if let Some(v) = &o.$field {
                    self.$field = v.clone();
                })*
            };
        }
        take!(
            nx,
            ny,
            radius,
            height,
            diffusion,
            extraction,
            tau,
            thicken_passes,
            seed,
            out_dir
        );
        if o.spread.is_some() {
            self.spread = o.spread;
        }
        if o.gap_threshold.is_some() {
            self.gap_threshold = o.gap_threshold;
        }
        if o.octet.is_some() {
            self.octet = o.octet.clone();
        }
    }

    /// Defaults, then the file at `path` if any, then `overrides`.
    pub fn resolve(path: Option<&Path>, overrides: &Overrides) -> Result<RunConfig, String> {
        let mut config = RunConfig::default();
        if let Some(path) = path {
            let text =
                std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
            config
                .apply_text(&text)
                .map_err(|e| format!("{}: {e}", path.display()))?;
        }
        config.apply_overrides(overrides);
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<(), String> {
        if !(2..=MAX_GRID).contains(&self.nx) || !(2..=MAX_GRID).contains(&self.ny) {
            return Err(format!(
                "grid must be between 2 and {MAX_GRID} cells per side"
            ));
        }
        if self.radius > MAX_RADIUS {
            return Err(format!("radius must be at most {MAX_RADIUS}"));
        }
        if let Some(s) = self.spread {
            if !(s >= 0.0 && s.is_finite()) {
                return Err(format!("spread must be a non-negative number, got {s}"));
            }
        }
        if self.height == 0 {
            return Err("height must be at least 1".into());
        }
        if self.tau == 0 {
            return Err("tau must be at least 1".into());
        }
        if self.thicken_passes > MAX_THICKEN_PASSES {
            return Err(format!(
                "thicken_passes must be at most {MAX_THICKEN_PASSES}"
            ));
        }
        if self.gap_threshold == Some(0) {
            return Err("gap_threshold must be at least 1".into());
        }
        Ok(())
    }
}
