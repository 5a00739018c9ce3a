use crate::alm::dataset::Dataset;
use crate::alm::path::{
    cog_extract, path_confidence, runs_to_columns, thickened_skeleton, Delegate, MorphParams,
    NarrowPath,
};
use crate::alm::plane::{ids_spread, project, DataPlane};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Diffusion {
    /// Ink Drop Spread pyramids.
    Ids,
    /// Binarize and thicken with the thickening octet.
    Thicken,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Extraction {
    /// Center of gravity, one delegate per column.
    Cog,
    /// Thin to a skeleton, one delegate per vertical run.
    Thin,
}

#[derive(Debug, Clone)]
pub struct FitConfig {
    pub nx: usize,
    pub ny: usize,
    /// IDS radius in cells.
    pub radius: usize,
    /// IDS pyramid height per sample.
    pub height: u64,
    pub diffusion: Diffusion,
    pub extraction: Extraction,
    pub morph: MorphParams,
}

impl Default for FitConfig {
    fn default() -> Self {
        FitConfig {
            nx: 64,
            ny: 64,
            radius: 1,
            height: 1,
            diffusion: Diffusion::Ids,
            extraction: Extraction::Cog,
            morph: MorphParams::default(),
        }
    }
}

/// Intermediate planes and the path for one input dimension.
#[derive(Debug, Clone)]
pub struct SisoFit {
    pub projected: DataPlane,
    pub diffused: DataPlane,
    pub path: NarrowPath,
}

/// Runs diffusion and extraction on one projected plane.
pub fn fit_plane(projected: DataPlane, config: &FitConfig) -> Result<SisoFit> {
    let morph = &config.morph;
    let (diffused, path) = match (config.diffusion, config.extraction) {
        (Diffusion::Ids, Extraction::Cog) => {
            let diffused = ids_spread(&projected, config.radius, config.height);
            let path = cog_extract(&diffused);
            (diffused, path)
        }
        (Diffusion::Thicken, Extraction::Thin) => {
            let (thickened, skeleton) = thickened_skeleton(&projected, morph)?;
            let columns = runs_to_columns(&projected, &skeleton, morph.gap());
            let path = with_confidence(columns, &projected);
            (projected.with_binary(&thickened), path)
        }
        (Diffusion::Ids, Extraction::Thin) => {
            let diffused = ids_spread(&projected, config.radius, config.height);
            let zero_passes = MorphParams {
                thicken_passes: 0,
                ..morph.clone()
            };
            let (_, skeleton) = thickened_skeleton(&diffused, &zero_passes)?;
            let columns = runs_to_columns(&diffused, &skeleton, morph.gap());
            (diffused, with_confidence(columns, &projected))
        }
        (Diffusion::Thicken, Extraction::Cog) => {
            let (thickened, _) = thickened_skeleton(&projected, morph)?;
            let diffused = projected.with_binary(&thickened);
            let mut path = cog_extract(&diffused);
            path.set_confidence(path_confidence(&projected, path.columns()));
            (diffused, path)
        }
    };
    Ok(SisoFit {
        projected,
        diffused,
        path,
    })
}

fn with_confidence(columns: Vec<Vec<Delegate>>, projected: &DataPlane) -> NarrowPath {
    let confidence = path_confidence(projected, &columns);
    NarrowPath::new(
        columns,
        projected.x_range(),
        projected.y_range(),
        confidence,
    )
}

/// One narrow path per input dimension, recombined by confidence-weighted mean.
#[derive(Debug, Clone)]
pub struct MisoModel {
    paths: Vec<NarrowPath>,
}

impl MisoModel {
    pub fn from_paths(paths: Vec<NarrowPath>) -> Result<MisoModel> {
        if paths.is_empty() {
            return Err(Error::InvalidArgument(
                "model needs at least one path".into(),
            ));
        }
        Ok(MisoModel { paths })
    }

    pub fn paths(&self) -> &[NarrowPath] {
        &self.paths
    }

    pub fn confidences(&self) -> Vec<f64> {
        self.paths.iter().map(NarrowPath::confidence).collect()
    }

    pub fn input_dim(&self) -> usize {
        self.paths.len()
    }

    /// Confidence-weighted mean of each path evaluated at its own input. Inputs outside a
    /// path's range are clamped; empty columns fall back to the nearest non-empty one.
    /// Where a column holds several branches, the one nearest the running estimate of the
    /// dimensions evaluated so far is used (the first branch when there is none yet).
    pub fn predict(&self, x: &[f64]) -> Result<f64> {
        if x.len() != self.paths.len() {
            return Err(Error::InvalidArgument(format!(
                "expected {} inputs, got {}",
                self.paths.len(),
                x.len()
            )));
        }
        let mut weighted = 0.0;
        let mut total_conf = 0.0;
        let mut plain = Vec::new();
        for (path, &xi) in self.paths.iter().zip(x) {
            let Some(col) = path.nearest_nonempty(path.x_range().bin(xi, path.nx())) else {
                continue;
            };
            let prior = if total_conf > 0.0 {
                Some(weighted / total_conf)
            } else {
                plain.last().copied()
            };
            let value = pick_branch(&path.columns()[col], prior);
            plain.push(value);
            weighted += path.confidence() * value;
            total_conf += path.confidence();
        }
        if plain.is_empty() {
            return Err(Error::InvalidArgument("model has no delegates".into()));
        }
        if total_conf > 0.0 {
            Ok(weighted / total_conf)
        } else {
            Ok(plain.iter().sum::<f64>() / plain.len() as f64)
        }
    }
}

fn pick_branch(delegates: &[Delegate], prior: Option<f64>) -> f64 {
    match prior {
        None => delegates[0].y,
        Some(p) => {
            delegates
                .iter()
                .min_by(|a, b| (a.y - p).abs().total_cmp(&(b.y - p).abs()))
                .expect("non-empty column")
                .y
        }
    }
}

/// Projects every input dimension, diffuses, and extracts a narrow path with confidence.
pub fn fit(dataset: &Dataset, config: &FitConfig) -> Result<MisoModel> {
    if dataset.is_empty() {
        return Err(Error::EmptyDataset);
    }
    let paths = (0..dataset.input_dim())
        .map(|d| {
            let plane = project(dataset, d, config.nx, config.ny)?;
            Ok(fit_plane(plane, config)?.path)
        })
        .collect::<Result<Vec<_>>>()?;
    MisoModel::from_paths(paths)
}
