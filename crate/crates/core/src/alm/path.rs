use std::fmt;

use crate::alm::plane::{DataPlane, Range};
use crate::error::{Error, Result};
use crate::morphology::{
    default_max_passes, thicken_pass, thin_to_convergence, BinaryImage, MaskOctet,
};

/// A y value carrying a non-negative mass.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeightedPoint {
    pub y: f64,
    pub weight: f64,
}

impl WeightedPoint {
    pub fn new(y: f64, weight: f64) -> Self {
        WeightedPoint { y, weight }
    }
}

impl fmt::Display for WeightedPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "({}, {})", self.y, self.weight)
    }
}

/// Center of gravity of two weighted points.
pub fn cog_merge(a: WeightedPoint, b: WeightedPoint) -> Result<WeightedPoint> {
    let total = a.weight + b.weight;
    if total <= 0.0 {
        return Err(Error::ZeroTotalWeight);
    }
    Ok(WeightedPoint::new(
        (a.y * a.weight + b.y * b.weight) / total,
        total,
    ))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Delegate {
    pub y: f64,
    /// 0 for the topmost delegate of the column, counting down.
    pub branch: usize,
    pub weight: f64,
}

/// Per-column delegates extracted from one plane.
#[derive(Debug, Clone, PartialEq)]
pub struct NarrowPath {
    columns: Vec<Vec<Delegate>>,
    x_range: Range,
    y_range: Range,
    confidence: f64,
}

impl NarrowPath {
    pub fn new(
        columns: Vec<Vec<Delegate>>,
        x_range: Range,
        y_range: Range,
        confidence: f64,
    ) -> Self {
        NarrowPath {
            columns,
            x_range,
            y_range,
            confidence,
        }
    }

    pub fn columns(&self) -> &[Vec<Delegate>] {
        &self.columns
    }

    pub fn nx(&self) -> usize {
        self.columns.len()
    }

    pub fn x_range(&self) -> Range {
        self.x_range
    }

    pub fn y_range(&self) -> Range {
        self.y_range
    }

    pub fn x_center(&self, col: usize) -> f64 {
        self.x_range.center(col, self.nx())
    }

    pub fn confidence(&self) -> f64 {
        self.confidence
    }

    pub fn set_confidence(&mut self, confidence: f64) {
        self.confidence = confidence;
    }

    pub fn delegate_count(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    /// Nearest column to `col` that has a delegate; ties go left.
    pub fn nearest_nonempty(&self, col: usize) -> Option<usize> {
        (0..self.nx())
            .filter(|&c| !self.columns[c].is_empty())
            .min_by_key(|&c| (c.abs_diff(col), c))
    }

    /// CSV with columns `x_index,x_center,branch,y,weight`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("x_index,x_center,branch,y,weight\n");
        for (i, col) in self.columns.iter().enumerate() {
            for d in col {
                out.push_str(&format!(
                    "{},{},{},{},{}\n",
                    i,
                    self.x_center(i),
                    d.branch,
                    d.y,
                    d.weight
                ));
            }
        }
        out
    }

    /// Copy of `plane` with every delegate's cell set to the plane's maximum.
    pub fn overlay(&self, plane: &DataPlane) -> DataPlane {
        let mut out = plane.clone();
        let top = plane.max_value().max(1);
        for (col, delegates) in self.columns.iter().enumerate().take(plane.nx()) {
            for d in delegates {
                out.set(col, plane.row_of(d.y), top);
            }
        }
        out
    }
}

/// Mass-weighted spread of `plane` around the nearest delegate of each column, averaged
/// over columns holding both mass and delegates, mapped to `1 / (1 + variance)`.
pub fn path_confidence(plane: &DataPlane, columns: &[Vec<Delegate>]) -> f64 {
    let mut sum = 0.0;
    let mut used = 0usize;
    for (col, delegates) in columns.iter().enumerate() {
        if delegates.is_empty() {
            continue;
        }
        let mut mass = 0.0;
        let mut moment = 0.0;
        for row in 0..plane.ny() {
            let v = plane.get(col, row) as f64;
            if v == 0.0 {
                continue;
            }
            let y = plane.y_center(row);
            let d = delegates
                .iter()
                .map(|d| (y - d.y).abs())
                .fold(f64::INFINITY, f64::min);
            mass += v;
            moment += v * d * d;
        }
        if mass > 0.0 {
            sum += moment / mass;
            used += 1;
        }
    }
    let variance = if used == 0 { 0.0 } else { sum / used as f64 };
    1.0 / (1.0 + variance)
}

/// Center of gravity per column: one delegate at the mass-weighted mean of the cell
/// centers, weighted by the column mass.
pub fn cog_extract(plane: &DataPlane) -> NarrowPath {
    let columns: Vec<Vec<Delegate>> = (0..plane.nx())
        .map(|col| {
            let (mass, moment) = (0..plane.ny()).fold((0.0, 0.0), |(m, s), row| {
                let v = plane.get(col, row) as f64;
                (m + v, s + v * plane.y_center(row))
            });
            if mass > 0.0 {
                vec![Delegate {
                    y: moment / mass,
                    branch: 0,
                    weight: mass,
                }]
            } else {
                Vec::new()
            }
        })
        .collect();
    let confidence = path_confidence(plane, &columns);
    NarrowPath::new(columns, plane.x_range(), plane.y_range(), confidence)
}

/// Settings for the morphological path extractor.
#[derive(Debug, Clone)]
pub struct MorphParams {
    /// Cells at or above this count are foreground.
    pub threshold: u64,
    pub thicken_passes: usize,
    pub thinning: MaskOctet,
    pub thickening: MaskOctet,
    /// Largest vertical gap (in background cells) that still joins two foreground runs.
    /// Defaults to the structuring-element radius.
    pub gap_threshold: Option<usize>,
    /// Defaults to `width + height`.
    pub max_passes: Option<usize>,
}

impl Default for MorphParams {
    fn default() -> Self {
        MorphParams {
            threshold: 1,
            thicken_passes: 1,
            thinning: MaskOctet::thinning(),
            thickening: MaskOctet::thickening(),
            gap_threshold: None,
            max_passes: None,
        }
    }
}

impl MorphParams {
    pub fn gap(&self) -> usize {
        self.gap_threshold.unwrap_or_else(|| self.thinning.radius())
    }
}

/// Thickens `img` `params.thicken_passes` times, then thins it to a fixed point. Both
/// steps run on a copy embedded in a background border as wide as the larger mask radius,
/// so the outermost cells are reachable; the returned images are cropped back.
pub fn thicken_and_thin(
    img: &BinaryImage,
    params: &MorphParams,
) -> Result<(BinaryImage, BinaryImage)> {
    let margin = params.thinning.radius().max(params.thickening.radius());
    let mut work = img.padded(margin);
    for _ in 0..params.thicken_passes {
        work = thicken_pass(&work, &params.thickening);
    }
    let max_passes = params
        .max_passes
        .unwrap_or_else(|| default_max_passes(&work));
    let skeleton = thin_to_convergence(&work, &params.thinning, max_passes).into_result()?;
    Ok((work.cropped(margin), skeleton.cropped(margin)))
}

/// Binarizes the plane at `params.threshold`, then [`thicken_and_thin`].
pub fn thickened_skeleton(
    plane: &DataPlane,
    params: &MorphParams,
) -> Result<(BinaryImage, BinaryImage)> {
    if params.threshold == 0 {
        return Err(Error::InvalidArgument(
            "threshold must be at least 1".into(),
        ));
    }
    thicken_and_thin(&plane.binarize(params.threshold), params)
}

/// Splits each column of `skeleton` into foreground runs separated by gaps longer than
/// `gap`; every run becomes one delegate at its mass center, weighted by its length.
pub fn runs_to_columns(
    plane: &DataPlane,
    skeleton: &BinaryImage,
    gap: usize,
) -> Vec<Vec<Delegate>> {
    (0..skeleton.width())
        .map(|col| {
            let rows: Vec<usize> = (0..skeleton.height())
                .filter(|&r| skeleton.get(r, col))
                .collect();
            let mut runs: Vec<Vec<usize>> = Vec::new();
            for row in rows {
                match runs.last_mut() {
                    Some(run) if row - run[run.len() - 1] - 1 <= gap => run.push(row),
                    _ => runs.push(vec![row]),
                }
            }
            runs.iter()
                .enumerate()
                .map(|(branch, run)| Delegate {
                    y: run.iter().map(|&r| plane.y_center(r)).sum::<f64>() / run.len() as f64,
                    branch,
                    weight: run.len() as f64,
                })
                .collect()
        })
        .collect()
}

/// Morphological narrow path: binarize, thicken, thin to a skeleton, then one delegate
/// per vertical run of the skeleton. Columns whose skeleton splits into separated runs
/// keep several delegates.
pub fn morph_extract(plane: &DataPlane, params: &MorphParams) -> Result<NarrowPath> {
    let (_, skeleton) = thickened_skeleton(plane, params)?;
    let columns = runs_to_columns(plane, &skeleton, params.gap());
    let confidence = path_confidence(plane, &columns);
    Ok(NarrowPath::new(
        columns,
        plane.x_range(),
        plane.y_range(),
        confidence,
    ))
}
