use crate::alm::dataset::Dataset;
use crate::error::{Error, Result};
use crate::io::Pgm;
use crate::morphology::BinaryImage;

/// Closed real interval `[lo, hi]` with `lo < hi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Range {
    pub lo: f64,
    pub hi: f64,
}

impl Range {
    /// Spans `values`; a degenerate span is widened by one unit around its value.
    pub fn spanning(values: impl IntoIterator<Item = f64>) -> Option<Range> {
        let (lo, hi) = values
            .into_iter()
            .fold(None, |acc: Option<(f64, f64)>, v| match acc {
                None => Some((v, v)),
                Some((lo, hi)) => Some((lo.min(v), hi.max(v))),
            })?;
        if lo == hi {
            Some(Range {
                lo: lo - 0.5,
                hi: hi + 0.5,
            })
        } else {
            Some(Range { lo, hi })
        }
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    /// Bin of `v` among `n` equal bins; values outside the range are clamped.
    pub fn bin(&self, v: f64, n: usize) -> usize {
        let t = (v - self.lo) / self.width() * n as f64;
        if t <= 0.0 {
            0
        } else {
            (t.floor() as usize).min(n - 1)
        }
    }

    pub fn center(&self, bin: usize, n: usize) -> f64 {
        self.lo + (bin as f64 + 0.5) * self.width() / n as f64
    }
}

/// Grid of non-negative ink accumulations over one input/output plane.
///
/// Columns run along the input axis (left to right, increasing x). Rows run top to
/// bottom with row 0 holding the highest output values, so the grid reads like a plot
/// and exports to PGM as-is.
#[derive(Debug, Clone, PartialEq)]
pub struct DataPlane {
    nx: usize,
    ny: usize,
    cells: Vec<u64>,
    x_range: Range,
    y_range: Range,
}

/// One stamping source: a cell and the count of samples in it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Source {
    pub col: usize,
    pub row: usize,
    pub count: u64,
}

impl DataPlane {
    pub fn new(nx: usize, ny: usize, x_range: Range, y_range: Range) -> DataPlane {
        assert!(nx >= 1 && ny >= 1, "plane dimensions must be positive");
        assert!(
            x_range.width() > 0.0 && y_range.width() > 0.0,
            "plane ranges must be non-degenerate"
        );
        DataPlane {
            nx,
            ny,
            cells: vec![0; nx * ny],
            x_range,
            y_range,
        }
    }

    pub fn nx(&self) -> usize {
        self.nx
    }

    pub fn ny(&self) -> usize {
        self.ny
    }

    pub fn x_range(&self) -> Range {
        self.x_range
    }

    pub fn y_range(&self) -> Range {
        self.y_range
    }

    pub fn get(&self, col: usize, row: usize) -> u64 {
        self.cells[row * self.nx + col]
    }

    pub fn set(&mut self, col: usize, row: usize, v: u64) {
        self.cells[row * self.nx + col] = v;
    }

    pub fn add(&mut self, col: usize, row: usize, v: u64) {
        self.cells[row * self.nx + col] += v;
    }

    pub fn cells(&self) -> &[u64] {
        &self.cells
    }

    pub fn total(&self) -> u64 {
        self.cells.iter().sum()
    }

    pub fn max_value(&self) -> u64 {
        self.cells.iter().copied().max().unwrap_or(0)
    }

    pub fn x_center(&self, col: usize) -> f64 {
        self.x_range.center(col, self.nx)
    }

    pub fn y_center(&self, row: usize) -> f64 {
        self.y_range.hi - (row as f64 + 0.5) * self.cell_height()
    }

    pub fn cell_height(&self) -> f64 {
        self.y_range.width() / self.ny as f64
    }

    pub fn col_of(&self, x: f64) -> usize {
        self.x_range.bin(x, self.nx)
    }

    pub fn row_of(&self, y: f64) -> usize {
        self.ny - 1 - self.y_range.bin(y, self.ny)
    }

    /// Non-zero cells as stamping sources, in row-major order.
    pub fn sources(&self) -> Vec<Source> {
        self.cells
            .iter()
            .enumerate()
            .filter(|(_, &v)| v > 0)
            .map(|(i, &count)| Source {
                col: i % self.nx,
                row: i / self.nx,
                count,
            })
            .collect()
    }

    /// Same geometry, all cells zero.
    pub fn blank(&self) -> DataPlane {
        DataPlane::new(self.nx, self.ny, self.x_range, self.y_range)
    }

    /// Foreground where the cell reaches `threshold`.
    pub fn binarize(&self, threshold: u64) -> BinaryImage {
        let cells = self.cells.iter().map(|&v| v >= threshold).collect();
        BinaryImage::from_cells(self.nx, self.ny, cells).expect("plane geometry")
    }

    /// Plane carrying a 0/1 image, same geometry as `self`.
    pub fn with_binary(&self, img: &BinaryImage) -> DataPlane {
        assert_eq!((img.width(), img.height()), (self.nx, self.ny));
        let mut out = self.blank();
        for (cell, &on) in out.cells.iter_mut().zip(img.cells()) {
            *cell = on as u64;
        }
        out
    }

    /// Plain PGM with maxval = the largest cell (at least 1).
    pub fn to_pgm(&self) -> String {
        Pgm {
            width: self.nx,
            height: self.ny,
            maxval: self.max_value().max(1),
            samples: self.cells.clone(),
        }
        .to_text()
    }
}

/// Bins the chosen input against the output; each sample adds one to its cell.
pub fn project(dataset: &Dataset, dim_index: usize, nx: usize, ny: usize) -> Result<DataPlane> {
    if dataset.is_empty() {
        return Err(Error::EmptyDataset);
    }
    if dim_index >= dataset.input_dim() {
        return Err(Error::DimensionOutOfRange {
            index: dim_index,
            dim: dataset.input_dim(),
        });
    }
    if nx < 2 || ny < 2 {
        return Err(Error::InvalidArgument(
            "plane needs at least 2x2 cells".into(),
        ));
    }
    let xs = dataset.samples().iter().map(|s| s.inputs[dim_index]);
    let ys = dataset.samples().iter().map(|s| s.output);
    let x_range = Range::spanning(xs).expect("non-empty");
    let y_range = Range::spanning(ys).expect("non-empty");
    let mut plane = DataPlane::new(nx, ny, x_range, y_range);
    for s in dataset.samples() {
        let (col, row) = (plane.col_of(s.inputs[dim_index]), plane.row_of(s.output));
        plane.add(col, row, 1);
    }
    Ok(plane)
}

/// Adds one pyramid: `count * height * (radius + 1 - k)` at Chebyshev distance `k ≤ radius`,
/// clipped at the frame.
pub fn stamp(plane: &mut DataPlane, source: Source, radius: usize, height: u64) {
    let r = radius as isize;
    for dr in -r..=r {
        for dc in -r..=r {
            let (row, col) = (source.row as isize + dr, source.col as isize + dc);
            if row < 0 || col < 0 || row >= plane.ny as isize || col >= plane.nx as isize {
                continue;
            }
            let k = dr.unsigned_abs().max(dc.unsigned_abs());
            let v = source.count * height * (radius + 1 - k) as u64;
            plane.add(col as usize, row as usize, v);
        }
    }
}

/// Stamps every source onto `plane` in the given order.
pub fn stamp_all(plane: &mut DataPlane, sources: &[Source], radius: usize, height: u64) {
    for &s in sources {
        stamp(plane, s, radius, height);
    }
}

/// Ink Drop Spread: a fresh plane with a pyramid stamped for every non-zero cell.
pub fn ids_spread(plane: &DataPlane, radius: usize, height: u64) -> DataPlane {
    let mut out = plane.blank();
    stamp_all(&mut out, &plane.sources(), radius, height);
    out
}

/// Converts a spread radius in input units to cells: `round(r * nx / x_width)`.
pub fn radius_in_cells(radius: f64, plane: &DataPlane) -> usize {
    (radius * plane.nx as f64 / plane.x_range.width())
        .round()
        .max(0.0) as usize
}
