use std::fmt;

use crate::error::{Error, Result};

/// Rectangular 0/1 grid, row-major with the origin at the top-left cell.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryImage {
    width: usize,
    height: usize,
    cells: Vec<bool>,
}

impl BinaryImage {
    /// All-zero image. Panics on a zero dimension.
    pub fn new(width: usize, height: usize) -> Self {
        assert!(
            width >= 1 && height >= 1,
            "image dimensions must be positive"
        );
        BinaryImage {
            width,
            height,
            cells: vec![false; width * height],
        }
    }

    pub fn from_cells(width: usize, height: usize, cells: Vec<bool>) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(Error::EmptyGrid);
        }
        if cells.len() != width * height {
            return Err(Error::InvalidArgument(format!(
                "{} cells for a {width}x{height} image",
                cells.len()
            )));
        }
        Ok(BinaryImage {
            width,
            height,
            cells,
        })
    }

    /// Builds an image from rows of 0/1 values; any non-zero value is foreground.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Result<Self> {
        let height = rows.len();
        let width = rows.first().map(|r| r.as_ref().len()).unwrap_or(0);
        if height == 0 || width == 0 {
            return Err(Error::EmptyGrid);
        }
        let mut cells = Vec::with_capacity(width * height);
        for row in rows {
            let row = row.as_ref();
            if row.len() != width {
                return Err(Error::RaggedGrid);
            }
            cells.extend(row.iter().map(|&v| v != 0));
        }
        Ok(BinaryImage {
            width,
            height,
            cells,
        })
    }

    /// Decodes the low `width * height` bits of `bits`, bit `r * width + c` being cell (r, c).
    pub fn from_bits(width: usize, height: usize, bits: u64) -> Self {
        assert!(width * height <= 64);
        let mut img = BinaryImage::new(width, height);
        for (i, cell) in img.cells.iter_mut().enumerate() {
            *cell = (bits >> i) & 1 == 1;
        }
        img
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn get(&self, row: usize, col: usize) -> bool {
        self.cells[row * self.width + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: bool) {
        self.cells[row * self.width + col] = value;
    }

    pub fn cells(&self) -> &[bool] {
        &self.cells
    }

    pub fn count_ones(&self) -> usize {
        self.cells.iter().filter(|&&c| c).count()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.iter().all(|&c| !c)
    }

    /// Cellwise `self ⊆ other`. Dimensions must match.
    pub fn is_subset_of(&self, other: &BinaryImage) -> bool {
        self.same_shape(other) && self.cells.iter().zip(&other.cells).all(|(&a, &b)| !a || b)
    }

    pub fn same_shape(&self, other: &BinaryImage) -> bool {
        self.width == other.width && self.height == other.height
    }

    /// Embeds the image in a background border `margin` cells wide.
    pub fn padded(&self, margin: usize) -> BinaryImage {
        let mut out = BinaryImage::new(self.width + 2 * margin, self.height + 2 * margin);
        for r in 0..self.height {
            for c in 0..self.width {
                out.set(r + margin, c + margin, self.get(r, c));
            }
        }
        out
    }

    /// Inverse of [`BinaryImage::padded`]: drops a border `margin` cells wide.
    pub fn cropped(&self, margin: usize) -> BinaryImage {
        assert!(
            2 * margin < self.width && 2 * margin < self.height,
            "margin {margin} leaves no cells"
        );
        let (w, h) = (self.width - 2 * margin, self.height - 2 * margin);
        let mut out = BinaryImage::new(w, h);
        for r in 0..h {
            for c in 0..w {
                out.set(r, c, self.get(r + margin, c + margin));
            }
        }
        out
    }

    pub(crate) fn map_cells(&self, f: impl Fn(usize, bool) -> bool) -> BinaryImage {
        BinaryImage {
            width: self.width,
            height: self.height,
            cells: self
                .cells
                .iter()
                .enumerate()
                .map(|(i, &c)| f(i, c))
                .collect(),
        }
    }

    /// Plain PGM (P2) with maxval 1.
    pub fn to_pgm(&self) -> String {
        let mut out = format!("P2\n{} {}\n1\n", self.width, self.height);
        for row in self.cells.chunks(self.width) {
            let line: Vec<&str> = row.iter().map(|&c| if c { "1" } else { "0" }).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    /// Reads a plain PGM; any sample above zero is foreground.
    pub fn from_pgm(text: &str) -> Result<Self> {
        let pgm = crate::io::Pgm::parse(text)?;
        let cells = pgm.samples.iter().map(|&v| v > 0).collect();
        BinaryImage::from_cells(pgm.width, pgm.height, cells)
    }
}

impl fmt::Debug for BinaryImage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BinaryImage {}x{}", self.width, self.height)?;
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for BinaryImage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.cells.chunks(self.width) {
            let line: String = row.iter().map(|&c| if c { '1' } else { '.' }).collect();
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}
