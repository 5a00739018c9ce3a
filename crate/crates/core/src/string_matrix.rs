//! Square matrices whose cells are equal-length strings over `{0, 1, *}`.
//!
//! A matrix of depth `d` is stored as `d` single-character layers: layer `k` holds the
//! `k`-th character of every cell. The first layer is the numeric layer an operator acts
//! on; the remaining layers record operand history.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::io::blocks;
use crate::morphology::{MaskCell, TriValuedMask};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    Zero,
    One,
    /// Don't care.
    Star,
}

impl Symbol {
    pub fn from_char(c: char) -> Option<Symbol> {
        match c {
            '0' => Some(Symbol::Zero),
            '1' => Some(Symbol::One),
            '*' => Some(Symbol::Star),
            _ => None,
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Symbol::Zero => '0',
            Symbol::One => '1',
            Symbol::Star => '*',
        }
    }

    pub fn complement(self) -> Symbol {
        match self {
            Symbol::Zero => Symbol::One,
            Symbol::One => Symbol::Zero,
            Symbol::Star => Symbol::Star,
        }
    }

    /// `Some(bit)` for 0/1, `None` for `*`.
    pub fn bit(self) -> Option<bool> {
        match self {
            Symbol::Zero => Some(false),
            Symbol::One => Some(true),
            Symbol::Star => None,
        }
    }

    pub fn from_bit(bit: bool) -> Symbol {
        if bit {
            Symbol::One
        } else {
            Symbol::Zero
        }
    }
}

/// One matrix cell: a non-empty string over `{0, 1, *}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cell(Vec<Symbol>);

impl Cell {
    pub fn new(symbols: Vec<Symbol>) -> Result<Cell> {
        if symbols.is_empty() {
            return Err(Error::InvalidCell(String::new()));
        }
        Ok(Cell(symbols))
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn star(depth: usize) -> Cell {
        Cell(vec![Symbol::Star; depth])
    }
}

impl FromStr for Cell {
    type Err = Error;

    fn from_str(s: &str) -> Result<Cell> {
        let symbols = s
            .chars()
            .map(Symbol::from_char)
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::InvalidCell(s.to_string()))?;
        Cell::new(symbols).map_err(|_| Error::InvalidCell(s.to_string()))
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|s| write!(f, "{}", s.to_char()))
    }
}

/// Square grid of single symbols.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Layer {
    size: usize,
    cells: Vec<Symbol>,
}

impl Layer {
    pub fn new(size: usize, cells: Vec<Symbol>) -> Result<Layer> {
        if size == 0 {
            return Err(Error::EmptyGrid);
        }
        if cells.len() != size * size {
            return Err(Error::InvalidArgument(format!(
                "{} cells for a {size}x{size} layer",
                cells.len()
            )));
        }
        Ok(Layer { size, cells })
    }

    pub fn filled(size: usize, symbol: Symbol) -> Layer {
        Layer::new(size, vec![symbol; size * size]).expect("positive size")
    }

    /// Rows of `0`/`1`/`*` characters, whitespace ignored.
    pub fn from_rows(rows: &[&str]) -> Result<Layer> {
        let size = rows.len();
        let mut cells = Vec::with_capacity(size * size);
        for (i, row) in rows.iter().enumerate() {
            let before = cells.len();
            for ch in row.chars().filter(|c| !c.is_whitespace()) {
                let s = Symbol::from_char(ch)
                    .ok_or_else(|| Error::parse(i + 1, format!("bad symbol {ch:?}")))?;
                cells.push(s);
            }
            if cells.len() - before != size {
                return Err(Error::InvalidArgument("layer must be square".into()));
            }
        }
        Layer::new(size, cells)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, row: usize, col: usize) -> Symbol {
        self.cells[row * self.size + col]
    }

    pub fn cells(&self) -> &[Symbol] {
        &self.cells
    }

    pub fn complement(&self) -> Layer {
        Layer {
            size: self.size,
            cells: self.cells.iter().map(|s| s.complement()).collect(),
        }
    }

    /// Pads to `size` with `*`, keeping existing cells at their indices.
    pub fn padded(&self, size: usize) -> Layer {
        assert!(size >= self.size);
        if size == self.size {
            return self.clone();
        }
        let mut cells = vec![Symbol::Star; size * size];
        for r in 0..self.size {
            for c in 0..self.size {
                cells[r * size + c] = self.get(r, c);
            }
        }
        Layer { size, cells }
    }

    /// `'1'` → FG, `'0'` → BG, `'*'` → DC; anchored at the center.
    pub fn to_mask(&self) -> TriValuedMask {
        let cells = self
            .cells
            .iter()
            .map(|s| match s {
                Symbol::One => MaskCell::Fg,
                Symbol::Zero => MaskCell::Bg,
                Symbol::Star => MaskCell::Dc,
            })
            .collect();
        TriValuedMask::new(self.size, cells).expect("square layer")
    }

    pub fn into_matrix(self) -> StringMatrix {
        StringMatrix {
            size: self.size,
            layers: vec![self],
        }
    }
}

impl fmt::Debug for Layer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Layer[")?;
        for (i, row) in self.cells.chunks(self.size).enumerate() {
            if i > 0 {
                write!(f, "/")?;
            }
            row.iter().try_for_each(|s| write!(f, "{}", s.to_char()))?;
        }
        write!(f, "]")
    }
}

/// Square `n x n` matrix of depth-`d` strings over `{0, 1, *}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StringMatrix {
    size: usize,
    layers: Vec<Layer>,
}

impl StringMatrix {
    /// Builds from layers of equal size; at least one layer.
    pub fn from_layers(layers: Vec<Layer>) -> Result<StringMatrix> {
        let size = layers.first().ok_or(Error::EmptyGrid)?.size;
        if layers.iter().any(|l| l.size != size) {
            return Err(Error::InvalidArgument("layers differ in size".into()));
        }
        Ok(StringMatrix { size, layers })
    }

    /// `size x size` matrix with every cell equal to `symbol` (depth 1).
    pub fn constant(size: usize, symbol: Symbol) -> StringMatrix {
        Layer::filled(size, symbol).into_matrix()
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn depth(&self) -> usize {
        self.layers.len()
    }

    pub fn cell(&self, row: usize, col: usize) -> Cell {
        Cell(self.layers.iter().map(|l| l.get(row, col)).collect())
    }

    /// Layer `k` holds the `k`-th character of every cell.
    pub fn layers(&self) -> &[Layer] {
        &self.layers
    }

    /// Layers padded with `*` to `size`.
    fn padded_layers(&self, size: usize) -> impl Iterator<Item = Layer> + '_ {
        self.layers.iter().map(move |l| l.padded(size))
    }

    pub fn padded(&self, size: usize) -> StringMatrix {
        StringMatrix {
            size,
            layers: self.padded_layers(size).collect(),
        }
    }

    pub fn complement(&self) -> StringMatrix {
        StringMatrix {
            size: self.size,
            layers: self.layers.iter().map(Layer::complement).collect(),
        }
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }

    /// Parses every blank-line separated block as one matrix.
    pub fn parse_many(text: &str) -> Result<Vec<StringMatrix>> {
        blocks(text)
            .into_iter()
            .map(|block| {
                let rows = block
                    .iter()
                    .map(|&(line, row)| {
                        row.split_whitespace()
                            .map(|tok| {
                                tok.parse::<Cell>()
                                    .map_err(|e| Error::parse(line, e.to_string()))
                            })
                            .collect::<Result<Vec<_>>>()
                    })
                    .collect::<Result<Vec<_>>>()?;
                pad_to_square(&rows)
            })
            .collect()
    }
}

impl FromStr for StringMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<StringMatrix> {
        let mut all = StringMatrix::parse_many(s)?;
        match all.len() {
            1 => Ok(all.remove(0)),
            0 => Err(Error::EmptyGrid),
            n => Err(Error::InvalidArgument(format!(
                "expected one matrix, found {n}"
            ))),
        }
    }
}

impl fmt::Display for StringMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.size {
            let row: Vec<String> = (0..self.size)
                .map(|c| self.cell(r, c).to_string())
                .collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for StringMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.size)
            .map(|r| {
                (0..self.size)
                    .map(|c| self.cell(r, c).to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        write!(f, "StringMatrix[{}]", rows.join(" / "))
    }
}

/// Smallest square matrix containing `rows`, new cells filled with `*`-strings.
pub fn pad_to_square(rows: &[Vec<Cell>]) -> Result<StringMatrix> {
    let height = rows.len();
    let width = rows.first().map(Vec::len).unwrap_or(0);
    if height == 0 || width == 0 {
        return Err(Error::EmptyGrid);
    }
    if rows.iter().any(|r| r.len() != width) {
        return Err(Error::RaggedGrid);
    }
    let depth = rows[0][0].len();
    if let Some(bad) = rows.iter().flatten().find(|c| c.len() != depth) {
        return Err(Error::NonUniformDepth {
            expected: depth,
            found: bad.len(),
        });
    }
    let size = width.max(height);
    let star = Cell::star(depth);
    let layers = (0..depth)
        .map(|k| {
            let mut cells = Vec::with_capacity(size * size);
            for r in 0..size {
                for c in 0..size {
                    let cell = rows.get(r).and_then(|row| row.get(c)).unwrap_or(&star);
                    cells.push(cell.0[k]);
                }
            }
            Layer { size, cells }
        })
        .collect();
    Ok(StringMatrix { size, layers })
}

/// Concatenates cells characterwise after padding both operands to the larger size. The
/// larger operand's characters come first; on equal sizes `a`'s come first.
pub fn save(a: &StringMatrix, b: &StringMatrix) -> StringMatrix {
    let (first, second) = if b.size > a.size { (b, a) } else { (a, b) };
    let size = first.size;
    StringMatrix {
        size,
        layers: first
            .padded_layers(size)
            .chain(second.padded_layers(size))
            .collect(),
    }
}

/// Left fold of [`save`].
pub fn save_all<'a>(matrices: impl IntoIterator<Item = &'a StringMatrix>) -> Option<StringMatrix> {
    let mut iter = matrices.into_iter();
    let first = iter.next()?.clone();
    Some(iter.fold(first, |acc, m| save(&acc, m)))
}

/// First character of every cell.
pub fn left(a: &StringMatrix) -> Layer {
    a.layers[0].clone()
}

/// Last character of every cell.
pub fn right(a: &StringMatrix) -> Layer {
    a.layers[a.layers.len() - 1].clone()
}

/// Everything between the first and last character; `None` when depth ≤ 2.
pub fn tail(a: &StringMatrix) -> Option<StringMatrix> {
    let d = a.depth();
    (d > 2).then(|| StringMatrix {
        size: a.size,
        layers: a.layers[1..d - 1].to_vec(),
    })
}

/// `Save(T(A), R(A))`, or `A` itself for depth-1 matrices.
pub fn l_prime(a: &StringMatrix) -> StringMatrix {
    if a.depth() == 1 {
        return a.clone();
    }
    let r = right(a).into_matrix();
    match tail(a) {
        Some(t) => save(&t, &r),
        None => r,
    }
}

pub fn layers(a: &StringMatrix) -> Vec<Layer> {
    a.layers.clone()
}
