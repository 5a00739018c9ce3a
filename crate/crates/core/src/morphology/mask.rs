use std::fmt;

use crate::error::{Error, Result};
use crate::io::blocks;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MaskCell {
    /// Must overlay a foreground (1) cell. Member of B1.
    Fg,
    /// Must overlay a background (0) cell. Member of B2.
    Bg,
    /// Unconstrained.
    Dc,
}

impl MaskCell {
    pub fn complement(self) -> MaskCell {
        match self {
            MaskCell::Fg => MaskCell::Bg,
            MaskCell::Bg => MaskCell::Fg,
            MaskCell::Dc => MaskCell::Dc,
        }
    }

    pub fn from_char(c: char) -> Option<MaskCell> {
        match c {
            '1' => Some(MaskCell::Fg),
            '0' => Some(MaskCell::Bg),
            '*' => Some(MaskCell::Dc),
            _ => None,
        }
    }

    pub fn to_char(self) -> char {
        match self {
            MaskCell::Fg => '1',
            MaskCell::Bg => '0',
            MaskCell::Dc => '*',
        }
    }
}

/// Square structuring element over {FG, BG, DC} with an anchor cell.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TriValuedMask {
    size: usize,
    cells: Vec<MaskCell>,
    anchor: (usize, usize),
}

impl TriValuedMask {
    /// Mask anchored at `(size / 2, size / 2)`.
    pub fn new(size: usize, cells: Vec<MaskCell>) -> Result<Self> {
        Self::with_anchor(size, cells, (size / 2, size / 2))
    }

    pub fn with_anchor(size: usize, cells: Vec<MaskCell>, anchor: (usize, usize)) -> Result<Self> {
        if size == 0 {
            return Err(Error::EmptyGrid);
        }
        if cells.len() != size * size {
            return Err(Error::InvalidArgument(format!(
                "{} cells for a {size}x{size} mask",
                cells.len()
            )));
        }
        if anchor.0 >= size || anchor.1 >= size {
            return Err(Error::InvalidArgument(format!(
                "anchor {anchor:?} outside {size}x{size} mask"
            )));
        }
        Ok(TriValuedMask {
            size,
            cells,
            anchor,
        })
    }

    pub fn filled(size: usize, cell: MaskCell) -> Self {
        Self::new(size, vec![cell; size * size]).expect("valid size")
    }

    /// Parses rows such as `"00*"`; whitespace inside a row is ignored.
    pub fn from_rows(rows: &[&str]) -> Result<Self> {
        let parsed: Vec<Vec<MaskCell>> = rows
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.chars()
                    .filter(|c| !c.is_whitespace())
                    .map(|c| {
                        MaskCell::from_char(c)
                            .ok_or_else(|| Error::parse(i + 1, format!("bad mask character {c:?}")))
                    })
                    .collect()
            })
            .collect::<Result<_>>()?;
        let size = parsed.len();
        if parsed.iter().any(|r| r.len() != size) {
            return Err(Error::InvalidArgument(format!(
                "mask must be square, got {size} rows of lengths {:?}",
                parsed.iter().map(Vec::len).collect::<Vec<_>>()
            )));
        }
        Self::new(size, parsed.into_iter().flatten().collect())
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn anchor(&self) -> (usize, usize) {
        self.anchor
    }

    pub fn get(&self, row: usize, col: usize) -> MaskCell {
        self.cells[row * self.size + col]
    }

    pub fn cells(&self) -> &[MaskCell] {
        &self.cells
    }

    /// FG and BG cells as `(row offset, col offset, cell)` relative to the anchor.
    pub(crate) fn constraints(&self) -> Vec<(isize, isize, MaskCell)> {
        let (ar, ac) = self.anchor;
        self.cells
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != MaskCell::Dc)
            .map(|(i, &c)| {
                let r = (i / self.size) as isize - ar as isize;
                let col = (i % self.size) as isize - ac as isize;
                (r, col, c)
            })
            .collect()
    }

    /// FG and BG interchanged; DC cells and the anchor are kept.
    pub fn complement(&self) -> TriValuedMask {
        TriValuedMask {
            size: self.size,
            cells: self.cells.iter().map(|c| c.complement()).collect(),
            anchor: self.anchor,
        }
    }

    /// Rotates the outer ring of a 3x3 mask one step clockwise. `None` for other sizes.
    pub fn rotate45(&self) -> Option<TriValuedMask> {
        if self.size != 3 {
            return None;
        }
        let mut cells = self.cells.clone();
        for (k, &(r, c)) in RING.iter().enumerate() {
            let (pr, pc) = RING[(k + RING.len() - 1) % RING.len()];
            cells[r * 3 + c] = self.cells[pr * 3 + pc];
        }
        Some(TriValuedMask {
            size: 3,
            cells,
            anchor: self.anchor,
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for row in self.cells.chunks(self.size) {
            out.extend(row.iter().map(|c| c.to_char()));
            out.push('\n');
        }
        out
    }
}

/// Border cells of a 3x3 grid in clockwise order from the top-left corner.
const RING: [(usize, usize); 8] = [
    (0, 0),
    (0, 1),
    (0, 2),
    (1, 2),
    (2, 2),
    (2, 1),
    (2, 0),
    (1, 0),
];

impl fmt::Debug for TriValuedMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "TriValuedMask(anchor={:?})\n{}",
            self.anchor,
            self.to_text()
        )
    }
}

/// Eight masks applied in order by one thinning or thickening pass.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaskOctet {
    masks: Vec<TriValuedMask>,
}

impl MaskOctet {
    /// Requires exactly eight masks. For 3x3 masks each one must be the 45° rotation of
    /// its predecessor; larger masks have no discrete 45° rotation and are taken as given.
    pub fn new(masks: Vec<TriValuedMask>) -> Result<Self> {
        if masks.len() != 8 {
            return Err(Error::InvalidArgument(format!(
                "an octet needs 8 masks, got {}",
                masks.len()
            )));
        }
        for pair in masks.windows(2) {
            if let Some(rotated) = pair[0].rotate45() {
                if rotated != pair[1] {
                    return Err(Error::InvalidArgument(
                        "octet masks must be successive 45° rotations".into(),
                    ));
                }
            }
        }
        Ok(MaskOctet { masks })
    }

    /// The generator followed by its seven successive 45° rotations (3x3 only).
    pub fn from_generator(first: TriValuedMask) -> Result<Self> {
        let mut masks = vec![first];
        for _ in 1..8 {
            let next = masks
                .last()
                .and_then(TriValuedMask::rotate45)
                .ok_or_else(|| Error::InvalidArgument("rotation needs a 3x3 mask".into()))?;
            masks.push(next);
        }
        Ok(MaskOctet { masks })
    }

    /// Standard thinning sequence: `000 / *1* / 111` and its rotations.
    pub fn thinning() -> Self {
        let b1 = TriValuedMask::from_rows(&["000", "*1*", "111"]).expect("valid mask");
        Self::from_generator(b1).expect("3x3 generator")
    }

    /// Thinning sequence with ones and zeros interchanged.
    pub fn thickening() -> Self {
        Self::thinning().complement()
    }

    pub fn complement(&self) -> MaskOctet {
        MaskOctet {
            masks: self.masks.iter().map(TriValuedMask::complement).collect(),
        }
    }

    pub fn masks(&self) -> &[TriValuedMask] {
        &self.masks
    }

    /// Largest mask radius, `floor(size / 2)`.
    pub fn radius(&self) -> usize {
        self.masks.iter().map(|m| m.size() / 2).max().unwrap_or(0)
    }

    /// One mask per blank-line separated block of `1`/`0`/`*` rows.
    pub fn parse(text: &str) -> Result<Self> {
        let masks = blocks(text)
            .into_iter()
            .map(|block| {
                let first_line = block[0].0;
                let rows: Vec<&str> = block.iter().map(|(_, l)| *l).collect();
                TriValuedMask::from_rows(&rows).map_err(|e| match e {
                    Error::Parse { line, message } => Error::Parse {
                        line: line + first_line - 1,
                        message,
                    },
                    other => other,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(masks)
    }

    pub fn to_text(&self) -> String {
        self.masks
            .iter()
            .map(TriValuedMask::to_text)
            .collect::<Vec<_>>()
            .join("\n")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn second_mask_is_clockwise_rotation() {
        let octet = MaskOctet::thinning();
        let b2 = TriValuedMask::from_rows(&["*00", "110", "11*"]).unwrap();
        assert_eq!(octet.masks()[1], b2);
        // eight rotations come back around
        assert_eq!(octet.masks()[7].rotate45().unwrap(), octet.masks()[0]);
    }

    #[test]
    fn complement_mask_examples() {
        let fg = TriValuedMask::filled(3, MaskCell::Fg);
        assert_eq!(fg.complement(), TriValuedMask::filled(3, MaskCell::Bg));
        let octet = MaskOctet::thinning();
        let b1 = &octet.masks()[0];
        assert_eq!(b1.complement().complement(), *b1);
        // thickening B1 is the thinning B1 with ones and zeros interchanged
        assert_eq!(
            MaskOctet::thickening().masks()[0],
            TriValuedMask::from_rows(&["111", "*0*", "000"]).unwrap()
        );
    }

    #[test]
    fn even_mask_anchor_is_floor_half() {
        let m = TriValuedMask::filled(4, MaskCell::Dc);
        assert_eq!(m.anchor(), (2, 2));
        assert_eq!(TriValuedMask::filled(1, MaskCell::Bg).anchor(), (0, 0));
    }

    #[test]
    fn octet_text_round_trip() {
        let octet = MaskOctet::thinning();
        assert_eq!(MaskOctet::parse(&octet.to_text()).unwrap(), octet);
    }

    #[test]
    fn octet_parse_errors() {
        let seven = MaskOctet::thinning().masks()[..7]
            .iter()
            .map(TriValuedMask::to_text)
            .collect::<Vec<_>>()
            .join("\n");
        assert!(MaskOctet::parse(&seven).is_err());
        assert!(MaskOctet::parse("0x0\n*1*\n111\n").is_err());
        assert!(TriValuedMask::from_rows(&["00", "1"]).is_err());
        let unrotated = std::iter::repeat_n("000\n*1*\n111\n", 8)
            .collect::<Vec<_>>()
            .join("\n");
        assert!(MaskOctet::parse(&unrotated).is_err());
    }
}
