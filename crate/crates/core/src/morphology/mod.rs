//! Binary morphology on [`BinaryImage`]s: erosion, dilation, the hit-or-miss transform,
//! thinning and thickening by single masks and by mask octets.
//!
//! Border convention: a mask is only evaluated at anchor positions where the whole mask
//! lies inside the frame. Everywhere else the hit-or-miss output is 0, so thinning and
//! thickening never touch the outermost `radius` cells. Under this convention the
//! complement identities between thinning and thickening hold cell-exactly on a finite
//! grid.

mod image;
mod mask;

pub use image::BinaryImage;
pub use mask::{MaskCell, MaskOctet, TriValuedMask};

use crate::error::Error;

/// Frame-local complement.
pub fn complement(img: &BinaryImage) -> BinaryImage {
    img.map_cells(|_, c| !c)
}

/// Anchor positions of a `width x height` frame at which `mask` fits entirely.
fn fitting_rows_cols(
    width: usize,
    height: usize,
    mask: &TriValuedMask,
) -> Option<(std::ops::Range<usize>, std::ops::Range<usize>)> {
    let n = mask.size();
    if n > width || n > height {
        return None;
    }
    let (ar, ac) = mask.anchor();
    Some((ar..height - n + ar + 1, ac..width - n + ac + 1))
}

/// Hit-or-miss over a grid whose cells may be unknown (`None`). An unknown cell satisfies
/// neither an FG nor a BG constraint.
pub(crate) fn hit_or_miss_grid(
    width: usize,
    height: usize,
    value: impl Fn(usize, usize) -> Option<bool>,
    mask: &TriValuedMask,
) -> Vec<bool> {
    let mut out = vec![false; width * height];
    let Some((rows, cols)) = fitting_rows_cols(width, height, mask) else {
        return out;
    };
    let constraints = mask.constraints();
    for r in rows {
        for c in cols.clone() {
            out[r * width + c] = constraints.iter().all(|&(dr, dc, want)| {
                let v = value((r as isize + dr) as usize, (c as isize + dc) as usize);
                match want {
                    MaskCell::Fg => v == Some(true),
                    MaskCell::Bg => v == Some(false),
                    MaskCell::Dc => true,
                }
            });
        }
    }
    out
}

/// `A ⊙ B = (A ⊖ B1) ∩ (Aᶜ ⊖ B2)`: 1 where every FG cell of the anchored mask overlays a 1
/// and every BG cell overlays a 0.
pub fn hit_or_miss(img: &BinaryImage, mask: &TriValuedMask) -> BinaryImage {
    let hits = hit_or_miss_grid(img.width(), img.height(), |r, c| Some(img.get(r, c)), mask);
    BinaryImage::from_cells(img.width(), img.height(), hits).expect("same shape")
}

/// Erosion by the FG cells of `mask`, evaluated where the whole mask fits.
pub fn erode(img: &BinaryImage, mask: &TriValuedMask) -> BinaryImage {
    let fg_only = TriValuedMask::with_anchor(
        mask.size(),
        mask.cells()
            .iter()
            .map(|&c| if c == MaskCell::Fg { c } else { MaskCell::Dc })
            .collect(),
        mask.anchor(),
    )
    .expect("same geometry");
    hit_or_miss(img, &fg_only)
}

/// Dilation by the FG cells of `mask`: `{z | (B̂)_z ∩ A ≠ ∅}`. Out-of-frame cells are
/// ignored.
pub fn dilate(img: &BinaryImage, mask: &TriValuedMask) -> BinaryImage {
    let (w, h) = (img.width() as isize, img.height() as isize);
    let offsets: Vec<(isize, isize)> = mask
        .constraints()
        .into_iter()
        .filter(|&(_, _, c)| c == MaskCell::Fg)
        .map(|(r, c, _)| (r, c))
        .collect();
    let mut out = BinaryImage::new(img.width(), img.height());
    for r in 0..h {
        for c in 0..w {
            let hit = offsets.iter().any(|&(dr, dc)| {
                let (sr, sc) = (r - dr, c - dc);
                (0..h).contains(&sr) && (0..w).contains(&sc) && img.get(sr as usize, sc as usize)
            });
            out.set(r as usize, c as usize, hit);
        }
    }
    out
}

/// `A ⊗ B = A − (A ⊙ B)`.
pub fn thin_once(img: &BinaryImage, mask: &TriValuedMask) -> BinaryImage {
    let hits = hit_or_miss(img, mask);
    img.map_cells(|i, c| c && !hits.cells()[i])
}

/// `A ∪ (A ⊙ B)`.
pub fn thicken_once(img: &BinaryImage, mask: &TriValuedMask) -> BinaryImage {
    let hits = hit_or_miss(img, mask);
    img.map_cells(|i, c| c || hits.cells()[i])
}

/// Sequential thinning by each mask of the octet, in order.
pub fn thin_pass(img: &BinaryImage, octet: &MaskOctet) -> BinaryImage {
    octet
        .masks()
        .iter()
        .fold(img.clone(), |acc, m| thin_once(&acc, m))
}

/// Sequential thickening by each mask of the octet, in order.
pub fn thicken_pass(img: &BinaryImage, octet: &MaskOctet) -> BinaryImage {
    octet
        .masks()
        .iter()
        .fold(img.clone(), |acc, m| thicken_once(&acc, m))
}

/// Result of iterating a pass to a fixed point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fixpoint {
    pub image: BinaryImage,
    /// Passes run, including the final one that changed nothing.
    pub passes: usize,
    pub converged: bool,
}

impl Fixpoint {
    pub fn into_result(self) -> Result<BinaryImage, Error> {
        if self.converged {
            Ok(self.image)
        } else {
            Err(Error::NonConvergence {
                passes: self.passes,
            })
        }
    }
}

fn iterate(
    img: &BinaryImage,
    octet: &MaskOctet,
    max_passes: usize,
    pass: fn(&BinaryImage, &MaskOctet) -> BinaryImage,
) -> Fixpoint {
    assert!(max_passes >= 1, "max_passes must be at least 1");
    let mut current = img.clone();
    for passes in 1..=max_passes {
        let next = pass(&current, octet);
        if next == current {
            return Fixpoint {
                image: current,
                passes,
                converged: true,
            };
        }
        current = next;
    }
    Fixpoint {
        image: current,
        passes: max_passes,
        converged: false,
    }
}

/// Repeats [`thin_pass`] until a pass changes nothing or `max_passes` run out.
pub fn thin_to_convergence(img: &BinaryImage, octet: &MaskOctet, max_passes: usize) -> Fixpoint {
    iterate(img, octet, max_passes, thin_pass)
}

pub fn thicken_to_convergence(img: &BinaryImage, octet: &MaskOctet, max_passes: usize) -> Fixpoint {
    iterate(img, octet, max_passes, thicken_pass)
}

/// Default pass cap: `width + height`.
pub fn default_max_passes(img: &BinaryImage) -> usize {
    img.width() + img.height()
}

/// Checks `(Aᶜ ⊗ Bᶜ)ᶜ = A ⊙ B` and `(Aᶜ ⊙ Bᶜ)ᶜ = A ⊗ B` cell-exactly.
pub fn check_duality(img: &BinaryImage, mask: &TriValuedMask) -> (bool, bool) {
    let ac = complement(img);
    let bc = mask.complement();
    let thin_dual = complement(&thin_once(&ac, &bc)) == thicken_once(img, mask);
    let thicken_dual = complement(&thicken_once(&ac, &bc)) == thin_once(img, mask);
    (thin_dual, thicken_dual)
}
