//! Brute-force reference implementations shared by the integration tests.

#![allow(dead_code)]

use alm_core::alm::{DataPlane, Source};
use alm_core::morphology::{BinaryImage, MaskCell, TriValuedMask};
use alm_core::string_matrix::{Layer, Symbol};

/// Translate-and-test hit-or-miss: for every anchor position, place the mask, reject the
/// position if any mask cell falls outside the frame, then test each cell directly.
pub fn hom_oracle(img: &BinaryImage, mask: &TriValuedMask) -> BinaryImage {
    let (w, h) = (img.width() as i64, img.height() as i64);
    let n = mask.size() as i64;
    let (ar, ac) = (mask.anchor().0 as i64, mask.anchor().1 as i64);
    let mut out = BinaryImage::new(img.width(), img.height());
    for zr in 0..h {
        for zc in 0..w {
            let mut fits = true;
            let mut hit = true;
            for mr in 0..n {
                for mc in 0..n {
                    let (r, c) = (zr + mr - ar, zc + mc - ac);
                    if r < 0 || c < 0 || r >= h || c >= w {
                        fits = false;
                        continue;
                    }
                    let v = img.get(r as usize, c as usize);
                    match mask.get(mr as usize, mc as usize) {
                        MaskCell::Fg if !v => hit = false,
                        MaskCell::Bg if v => hit = false,
                        _ => {}
                    }
                }
            }
            out.set(zr as usize, zc as usize, fits && hit);
        }
    }
    out
}

pub fn thin_oracle(img: &BinaryImage, mask: &TriValuedMask) -> BinaryImage {
    let hits = hom_oracle(img, mask);
    let mut out = img.clone();
    for r in 0..img.height() {
        for c in 0..img.width() {
            if hits.get(r, c) {
                out.set(r, c, false);
            }
        }
    }
    out
}

pub fn thicken_oracle(img: &BinaryImage, mask: &TriValuedMask) -> BinaryImage {
    let hits = hom_oracle(img, mask);
    let mut out = img.clone();
    for r in 0..img.height() {
        for c in 0..img.width() {
            if hits.get(r, c) {
                out.set(r, c, true);
            }
        }
    }
    out
}

/// One chain step on a string-matrix layer, evaluated cell by cell. `*` base cells never
/// match a constraint and are never rewritten.
pub fn chain_layer_oracle(base: &Layer, mask_layer: &Layer, thicken: bool) -> Layer {
    let n = base.size() as i64;
    let m = mask_layer.size() as i64;
    let a = m / 2;
    let mut cells = base.cells().to_vec();
    for zr in 0..n {
        for zc in 0..n {
            if zr - a < 0 || zc - a < 0 || zr - a + m > n || zc - a + m > n {
                continue;
            }
            let mut hit = true;
            for mr in 0..m {
                for mc in 0..m {
                    let v = base.get((zr + mr - a) as usize, (zc + mc - a) as usize);
                    match mask_layer.get(mr as usize, mc as usize) {
                        Symbol::One => hit &= v == Symbol::One,
                        Symbol::Zero => hit &= v == Symbol::Zero,
                        Symbol::Star => {}
                    }
                }
            }
            if hit {
                let i = (zr * n + zc) as usize;
                cells[i] = if thicken { Symbol::One } else { Symbol::Zero };
            }
        }
    }
    Layer::new(base.size(), cells).unwrap()
}

/// Evaluates the pyramid formula directly at every cell: the sum over sources of
/// `count * height * (radius + 1 - k)` for Chebyshev distance `k <= radius`.
pub fn ids_oracle(
    template: &DataPlane,
    sources: &[Source],
    radius: usize,
    height: u64,
) -> DataPlane {
    let mut out = template.blank();
    for col in 0..out.nx() {
        for row in 0..out.ny() {
            let mut v = 0u64;
            for s in sources {
                let k = s.col.abs_diff(col).max(s.row.abs_diff(row));
                if k <= radius {
                    v += s.count * height * (radius + 1 - k) as u64;
                }
            }
            out.set(col, row, v);
        }
    }
    out
}

pub fn image_from_bits(w: usize, h: usize, bits: u64) -> BinaryImage {
    BinaryImage::from_bits(w, h, bits)
}
