//! Extended Thinning and Extended Thickening over string matrices.
//!
//! For operands of different sizes the larger operand's numeric layer is thinned (or
//! thickened) by every layer of the smaller operand's `L'` chain in turn, and the result
//! is saved together with both operands' `L'` histories. Operands of equal size collapse
//! to the constant all-`0` (thinning) or all-`1` (thickening) matrix.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::morphology::hit_or_miss_grid;
use crate::string_matrix::{l_prime, left, save, Layer, StringMatrix, Symbol};

/// Orders matrices by size only; contents are ignored.
#[derive(Debug, Clone, Copy, Default)]
pub struct SizeOrder;

impl SizeOrder {
    pub fn cmp(a: &StringMatrix, b: &StringMatrix) -> Ordering {
        a.size().cmp(&b.size())
    }

    pub fn le(a: &StringMatrix, b: &StringMatrix) -> bool {
        a.size() <= b.size()
    }

    /// The larger operand; `a` on ties.
    pub fn max<'a>(a: &'a StringMatrix, b: &'a StringMatrix) -> &'a StringMatrix {
        if b.size() > a.size() {
            b
        } else {
            a
        }
    }

    /// The smaller operand; `b` on ties.
    pub fn min<'a>(a: &'a StringMatrix, b: &'a StringMatrix) -> &'a StringMatrix {
        if b.size() > a.size() {
            a
        } else {
            b
        }
    }
}

/// Neutral elements: `[0]` (1x1) for Extended Thinning, `[1]` (1x1) for Extended Thickening.
pub struct NeutralElements;

impl NeutralElements {
    pub fn zero() -> StringMatrix {
        StringMatrix::constant(1, Symbol::Zero)
    }

    pub fn one() -> StringMatrix {
        StringMatrix::constant(1, Symbol::One)
    }
}

#[derive(Clone, Copy)]
enum ChainOp {
    Thin,
    Thicken,
}

fn apply_layer(base: &Layer, mask_layer: &Layer, op: ChainOp) -> Layer {
    let n = base.size();
    let hits = hit_or_miss_grid(n, n, |r, c| base.get(r, c).bit(), &mask_layer.to_mask());
    let cells = base
        .cells()
        .iter()
        .zip(hits)
        .map(|(&s, hit)| match (op, s, hit) {
            (ChainOp::Thin, Symbol::One, true) => Symbol::Zero,
            (ChainOp::Thicken, Symbol::Zero, true) => Symbol::One,
            _ => s,
        })
        .collect();
    Layer::new(n, cells).expect("same size as base")
}

fn chain_apply(base: &Layer, chain: &StringMatrix, op: ChainOp) -> Result<Layer> {
    if chain.size() > base.size() {
        return Err(Error::ChainTooLarge {
            chain: chain.size(),
            base: base.size(),
        });
    }
    Ok(chain
        .layers()
        .iter()
        .fold(base.clone(), |acc, layer| apply_layer(&acc, layer, op)))
}

/// Thins `base` once by each layer of `chain`, in layer order. `*` cells of `base` match
/// neither FG nor BG and are never changed.
pub fn chain_thin(base: &Layer, chain: &StringMatrix) -> Result<Layer> {
    chain_apply(base, chain, ChainOp::Thin)
}

/// Thickening counterpart of [`chain_thin`].
pub fn chain_thicken(base: &Layer, chain: &StringMatrix) -> Result<Layer> {
    chain_apply(base, chain, ChainOp::Thicken)
}

fn extended(a: &StringMatrix, b: &StringMatrix, op: ChainOp) -> StringMatrix {
    if a.size() == b.size() {
        let constant = match op {
            ChainOp::Thin => Symbol::Zero,
            ChainOp::Thicken => Symbol::One,
        };
        return StringMatrix::constant(a.size(), constant);
    }
    let larger = SizeOrder::max(a, b);
    let smaller = SizeOrder::min(a, b);
    let numeric = chain_apply(&left(larger), &l_prime(smaller), op)
        .expect("smaller operand always fits the larger");
    save(&numeric.into_matrix(), &save(&l_prime(a), &l_prime(b)))
}

/// Extended Thinning.
pub fn ext_thin(a: &StringMatrix, b: &StringMatrix) -> StringMatrix {
    extended(a, b, ChainOp::Thin)
}

/// Extended Thickening.
pub fn ext_thicken(a: &StringMatrix, b: &StringMatrix) -> StringMatrix {
    extended(a, b, ChainOp::Thicken)
}

/// Characterwise `0 ↔ 1`; `*` fixed.
pub fn complement_sm(a: &StringMatrix) -> StringMatrix {
    a.complement()
}

/// Checks the two De Morgan identities on the numeric layer:
/// `L((Aᶜ × Bᶜ)ᶜ) = L(A ∘ B)` and `L((Aᶜ ∘ Bᶜ)ᶜ) = L(A × B)`.
pub fn check_demorgan_extended(a: &StringMatrix, b: &StringMatrix) -> (bool, bool) {
    let (ac, bc) = (complement_sm(a), complement_sm(b));
    let thin_dual = left(&complement_sm(&ext_thin(&ac, &bc))) == left(&ext_thicken(a, b));
    let thicken_dual = left(&complement_sm(&ext_thicken(&ac, &bc))) == left(&ext_thin(a, b));
    (thin_dual, thicken_dual)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::string_matrix::layers;

    fn m(text: &str) -> StringMatrix {
        text.parse().unwrap()
    }

    #[test]
    fn equal_sizes_give_constants() {
        let a = m("0 1 1\n1 0 0\n0 0 1");
        let b = m("1 1 1\n0 0 0\n1 1 1");
        assert_eq!(ext_thin(&a, &b), StringMatrix::constant(3, Symbol::Zero));
        assert_eq!(ext_thicken(&a, &b), StringMatrix::constant(3, Symbol::One));
    }

    #[test]
    fn neutral_chains_leave_base_alone() {
        let base = Layer::from_rows(&["0110", "1111", "01*1", "1001"]).unwrap();
        assert_eq!(chain_thin(&base, &NeutralElements::zero()).unwrap(), base);
        assert_eq!(chain_thicken(&base, &NeutralElements::one()).unwrap(), base);
    }

    #[test]
    fn chain_larger_than_base_rejected() {
        let base = Layer::filled(2, Symbol::One);
        let chain = StringMatrix::constant(3, Symbol::Star);
        assert!(matches!(
            chain_thin(&base, &chain),
            Err(Error::ChainTooLarge { chain: 3, base: 2 })
        ));
    }

    #[test]
    fn star_cells_in_base_pass_through() {
        let base = Layer::from_rows(&["***", "***", "***"]).unwrap();
        let chain = m("0");
        assert_eq!(chain_thicken(&base, &chain).unwrap(), base);
        let chain = m("1");
        assert_eq!(chain_thin(&base, &chain).unwrap(), base);
    }

    #[test]
    fn zero_neutral_keeps_numeric_layer_and_records_history() {
        let a = m("0 1 1\n1 1 0\n0 1 1");
        let r = ext_thin(&a, &NeutralElements::zero());
        assert_eq!(left(&r), left(&a));
        assert_eq!(r.depth(), 3);
        assert_eq!(layers(&r)[1], left(&a));
        assert_eq!(
            layers(&r)[2],
            Layer::from_rows(&["0**", "***", "***"]).unwrap()
        );
    }

    #[test]
    fn result_shape_formula() {
        let a = m("010 011\n111 000");
        let b = m("1 0 1\n0 1 1\n0 0 0");
        let r = ext_thin(&a, &b);
        assert_eq!(r.size(), 3);
        assert_eq!(r.depth(), 1 + l_prime(&a).depth() + l_prime(&b).depth());
        assert_eq!(r, ext_thin(&b, &a));
    }

    #[test]
    fn complement_examples() {
        assert_eq!(complement_sm(&m("0")), m("1"));
        assert_eq!(complement_sm(&m("01*")), m("10*"));
        let a = m("01* 110\n*** 001");
        assert_eq!(complement_sm(&complement_sm(&a)), a);
    }

    #[test]
    fn demorgan_with_neutral_pair() {
        let a = m("0 1 1\n1 1 0\n0 1 1");
        assert_eq!(
            check_demorgan_extended(&a, &NeutralElements::zero()),
            (true, true)
        );
        assert_eq!(
            check_demorgan_extended(&a, &NeutralElements::one()),
            (true, true)
        );
        // equal sizes: complement of the all-0 constant is the all-1 constant
        let b = m("1 1 1\n0 0 0\n1 0 1");
        assert_eq!(check_demorgan_extended(&a, &b), (true, true));
        assert_eq!(complement_sm(&ext_thin(&a, &b)), ext_thicken(&a, &b));
    }
}
