mod common;

use alm_core::extended::{
    chain_thicken, chain_thin, check_demorgan_extended, ext_thicken, ext_thin, NeutralElements,
    SizeOrder,
};
use alm_core::harness::{
    check_snorm, check_tnorm, reports_to_json, trial_rng, ExtendedSubject, Law, MatrixGenerator,
    MinMaxSubject, SwappedNeutrals,
};
use alm_core::string_matrix::{l_prime, left, save, Layer, StringMatrix, Symbol};
use proptest::prelude::*;

use common::chain_layer_oracle;

fn numeric(max_size: usize) -> impl Strategy<Value = StringMatrix> {
    (1..=max_size).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
            Layer::new(n, bits.into_iter().map(Symbol::from_bit).collect())
                .unwrap()
                .into_matrix()
        })
    })
}

fn chain_oracle(base: &Layer, chain: &StringMatrix, thicken: bool) -> Layer {
    chain
        .layers()
        .iter()
        .fold(base.clone(), |acc, l| chain_layer_oracle(&acc, l, thicken))
}

fn extended_oracle(a: &StringMatrix, b: &StringMatrix, thicken: bool) -> StringMatrix {
    if a.size() == b.size() {
        let s = if thicken { Symbol::One } else { Symbol::Zero };
        return StringMatrix::constant(a.size(), s);
    }
    let (larger, smaller) = if a.size() > b.size() { (a, b) } else { (b, a) };
    let numeric = chain_oracle(&left(larger), &l_prime(smaller), thicken);
    save(&numeric.into_matrix(), &save(&l_prime(a), &l_prime(b)))
}

#[test]
fn chain_of_one_mask_thins_like_a_single_step() {
    let base = Layer::from_rows(&["00000", "01110", "01110", "01110", "00000"]).unwrap();
    let chain: StringMatrix = "0 0 0\n* 1 *\n1 1 1".parse().unwrap();
    let thinned = chain_thin(&base, &chain).unwrap();
    assert_eq!(
        thinned,
        Layer::from_rows(&["00000", "01010", "01110", "01110", "00000"]).unwrap()
    );
}

#[test]
fn history_layers_come_from_both_operands() {
    let a: StringMatrix = "1 1 0\n0 1 1\n1 0 1".parse().unwrap();
    let b: StringMatrix = "1".parse().unwrap();
    let r = ext_thin(&a, &b);
    assert_eq!(r.size(), 3);
    assert_eq!(r.depth(), 3);
    assert_eq!(r.layers()[1], left(&a));
    assert_eq!(r.layers()[2], left(&b).padded(3));
}

#[test]
fn deep_operands_use_their_tails_as_chains() {
    let mut rng = trial_rng(5, 0, 0);
    let g = MatrixGenerator::default();
    for _ in 0..200 {
        let (a, b) = g.sample_unequal_pair(&mut rng);
        let c = g.sample(&mut rng);
        let ab = ext_thin(&a, &b);
        if ab.size() == c.size() {
            continue;
        }
        assert_eq!(ext_thin(&ab, &c), extended_oracle(&ab, &c, false));
        assert_eq!(ext_thicken(&c, &ab), extended_oracle(&c, &ab, true));
    }
}

#[test]
fn size_order_breaks_ties_by_argument_position() {
    let a: StringMatrix = "1 0\n0 1".parse().unwrap();
    let b: StringMatrix = "0 0\n1 1".parse().unwrap();
    assert_eq!(SizeOrder::max(&a, &b), &a);
    assert_eq!(SizeOrder::min(&a, &b), &b);
    assert!(SizeOrder::le(&a, &b) && SizeOrder::le(&b, &a));
}

#[test]
fn minmax_reference_norms_pass_every_law() {
    for reports in [
        check_snorm(&MinMaxSubject::max(), 300, 11),
        check_tnorm(&MinMaxSubject::min(), 300, 11),
    ] {
        for r in &reports {
            assert!(r.all_pass(), "{}", r.to_text());
        }
    }
}

#[test]
fn swapped_neutrals_are_caught() {
    let reports = check_snorm(&SwappedNeutrals(ExtendedSubject::thin()), 200, 3);
    let neutrality = reports
        .iter()
        .find(|r| r.law == Law::NeutralityOfZero)
        .unwrap();
    assert!(!neutrality.all_pass());
    assert!(!neutrality.counterexamples.is_empty());
}

#[test]
fn harness_is_deterministic_under_seed() {
    let a = reports_to_json(&check_snorm(&ExtendedSubject::thin(), 100, 9));
    let b = reports_to_json(&check_snorm(&ExtendedSubject::thin(), 100, 9));
    assert_eq!(a, b);
}

proptest! {
    #[test]
    fn chain_matches_fold_of_oracle_steps(base in numeric(9), chain in numeric(4)) {
        prop_assume!(chain.size() <= base.size());
        let b = left(&base);
        prop_assert_eq!(chain_thin(&b, &chain).unwrap(), chain_oracle(&b, &chain, false));
        prop_assert_eq!(chain_thicken(&b, &chain).unwrap(), chain_oracle(&b, &chain, true));
    }

    #[test]
    fn extended_ops_match_oracle(a in numeric(8), b in numeric(8)) {
        prop_assert_eq!(ext_thin(&a, &b), extended_oracle(&a, &b, false));
        prop_assert_eq!(ext_thicken(&a, &b), extended_oracle(&a, &b, true));
    }

    #[test]
    fn extended_ops_commute(a in numeric(8), b in numeric(8)) {
        prop_assert_eq!(ext_thin(&a, &b), ext_thin(&b, &a));
        prop_assert_eq!(ext_thicken(&a, &b), ext_thicken(&b, &a));
    }

    #[test]
    fn extended_de_morgan(a in numeric(8), b in numeric(8)) {
        prop_assert_eq!(check_demorgan_extended(&a, &b), (true, true));
    }

    #[test]
    fn neutral_elements_keep_the_numeric_layer(a in numeric(8)) {
        prop_assume!(a.size() > 1);
        prop_assert_eq!(left(&ext_thin(&a, &NeutralElements::zero())), left(&a));
        prop_assert_eq!(left(&ext_thicken(&a, &NeutralElements::one())), left(&a));
    }

    #[test]
    fn thinning_only_clears_and_thickening_only_sets(a in numeric(8), b in numeric(8)) {
        prop_assume!(a.size() != b.size());
        let larger = if a.size() > b.size() { &a } else { &b };
        let base = left(larger);
        let thin = left(&ext_thin(&a, &b));
        let thick = left(&ext_thicken(&a, &b));
        for ((&x, &t), &k) in base.cells().iter().zip(thin.cells()).zip(thick.cells()) {
            prop_assert!(t == x || (x == Symbol::One && t == Symbol::Zero));
            prop_assert!(k == x || (x == Symbol::Zero && k == Symbol::One));
        }
    }
}
