use alm_core::string_matrix::{
    l_prime, layers, left, right, save, save_all, tail, Layer, StringMatrix, Symbol,
};
use proptest::prelude::*;

fn symbol() -> impl Strategy<Value = Symbol> {
    prop_oneof![Just(Symbol::Zero), Just(Symbol::One), Just(Symbol::Star)]
}

fn matrix(max_size: usize, max_depth: usize) -> impl Strategy<Value = StringMatrix> {
    (1..=max_size, 1..=max_depth).prop_flat_map(|(n, d)| {
        proptest::collection::vec(proptest::collection::vec(symbol(), n * n), d).prop_map(
            move |layers| {
                StringMatrix::from_layers(
                    layers
                        .into_iter()
                        .map(|cells| Layer::new(n, cells).unwrap())
                        .collect(),
                )
                .unwrap()
            },
        )
    })
}

#[test]
fn text_round_trip_of_padded_matrix() {
    let m: StringMatrix = "10 01 0*\n01 00 0*\n0* 1* 0*".parse().unwrap();
    assert_eq!(m.to_text().parse::<StringMatrix>().unwrap(), m);
    assert_eq!(m.depth(), 2);
    assert_eq!(m.cell(2, 1).to_string(), "1*");
}

#[test]
fn rectangular_input_is_padded_with_stars() {
    let m: StringMatrix = "01 10 11".parse().unwrap();
    assert_eq!(m.size(), 3);
    assert_eq!(m.cell(1, 0).to_string(), "**");
    assert_eq!(m.cell(0, 2).to_string(), "11");
}

#[test]
fn save_all_folds_left() {
    let a: StringMatrix = "1".parse().unwrap();
    let b: StringMatrix = "0 1\n1 0".parse().unwrap();
    let c: StringMatrix = "1 1\n1 1".parse().unwrap();
    let all = save_all([&a, &b, &c]).unwrap();
    assert_eq!(all, save(&save(&a, &b), &c));
    assert_eq!(all.cell(0, 0).to_string(), "011");
    assert_eq!(all.cell(1, 1).to_string(), "0*1");
    assert!(save_all(std::iter::empty()).is_none());
}

proptest! {
    #[test]
    fn save_size_and_depth(a in matrix(6, 3), b in matrix(6, 3)) {
        let s = save(&a, &b);
        prop_assert_eq!(s.size(), a.size().max(b.size()));
        prop_assert_eq!(s.depth(), a.depth() + b.depth());
    }

    #[test]
    fn save_commutes_across_sizes(a in matrix(6, 2), b in matrix(6, 2)) {
        prop_assume!(a.size() != b.size());
        prop_assert_eq!(save(&a, &b), save(&b, &a));
    }

    #[test]
    fn save_keeps_larger_operand_layers_first(a in matrix(6, 3), b in matrix(6, 3)) {
        let s = save(&a, &b);
        let (first, second) = if b.size() > a.size() { (&b, &a) } else { (&a, &b) };
        let n = s.size();
        let expected: Vec<Layer> = first
            .layers()
            .iter()
            .chain(second.layers())
            .map(|l| l.padded(n))
            .collect();
        prop_assert_eq!(layers(&s), expected);
    }

    #[test]
    fn left_tail_right_reassemble(a in matrix(5, 5)) {
        let rebuilt = match tail(&a) {
            _ if a.depth() == 1 => a.clone(),
            Some(t) => save(&save(&left(&a).into_matrix(), &t), &right(&a).into_matrix()),
            None => save(&left(&a).into_matrix(), &right(&a).into_matrix()),
        };
        prop_assert_eq!(rebuilt, a);
    }

    #[test]
    fn l_prime_drops_the_first_layer(a in matrix(5, 5)) {
        let lp = l_prime(&a);
        if a.depth() == 1 {
            prop_assert_eq!(lp, a);
        } else {
            prop_assert_eq!(layers(&lp), a.layers()[1..].to_vec());
        }
    }

    #[test]
    fn complement_is_an_involution(a in matrix(5, 3)) {
        prop_assert_eq!(a.complement().complement(), a.clone());
        let stars_before = a.layers().iter().flat_map(|l| l.cells()).filter(|&&s| s == Symbol::Star).count();
        let c = a.complement();
        let stars_after = c.layers().iter().flat_map(|l| l.cells()).filter(|&&s| s == Symbol::Star).count();
        prop_assert_eq!(stars_before, stars_after);
    }

    #[test]
    fn text_round_trip(a in matrix(5, 4)) {
        prop_assert_eq!(a.to_text().parse::<StringMatrix>().unwrap(), a);
    }
}
