mod common;

use common::*;
use peakalg::algebra::{BnElement, SnElement};
use peakalg::bases::{ideal_membership, peak_coords, peak_element_from_coords, phi, pi, PeakBasis, PeakCoords};
use peakalg::lie::{check_convolution_split, monomial_battery, Alphabet, TensorElement};
use peakalg::permutations::{GroupElement, Permutation, SignedPermutation};
use peakalg::Caps;
use proptest::prelude::*;

fn sn_element(n: usize) -> impl Strategy<Value = SnElement> {
    let order = Permutation::group_order(n);
    proptest::collection::vec((0..order, -4i64..5), 0..6).prop_map(move |ts| {
        ts.into_iter().fold(SnElement::zero(n), |acc, (r, c)| {
            &acc + &SnElement::term(Permutation::unrank(n, r), int(c))
        })
    })
}

fn bn_element(n: usize) -> impl Strategy<Value = BnElement> {
    let order = SignedPermutation::group_order(n);
    proptest::collection::vec((0..order, -4i64..5), 0..6).prop_map(move |ts| {
        ts.into_iter().fold(BnElement::zero(n), |acc, (r, c)| {
            &acc + &BnElement::term(SignedPermutation::unrank(n, r), int(c))
        })
    })
}

fn peak_coordinates(n: usize, basis: PeakBasis) -> impl Strategy<Value = PeakCoords> {
    let dim = fib(n as i64) as usize;
    proptest::collection::vec(-3i64..4, dim)
        .prop_map(move |v| PeakCoords { n, basis, coords: v.into_iter().map(int).collect() })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn forgetting_signs_is_multiplicative(u in bn_element(3), v in bn_element(3)) {
        prop_assert_eq!(phi(&(&u * &v)), &phi(&u) * &phi(&v));
    }

    #[test]
    fn convolution_is_associative(a in sn_element(2), b in sn_element(1), c in sn_element(2)) {
        prop_assert_eq!(a.convolution(&b).convolution(&c), a.convolution(&b.convolution(&c)));
    }

    #[test]
    fn peak_algebra_is_closed(x in peak_coordinates(5, PeakBasis::Q), y in peak_coordinates(5, PeakBasis::Obar)) {
        let caps = Caps::default();
        let u = peak_element_from_coords(&x, &caps).unwrap();
        let v = peak_element_from_coords(&y, &caps).unwrap();
        let w = &u * &v;
        prop_assert!(peak_coords(&w, PeakBasis::P, &caps).is_ok());
        prop_assert_eq!(peak_coords(&u, PeakBasis::Q, &caps).unwrap(), x);
        prop_assert_eq!(pi(&w, &caps).unwrap().unwrap(), &pi(&u, &caps).unwrap().unwrap() * &pi(&v, &caps).unwrap().unwrap());
    }

    #[test]
    fn ideals_are_two_sided(x in peak_coordinates(6, PeakBasis::P), j in 0usize..4) {
        let caps = Caps::default();
        // Ō_γ with b_0 ≤ 2j spans the ideal; a product with anything stays inside
        let u = peak_element_from_coords(&x, &caps).unwrap();
        let gens: Vec<SnElement> = peakalg::bases::peak_basis_elements(PeakBasis::Obar, 6, &caps).unwrap()
            .into_iter()
            .filter(|g| ideal_membership(g, j, &caps).unwrap())
            .collect();
        for g in gens.iter().take(4) {
            prop_assert!(ideal_membership(&(&u * g), j, &caps).unwrap());
            prop_assert!(ideal_membership(&(g * &u), j, &caps).unwrap());
        }
    }

    #[test]
    fn action_is_linear(u in sn_element(4), v in sn_element(4), seed in 0u64..1000) {
        let m = &monomial_battery(4, seed, 1)[seed as usize % 8];
        let w = m.expand();
        let sum = w.act_s(&(&u + &v)).unwrap();
        prop_assert_eq!(sum, &w.act_s(&u).unwrap() + &w.act_s(&v).unwrap());
    }

    #[test]
    fn convolution_splits_over_factors(u in sn_element(2), v in sn_element(3), seed in 0u64..1000) {
        let alph = Alphabet::standard(5);
        for m in monomial_battery(5, seed, 1).iter().step_by(3) {
            prop_assert!(check_convolution_split(m, &u, &v, &alph).unwrap());
        }
    }

    #[test]
    fn signed_convolution_splits(u in bn_element(2), v in bn_element(2), seed in 0u64..1000) {
        let alph = Alphabet::new("abcdAB").unwrap().with_pairs(&[('a', 'A'), ('b', 'B')]).unwrap();
        for m in monomial_battery(4, seed, 1) {
            prop_assert!(check_convolution_split(&m, &u, &v, &alph).unwrap());
        }
    }
}

#[test]
fn faithful_on_distinct_letters() {
    let w = TensorElement::from_word("abcd").unwrap();
    for r in 0..24 {
        let u = SnElement::basis(Permutation::unrank(4, r));
        let image = w.act_s(&u).unwrap();
        assert_eq!(image.len(), 1);
        let (word, _) = image.iter().next().unwrap();
        let back: Vec<usize> = word.iter().map(|&b| (b - b'a' + 1) as usize).collect();
        assert_eq!(Permutation::from_slice(&back).unwrap(), Permutation::unrank(4, r));
    }
}
