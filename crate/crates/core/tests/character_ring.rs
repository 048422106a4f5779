use dirac_core::charring::{decompose, irreducible_character, weyl_dimension, weyl_numerator, VirtualDecomposition};
use dirac_core::{FormalCharacter, RootSystem, Weight, WeylSystem};
use proptest::prelude::*;

fn small_character(rank: usize) -> impl Strategy<Value = FormalCharacter> {
    prop::collection::vec((prop::collection::vec(-3i64..=3, rank), -4i64..=4), 0..6)
        .prop_map(|terms| FormalCharacter::from_terms(terms.into_iter().map(|(w, m)| (Weight::from_ints(w), m))))
}

fn system(t: &str) -> RootSystem {
    RootSystem::new(&t.parse().unwrap()).unwrap()
}

fn dominant(rank: usize, max: i64) -> impl Strategy<Value = Weight> {
    prop::collection::vec(0..=max, rank).prop_map(Weight::from_ints)
}

proptest! {
    #[test]
    fn ring_laws(a in small_character(2), b in small_character(2), c in small_character(2)) {
        let one = FormalCharacter::monomial(Weight::zero(2));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &one, a.clone());
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(a.dual().dual(), a.clone());
        prop_assert_eq!((&a * &b).mass(), a.mass() * b.mass());
    }

    #[test]
    fn json_round_trip(a in small_character(3)) {
        let text = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<FormalCharacter>(&text).unwrap(), a);
    }

    #[test]
    fn weyl_formula_on_rank_two(lam in dominant(2, 3), t in prop::sample::select(vec!["A2", "B2", "C2", "G2", "A1xA1"])) {
        let g = system(t);
        let ch = irreducible_character(&g, &lam).unwrap();
        let lhs = ch.multiply(&weyl_numerator(&g, g.rho()).unwrap());
        prop_assert_eq!(lhs, weyl_numerator(&g, &(&lam + g.rho())).unwrap());
        prop_assert_eq!(ch.mass() as u64, weyl_dimension(&g, &lam).unwrap());
        for i in 0..2 {
            prop_assert_eq!(ch.map_weights(|w| g.reflect_simple(w, i)), ch.clone());
        }
        prop_assert_eq!(ch.mult(&lam), 1);
    }

    #[test]
    fn decompose_inverts_reconstruct(
        parts in prop::collection::btree_map(prop::collection::vec(0i64..=2, 2), prop::sample::select(vec![-3i64, -2, -1, 1, 2, 3]), 0..4),
        t in prop::sample::select(vec!["A2", "B2", "G2"]),
    ) {
        let g = system(t);
        let v = VirtualDecomposition::from_pairs(parts.into_iter().map(|(w, c)| (Weight::from_ints(w), c)));
        let back = decompose(&v.reconstruct(&g).unwrap(), &g).unwrap();
        prop_assert_eq!(back.sorted(), v.sorted());
    }
}

#[test]
fn rank_three_dimensions() {
    // Dimensions of the fundamental representations.
    for (t, dims) in [("A3", vec![4, 6, 4]), ("B3", vec![7, 21, 8]), ("C3", vec![6, 14, 14])] {
        let g = system(t);
        for (i, d) in dims.into_iter().enumerate() {
            let w = &g.fundamental_weights()[i];
            assert_eq!(irreducible_character(&g, w).unwrap().mass(), d, "{t} omega_{}", i + 1);
        }
    }
}

#[test]
fn tensor_square_of_the_a2_standard_module() {
    let g = system("A2");
    let v = irreducible_character(&g, &Weight::from_ints([1, 0])).unwrap();
    let d = decompose(&(&v * &v), &g).unwrap();
    assert_eq!(d.sorted(), vec![(Weight::from_ints([0, 1]), 1), (Weight::from_ints([2, 0]), 1)]);
}
