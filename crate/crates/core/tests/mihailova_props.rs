mod common;

use mihailova_core::mihailova::{ball_count, in_kernel_of_pi, pi, relator_family};
use mihailova_core::{MixedWord, SyllableForm};
use proptest::prelude::*;
use rand::Rng;

fn mixed(rng: &mut impl Rng, max_len: usize) -> MixedWord {
    MixedWord::new(2, 1, common::random_word(rng, 3, max_len)).unwrap()
}

#[test]
fn pi_is_a_homomorphism() {
    for p in [common::torus(), common::trefoil()] {
        let mut rng = common::rng(3);
        for _ in 0..500 {
            let (u, v) = (mixed(&mut rng, 8), mixed(&mut rng, 8));
            let lhs = pi(&p, &u.mul(&v)).unwrap();
            let rhs = pi(&p, &u).unwrap().mul(&pi(&p, &v).unwrap());
            assert_eq!(lhs, rhs, "pi({u} . {v})");
            assert!(pi(&p, &u.mul(&u.inverse())).unwrap().is_identity());
        }
    }
}

#[test]
fn relator_family_counts_and_kernel() {
    for p in [common::torus(), common::trefoil()] {
        for radius in 0..=2 {
            let family = relator_family(&p, radius).unwrap();
            assert_eq!(family.len(), ball_count(2, radius) + 1);
            for r in &family {
                assert!(in_kernel_of_pi(&p, r).unwrap(), "{r}");
            }
        }
    }
    assert_eq!(
        (0..=3).map(|r| ball_count(2, r)).collect::<Vec<_>>(),
        vec![1, 5, 17, 53]
    );
}

#[test]
fn random_kernel_words_are_in_the_kernel() {
    let p = common::trefoil();
    let mut rng = common::rng(5);
    for _ in 0..100 {
        let w = common::random_kernel_word(&mut rng, &p, 4);
        assert!(pi(&p, &w).unwrap().is_identity());
    }
}

proptest! {
    #[test]
    fn syllable_round_trip(ints in prop::collection::vec(prop_oneof![-3i32..=-1, 1i32..=3], 0..24)) {
        let w = MixedWord::new(2, 1, mihailova_core::Word::from_ints(3, &ints).unwrap()).unwrap();
        let form = SyllableForm::decompose(&w);
        prop_assert!(form.is_reduced());
        prop_assert_eq!(form.syllables.len(), form.t_letters.len() + 1);
        prop_assert_eq!(form.recompose(), w);
    }
}
