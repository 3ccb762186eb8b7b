mod common;

use mihailova_core::autf3::{theta, theta_raw, Endomorphism3};
use mihailova_core::Word;
use rand::Rng;

fn endo(rng: &mut impl Rng) -> Endomorphism3 {
    let mut g = || common::random_word(rng, 3, 8);
    Endomorphism3::new(g(), g(), g()).unwrap()
}

#[test]
fn compose_is_associative() {
    let mut rng = common::rng(21);
    for _ in 0..200 {
        let (a, b, c) = (endo(&mut rng), endo(&mut rng), endo(&mut rng));
        assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
    }
}

#[test]
fn compose_applies_left_factor_first() {
    let mut rng = common::rng(22);
    for _ in 0..100 {
        let (a, b) = (endo(&mut rng), endo(&mut rng));
        let w = common::random_word(&mut rng, 3, 6);
        let expected = b.apply(&a.apply(&w).unwrap()).unwrap();
        assert_eq!(a.compose(&b).apply(&w).unwrap(), expected);
    }
}

#[test]
fn theta_reverses_products() {
    // With left-first composition theta is an anti-homomorphism.
    let mut rng = common::rng(23);
    for _ in 0..100 {
        let mut g = || common::random_word(&mut rng, 2, 5);
        let (u1, u2, v1, v2) = (g(), g(), g(), g());
        let lhs = theta(&(&u1 * &u2), &(&v1 * &v2)).unwrap();
        let rhs = theta(&u2, &v2).unwrap().compose(&theta(&u1, &v1).unwrap());
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn theta_raw_matches_theta() {
    let mut rng = common::rng(24);
    for _ in 0..50 {
        let (u, v) = (
            common::random_word(&mut rng, 2, 5),
            common::random_word(&mut rng, 2, 5),
        );
        assert_eq!(theta(&u, &v).unwrap(), theta_raw(&u.inverse(), &v).unwrap());
        assert!(theta(&u, &v)
            .unwrap()
            .compose(&theta(&u.inverse(), &v.inverse()).unwrap())
            .is_identity());
    }
    assert!(theta(&Word::identity(3), &Word::identity(2)).is_err());
}
