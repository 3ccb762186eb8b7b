#![allow(dead_code)]

use mihailova_core::freegroup::Word;
use mihailova_core::mihailova::relator_family;
use mihailova_core::{MixedWord, Presentation};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn torus() -> Presentation {
    Presentation::from_ints(2, &[&[1, 2, -1, -2]]).unwrap()
}

/// `<x1, x2 | x1^2 x2^-3>`.
pub fn trefoil() -> Presentation {
    Presentation::from_ints(2, &[&[1, 1, -2, -2, -2]]).unwrap()
}

pub fn random_word(rng: &mut impl Rng, rank: usize, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    let ints: Vec<i32> = (0..len)
        .map(|_| {
            let g = rng.gen_range(1..=rank as i32);
            if rng.gen_bool(0.5) {
                g
            } else {
                -g
            }
        })
        .collect();
    Word::from_ints(rank, &ints).unwrap()
}

/// Reduced product of `1..=max_factors` relators (or their inverses) drawn
/// from the family with `|d| <= 2`.
pub fn random_kernel_word(rng: &mut impl Rng, p: &Presentation, max_factors: usize) -> MixedWord {
    let family = relator_family(p, 2).unwrap();
    let k = rng.gen_range(1..=max_factors);
    let mut w = MixedWord::identity(p.rank(), p.relator_count());
    for _ in 0..k {
        let r = family.choose(rng).unwrap();
        let r = if rng.gen_bool(0.5) {
            r.clone()
        } else {
            r.inverse()
        };
        w = w.mul(&r);
    }
    w
}

use mihailova_core::identities::{
    case1_form, case2_form, case3_form, identity_of_form, insertion_for, inverse_case1_form,
    InsertionData,
};
use mihailova_core::mihailova::in_kernel_of_pi;
use mihailova_core::{Sign, SyllableForm};

/// Checks, at every position of the syllable form of `w`, that each word
/// transform carries the identity exactly as the matching Peiffer move does.
/// Returns the number of moves compared.
pub fn check_coherence(p: &Presentation, w: &MixedWord, rng: &mut impl Rng) -> usize {
    let form = SyllableForm::decompose(w);
    let identity = identity_of_form(&form);
    let l = identity.len();
    let mut checked = 0;
    let kernel = |f: &SyllableForm| in_kernel_of_pi(p, &f.recompose()).unwrap();
    for k in 1..l {
        let ex = case1_form(p, &form, k).unwrap();
        assert_eq!(
            identity_of_form(&ex),
            identity.peiffer_exchange(p, k).unwrap()
        );
        assert!(kernel(&ex));
        assert_eq!(inverse_case1_form(p, &ex, k).unwrap().recompose(), *w);

        let inv = inverse_case1_form(p, &form, k).unwrap();
        assert_eq!(
            identity_of_form(&inv),
            identity.peiffer_inverse_exchange(p, k).unwrap()
        );
        assert!(kernel(&inv));

        let deleted = case2_form(p, &form, k);
        assert_eq!(
            deleted.is_ok(),
            identity.can_delete(p, k),
            "deletion at {k} of {w}"
        );
        if let Ok(d) = deleted {
            assert_eq!(identity_of_form(&d), identity.peiffer_delete(p, k).unwrap());
            assert!(kernel(&d));
            checked += 1;
        }
        checked += 2;
    }
    for position in 1..=l + 1 {
        let data = InsertionData {
            position,
            relator: rng.gen_range(1..=p.relator_count()),
            sign: if rng.gen_bool(0.5) {
                Sign::Plus
            } else {
                Sign::Minus
            },
            power: rng.gen_range(-2..=2),
            alpha: random_word(rng, p.rank(), 2),
        };
        let inserted = case3_form(p, &form, &data).unwrap();
        let expected = identity
            .peiffer_insert(p, position, &insertion_for(&identity, &data))
            .unwrap();
        assert_eq!(identity_of_form(&inserted), expected);
        assert!(kernel(&inserted));
        let back = case2_form(p, &inserted, position).unwrap();
        assert_eq!(back.recompose(), *w);
        checked += 1;
    }
    checked
}
