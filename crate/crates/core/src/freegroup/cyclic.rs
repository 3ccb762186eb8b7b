use super::{Letter, Word};
use crate::error::{Error, Result};

/// Splits `w` as `conjugator * core * conjugator^-1` with `core` cyclically reduced.
pub fn cyclic_reduce(w: &Word) -> (Word, Word) {
    let letters = w.letters();
    let n = letters.len();
    let mut k = 0;
    while 2 * k + 1 < n && letters[k].is_inverse_of(letters[n - 1 - k]) {
        k += 1;
    }
    let core = Word::from_reduced_unchecked(w.rank(), letters[k..n - k].to_vec());
    let conjugator = Word::from_reduced_unchecked(w.rank(), letters[..k].to_vec());
    (core, conjugator)
}

/// Index of the lexicographically least rotation (two-pointer scan).
fn least_rotation(s: &[Letter]) -> usize {
    let n = s.len();
    let (mut i, mut j, mut k) = (0usize, 1usize, 0usize);
    while i < n && j < n && k < n {
        let (a, b) = (s[(i + k) % n], s[(j + k) % n]);
        if a == b {
            k += 1;
            continue;
        }
        if a > b {
            i += k + 1;
        } else {
            j += k + 1;
        }
        if i == j {
            j += 1;
        }
        k = 0;
    }
    i.min(j).min(n.saturating_sub(1))
}

/// Canonical representative of the cyclic word of a cyclically reduced core:
/// returns `(rotation, offset)` where `rotation = core[offset..] ++ core[..offset]`.
pub fn minimal_rotation(core: &Word) -> (Word, usize) {
    let s = core.letters();
    let k = least_rotation(s);
    let mut letters = Vec::with_capacity(s.len());
    letters.extend_from_slice(&s[k..]);
    letters.extend_from_slice(&s[..k]);
    (Word::from_reduced_unchecked(core.rank(), letters), k)
}

/// Conjugacy in a free group: equal cyclic cores up to rotation.
pub fn are_conjugate(a: &Word, b: &Word) -> bool {
    if a.rank() != b.rank() {
        return false;
    }
    let (ca, _) = cyclic_reduce(a);
    let (cb, _) = cyclic_reduce(b);
    if ca.len() != cb.len() {
        return false;
    }
    minimal_rotation(&ca).0 == minimal_rotation(&cb).0
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootDecomposition {
    pub root: Word,
    pub exponent: u32,
}

/// The unique `(s, k)` with `w = s^k`, `k >= 1` and `s` not a proper power.
pub fn root(w: &Word) -> Result<RootDecomposition> {
    if w.is_identity() {
        return Err(Error::TrivialRoot);
    }
    let (core, conjugator) = cyclic_reduce(w);
    let z = core.letters();
    let n = z.len();
    let period = (1..=n)
        .find(|&p| n % p == 0 && (p..n).all(|i| z[i] == z[i - p]))
        .expect("full length is always a period");
    let base = Word::from_reduced_unchecked(w.rank(), z[..period].to_vec());
    let root = &(&conjugator * &base) * &conjugator.inverse();
    Ok(RootDecomposition {
        root,
        exponent: (n / period) as u32,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(ints: &[i32]) -> Word {
        Word::from_ints(2, ints).unwrap()
    }

    #[test]
    fn cyclic_reduce_examples() {
        let (core, c) = cyclic_reduce(&w(&[2, 1, -2]));
        assert_eq!((core.to_ints(), c.to_ints()), (vec![1], vec![2]));
        let (core, c) = cyclic_reduce(&w(&[1, 2]));
        assert_eq!((core.to_ints(), c.to_ints()), (vec![1, 2], vec![]));
        let (core, c) = cyclic_reduce(&w(&[]));
        assert!(core.is_empty() && c.is_empty());
    }

    #[test]
    fn cyclic_reduce_single_letter_conjugates() {
        let word = w(&[1, 2, 2, -1]);
        let (core, c) = cyclic_reduce(&word);
        assert_eq!(core.to_ints(), vec![2, 2]);
        assert_eq!(&(&c * &core) * &c.inverse(), word);
    }

    #[test]
    fn conjugacy_examples() {
        let a = w(&[1, 2, -1, 1]);
        assert!(are_conjugate(&a, &a));
        assert!(are_conjugate(&w(&[1, 2]), &w(&[2, 1])));
        assert!(!are_conjugate(&w(&[1]), &w(&[2])));
        assert!(!are_conjugate(&w(&[1, 2]), &w(&[-2, -1])));
    }

    #[test]
    fn root_examples() {
        let r = root(&w(&[1])).unwrap();
        assert_eq!((r.root.to_ints(), r.exponent), (vec![1], 1));
        let r = root(&w(&[1, 2, 1, 2, 1, 2])).unwrap();
        assert_eq!((r.root.to_ints(), r.exponent), (vec![1, 2], 3));
        let r = root(&w(&[2, 1, 1, 1, -2])).unwrap();
        assert_eq!((r.root.to_ints(), r.exponent), (vec![2, 1, -2], 3));
        assert_eq!(root(&w(&[])), Err(Error::TrivialRoot));
    }

    #[test]
    fn root_of_inverse_power_keeps_literal_orientation() {
        let r = root(&w(&[1, 2]).pow(-3)).unwrap();
        assert_eq!((r.root.to_ints(), r.exponent), (vec![-2, -1], 3));
    }

    #[test]
    fn least_rotation_matches_naive() {
        for word in Word::ball(2, 6) {
            let (core, _) = cyclic_reduce(&word);
            let s = core.letters();
            let naive = (0..s.len().max(1))
                .map(|k| [&s[k.min(s.len())..], &s[..k.min(s.len())]].concat())
                .min()
                .unwrap_or_default();
            assert_eq!(minimal_rotation(&core).0.letters(), &naive[..]);
        }
    }
}
