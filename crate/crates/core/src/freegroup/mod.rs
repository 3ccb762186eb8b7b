//! Exact arithmetic in finitely generated free groups.
//!
//! A [`Word`] is always stored freely reduced; every constructor normalizes.
//! Generators are 1-based, so `x1` is index 1.

mod cyclic;
mod text;

use std::cmp::Ordering;
use std::fmt;
use std::ops::Mul;

pub use cyclic::{are_conjugate, cyclic_reduce, minimal_rotation, root, RootDecomposition};
pub use text::{parse_pair, parse_word, Alphabet, DisplayWord};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_i32(value: i32) -> Option<Self> {
        match value {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn as_i32(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl std::ops::Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        self.flip()
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_i32())
    }
}

/// A generator or its inverse. Letters order as `x1 < x1^-1 < x2 < x2^-1 < ...`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    generator: u32,
    sign: Sign,
}

impl Letter {
    /// Panics if `generator` is zero.
    pub fn new(generator: usize, sign: Sign) -> Self {
        assert!(generator > 0, "generator indices are 1-based");
        Letter {
            generator: generator as u32,
            sign,
        }
    }

    /// `+k` is the k-th generator, `-k` its inverse.
    pub fn from_i32(value: i32) -> Option<Self> {
        if value == 0 {
            return None;
        }
        let sign = if value > 0 { Sign::Plus } else { Sign::Minus };
        Some(Letter::new(value.unsigned_abs() as usize, sign))
    }

    pub fn as_i32(self) -> i32 {
        self.generator as i32 * self.sign.as_i32()
    }

    pub fn generator(self) -> usize {
        self.generator as usize
    }

    pub fn sign(self) -> Sign {
        self.sign
    }

    pub fn inverse(self) -> Self {
        Letter {
            generator: self.generator,
            sign: self.sign.flip(),
        }
    }

    pub fn is_inverse_of(self, other: Letter) -> bool {
        self.generator == other.generator && self.sign != other.sign
    }

    /// All `2 * rank` letters in canonical order.
    pub fn all(rank: usize) -> impl Iterator<Item = Letter> {
        (1..=rank).flat_map(|g| [Letter::new(g, Sign::Plus), Letter::new(g, Sign::Minus)])
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.generator, self.sign).cmp(&(other.generator, other.sign))
    }
}

/// A freely reduced word over a free basis of size `rank`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    rank: usize,
    letters: Vec<Letter>,
}

/// Freely reduces a raw letter sequence.
pub fn reduce(letters: impl IntoIterator<Item = Letter>, rank: usize) -> Result<Word> {
    let mut out: Vec<Letter> = Vec::new();
    for letter in letters {
        if letter.generator() > rank {
            return Err(Error::IndexOutOfRange {
                index: letter.generator(),
                rank,
            });
        }
        push_reduced(&mut out, letter);
    }
    Ok(Word { rank, letters: out })
}

fn push_reduced(out: &mut Vec<Letter>, letter: Letter) {
    if out.last().is_some_and(|last| last.is_inverse_of(letter)) {
        out.pop();
    } else {
        out.push(letter);
    }
}

impl Word {
    pub fn identity(rank: usize) -> Self {
        Word {
            rank,
            letters: Vec::new(),
        }
    }

    pub fn generator(rank: usize, index: usize) -> Result<Self> {
        if index == 0 || index > rank {
            return Err(Error::IndexOutOfRange { index, rank });
        }
        Ok(Word {
            rank,
            letters: vec![Letter::new(index, Sign::Plus)],
        })
    }

    pub fn from_letters(rank: usize, letters: impl IntoIterator<Item = Letter>) -> Result<Self> {
        reduce(letters, rank)
    }

    /// Builds a word from signed generator indices, e.g. `[1, 2, -1, -2]`.
    pub fn from_ints(rank: usize, ints: &[i32]) -> Result<Self> {
        let letters = ints
            .iter()
            .map(|&i| Letter::from_i32(i).ok_or(Error::IndexOutOfRange { index: 0, rank }))
            .collect::<Result<Vec<_>>>()?;
        reduce(letters, rank)
    }

    /// Trusted constructor for sequences already known to be reduced and in range.
    pub(crate) fn from_reduced_unchecked(rank: usize, letters: Vec<Letter>) -> Self {
        debug_assert!(letters.windows(2).all(|w| !w[0].is_inverse_of(w[1])));
        debug_assert!(letters.iter().all(|l| l.generator() <= rank));
        Word { rank, letters }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Same as [`Word::is_empty`]; reads better in group-theoretic code.
    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn to_ints(&self) -> Vec<i32> {
        self.letters.iter().map(|l| l.as_i32()).collect()
    }

    fn check_rank(&self, other: &Word) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        Ok(())
    }

    pub fn checked_mul(&self, other: &Word) -> Result<Word> {
        self.check_rank(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Word) -> Word {
        // Cancel the overlap at the seam, then concatenate.
        let mut k = 0;
        let (a, b) = (&self.letters, &other.letters);
        while k < a.len() && k < b.len() && a[a.len() - 1 - k].is_inverse_of(b[k]) {
            k += 1;
        }
        let mut letters = Vec::with_capacity(a.len() + b.len() - 2 * k);
        letters.extend_from_slice(&a[..a.len() - k]);
        letters.extend_from_slice(&b[k..]);
        Word {
            rank: self.rank,
            letters,
        }
    }

    pub fn inverse(&self) -> Word {
        Word {
            rank: self.rank,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// `by^-1 * self * by`.
    pub fn conjugate(&self, by: &Word) -> Result<Word> {
        self.check_rank(by)?;
        Ok(by.inverse().mul_unchecked(self).mul_unchecked(by))
    }

    /// `[a, b] = a^-1 b^-1 a b`.
    pub fn commutator(a: &Word, b: &Word) -> Result<Word> {
        a.check_rank(b)?;
        Ok(a.inverse()
            .mul_unchecked(&b.inverse())
            .mul_unchecked(a)
            .mul_unchecked(b))
    }

    pub fn pow(&self, exponent: i64) -> Word {
        let base = if exponent < 0 {
            self.inverse()
        } else {
            self.clone()
        };
        let mut out = Word::identity(self.rank);
        for _ in 0..exponent.unsigned_abs() {
            out = out.mul_unchecked(&base);
        }
        out
    }

    /// Exponent sum of each generator.
    pub fn abelianize(&self) -> Vec<i64> {
        let mut v = vec![0i64; self.rank];
        for l in &self.letters {
            v[l.generator() - 1] += l.sign().as_i32() as i64;
        }
        v
    }

    /// Reinterprets the word in an alphabet of a different rank, keeping indices.
    pub fn with_rank(&self, rank: usize) -> Result<Word> {
        if let Some(l) = self.letters.iter().find(|l| l.generator() > rank) {
            return Err(Error::IndexOutOfRange {
                index: l.generator(),
                rank,
            });
        }
        Ok(Word {
            rank,
            letters: self.letters.clone(),
        })
    }

    /// Applies the homomorphism `x_k -> images[k-1]`.
    pub fn substitute(&self, images: &[Word]) -> Result<Word> {
        if images.len() != self.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: images.len(),
            });
        }
        let target = images.first().map_or(0, |w| w.rank);
        if let Some(w) = images.iter().find(|w| w.rank != target) {
            return Err(Error::RankMismatch {
                left: target,
                right: w.rank,
            });
        }
        let inverses: Vec<Word> = images.iter().map(Word::inverse).collect();
        let mut out: Vec<Letter> = Vec::new();
        for l in &self.letters {
            let image = match l.sign() {
                Sign::Plus => &images[l.generator() - 1],
                Sign::Minus => &inverses[l.generator() - 1],
            };
            for &x in &image.letters {
                push_reduced(&mut out, x);
            }
        }
        Ok(Word {
            rank: target,
            letters: out,
        })
    }

    /// Compares by length, then lexicographically by letter order.
    pub fn shortlex_cmp(&self, other: &Word) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.letters.cmp(&other.letters))
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> DisplayWord<'a> {
        DisplayWord {
            word: self,
            alphabet,
        }
    }

    /// All reduced words of length at most `radius`, in shortlex order.
    pub fn ball(rank: usize, radius: usize) -> Vec<Word> {
        let mut out = vec![Word::identity(rank)];
        let mut layer = vec![Word::identity(rank)];
        for _ in 0..radius {
            let mut next = Vec::with_capacity(layer.len() * (2 * rank).saturating_sub(1).max(1));
            for w in &layer {
                for l in Letter::all(rank) {
                    if w.letters.last().is_some_and(|last| last.is_inverse_of(l)) {
                        continue;
                    }
                    let mut letters = w.letters.clone();
                    letters.push(l);
                    next.push(Word { rank, letters });
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }
}

impl Mul for &Word {
    type Output = Word;

    /// Panics on rank mismatch; use [`Word::checked_mul`] to get an error instead.
    fn mul(self, rhs: &Word) -> Word {
        assert_eq!(self.rank, rhs.rank, "rank mismatch in word product");
        self.mul_unchecked(rhs)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display(&Alphabet::X))
    }
}
