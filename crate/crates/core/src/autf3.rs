//! Endomorphisms of `F_3 = <q, a, b>` and the embedding
//! `theta : F_2 x F_2 -> Aut(F_3)`, `(u, v) -> (q -> u^-1 q v, a -> a, b -> b)`.
//!
//! Composition applies the left factor first: `compose(e1, e2)` sends `w` to
//! `e2(e1(w))`. Under this convention `theta(u1, 1) * theta(u2, 1)` equals
//! `theta(u2 u1, 1)` as maps `q -> (u2 u1)^-1 q`, and the right family composes
//! as `theta(1, v1) * theta(1, v2) = theta(1, v2 v1)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::freegroup::{parse_word, Alphabet, Letter, Sign, Word};
use crate::mihailova::mihailova_generators;
use crate::presentation::Presentation;

const Q: usize = 1;

/// Endomorphism of `F_3`, stored as the images of `q`, `a`, `b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Endomorphism3 {
    images: [Word; 3],
}

/// Moves a word over `{a, b}` (rank 2) into the rank-3 alphabet `{q, a, b}`.
fn lift(w: &Word) -> Result<Word> {
    let a = Word::generator(3, 2)?;
    let b = Word::generator(3, 3)?;
    w.substitute(&[a, b])
}

impl Endomorphism3 {
    pub fn new(image_q: Word, image_a: Word, image_b: Word) -> Result<Self> {
        for w in [&image_q, &image_a, &image_b] {
            if w.rank() != 3 {
                return Err(Error::RankMismatch {
                    left: 3,
                    right: w.rank(),
                });
            }
        }
        Ok(Endomorphism3 {
            images: [image_q, image_a, image_b],
        })
    }

    pub fn identity() -> Self {
        let g = |k| Word::generator(3, k).expect("rank 3");
        Endomorphism3 {
            images: [g(1), g(2), g(3)],
        }
    }

    pub fn image_q(&self) -> &Word {
        &self.images[0]
    }

    pub fn image_a(&self) -> &Word {
        &self.images[1]
    }

    pub fn image_b(&self) -> &Word {
        &self.images[2]
    }

    pub fn apply(&self, w: &Word) -> Result<Word> {
        w.substitute(&self.images)
    }

    /// `self` first, then `other`.
    pub fn compose(&self, other: &Endomorphism3) -> Endomorphism3 {
        let images = self
            .images
            .clone()
            .map(|w| other.apply(&w).expect("rank 3 images"));
        Endomorphism3 { images }
    }

    pub fn is_identity(&self) -> bool {
        *self == Endomorphism3::identity()
    }

    pub fn fixes_a_and_b(&self) -> bool {
        let id = Endomorphism3::identity();
        self.images[1..] == id.images[1..]
    }

    /// Recovers `(u, v)` when `self = theta(u, v)`.
    pub fn as_theta(&self) -> Option<(Word, Word)> {
        if !self.fixes_a_and_b() {
            return None;
        }
        let letters = self.image_q().letters();
        let mut qs = letters
            .iter()
            .enumerate()
            .filter(|(_, l)| l.generator() == Q);
        let (at, letter) = qs.next()?;
        if qs.next().is_some() || letter.sign() != Sign::Plus {
            return None;
        }
        let down = |ls: &[Letter]| -> Word {
            let ints: Vec<i32> = ls
                .iter()
                .map(|l| l.as_i32().signum() * (l.generator() as i32 - 1))
                .collect();
            Word::from_ints(2, &ints).expect("letters a and b")
        };
        let u_inv = down(&letters[..at]);
        let v = down(&letters[at + 1..]);
        Some((u_inv.inverse(), v))
    }

    /// Inverse of a theta-type endomorphism: `theta(u, v)^-1 = theta(u^-1, v^-1)`.
    pub fn inverse(&self) -> Option<Endomorphism3> {
        let (u, v) = self.as_theta()?;
        Some(theta(&u.inverse(), &v.inverse()).expect("rank 2"))
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut images: [Option<Word>; 3] = [None, None, None];
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (name, image) = line
                .split_once("->")
                .ok_or_else(|| Error::parse("expected `<letter> -> <word>`").at_line(i + 1))?;
            let slot = match name.trim() {
                "q" => 0,
                "a" => 1,
                "b" => 2,
                other => {
                    return Err(Error::parse(format!("unknown generator `{other}`")).at_line(i + 1))
                }
            };
            if images[slot].is_some() {
                return Err(
                    Error::parse(format!("duplicate image for `{}`", name.trim())).at_line(i + 1),
                );
            }
            images[slot] =
                Some(parse_word(image, 3, &Alphabet::Qab).map_err(|e| e.at_line(i + 1))?);
        }
        match images {
            [Some(q), Some(a), Some(b)] => Endomorphism3::new(q, a, b),
            _ => Err(Error::parse("images of q, a and b are all required")),
        }
    }
}

impl fmt::Display for Endomorphism3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, w) in ["q", "a", "b"].iter().zip(&self.images) {
            writeln!(f, "{name} -> {}", w.display(&Alphabet::Qab))?;
        }
        Ok(())
    }
}

/// `q -> u^-1 q v`, `a -> a`, `b -> b`, for `u, v` over `{a, b}`.
pub fn theta(u: &Word, v: &Word) -> Result<Endomorphism3> {
    theta_raw(&u.inverse(), v)
}

/// `q -> u q v`, `a -> a`, `b -> b`.
pub fn theta_raw(u: &Word, v: &Word) -> Result<Endomorphism3> {
    for w in [u, v] {
        if w.rank() != 2 {
            return Err(Error::RankMismatch {
                left: 2,
                right: w.rank(),
            });
        }
    }
    let q = Word::generator(3, Q)?;
    let image_q = &(&lift(u)? * &q) * &lift(v)?;
    let id = Endomorphism3::identity();
    let [_, a, b] = id.images;
    Endomorphism3::new(image_q, a, b)
}

/// Generators of `B = theta(F_2 x F_2)`: the left family `q -> a^-1 q`,
/// `q -> b^-1 q` followed by the right family `q -> q a`, `q -> q b`.
pub fn b_generators() -> Vec<Endomorphism3> {
    let a = Word::generator(2, 1).expect("rank 2");
    let b = Word::generator(2, 2).expect("rank 2");
    let one = Word::identity(2);
    vec![
        theta_raw(&a.inverse(), &one),
        theta_raw(&b.inverse(), &one),
        theta_raw(&one, &a),
        theta_raw(&one, &b),
    ]
    .into_iter()
    .map(|e| e.expect("rank 2"))
    .collect()
}

/// Injective homomorphism `F_n -> F_2` onto the kernel of `F_2 -> Z/(n-1)`,
/// `a -> 1`, `b -> 0`: `x_k -> a^(k-1) b a^-(k-1)` for `k < n`, `x_n -> a^(n-1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingTable {
    pub n: usize,
    pub images: Vec<Word>,
}

pub fn fn_into_f2(n: usize) -> Result<EmbeddingTable> {
    if n < 2 {
        return Err(Error::RankTooSmall { rank: n, min: 2 });
    }
    let a = Word::generator(2, 1)?;
    let b = Word::generator(2, 2)?;
    let mut images: Vec<Word> = (0..n - 1)
        .map(|k| b.conjugate(&a.pow(-(k as i64))).expect("rank 2"))
        .collect();
    images.push(a.pow(n as i64 - 1));
    Ok(EmbeddingTable { n, images })
}

impl EmbeddingTable {
    pub fn embed(&self, w: &Word) -> Result<Word> {
        w.substitute(&self.images)
    }
}

/// Images in `Aut(F_3)` of the Mihailova generators of `p`, in the same
/// order: `theta(f(w1), f(w2))` for each generator `(w1, w2)`, where `f` is
/// [`fn_into_f2`].
pub fn orbit_undecidable_subgroup(p: &Presentation) -> Result<Vec<Endomorphism3>> {
    let table = fn_into_f2(p.rank().max(2))?;
    mihailova_generators(p)
        .iter()
        .map(|pair| {
            let lift = |w: &Word| table.embed(&w.with_rank(table.n)?);
            theta(&lift(&pair.left)?, &lift(&pair.right)?)
        })
        .collect()
}
