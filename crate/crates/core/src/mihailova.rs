//! The Mihailova subgroup `M(H) <= F_n x F_n` and its recursive presentation.
//!
//! `F_{n+m}` has basis `d1..dn, t1..tm`; a [`MixedWord`] stores it as a word of
//! rank `n + m` with `d_k` at index `k` and `t_j` at index `n + j`. The
//! epimorphism [`pi`] sends `d_k -> (x_k, x_k)` and `t_j -> (1, R_j)`. Its
//! kernel is the normal closure of the family returned by [`relator_family`]
//! when the presentation is concise and Peiffer aspherical.

use std::fmt;

use crate::error::{Error, Result};
use crate::freegroup::{parse_word, root, Alphabet, Letter, Sign, Word};
use crate::presentation::{equal_in_h, Budget, Presentation, WordProblemOracle, WpVerdict};

/// An element of `F_n x F_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PairWord {
    pub left: Word,
    pub right: Word,
}

impl PairWord {
    pub fn new(left: Word, right: Word) -> Result<Self> {
        if left.rank() != right.rank() {
            return Err(Error::RankMismatch {
                left: left.rank(),
                right: right.rank(),
            });
        }
        Ok(PairWord { left, right })
    }

    pub fn identity(rank: usize) -> Self {
        PairWord {
            left: Word::identity(rank),
            right: Word::identity(rank),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.left.is_identity() && self.right.is_identity()
    }

    pub fn mul(&self, other: &PairWord) -> PairWord {
        PairWord {
            left: &self.left * &other.left,
            right: &self.right * &other.right,
        }
    }

    pub fn parse(text: &str, rank: usize) -> Result<Self> {
        let (left, right) = crate::freegroup::parse_pair(text, rank, &Alphabet::X)?;
        Ok(PairWord { left, right })
    }
}

impl fmt::Display for PairWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({} , {})",
            self.left.display(&Alphabet::X),
            self.right.display(&Alphabet::X)
        )
    }
}

/// A reduced word of `F_{n+m}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MixedWord {
    n: usize,
    m: usize,
    word: Word,
}

impl MixedWord {
    pub fn new(n: usize, m: usize, word: Word) -> Result<Self> {
        if word.rank() != n + m {
            return Err(Error::RankMismatch {
                left: n + m,
                right: word.rank(),
            });
        }
        Ok(MixedWord { n, m, word })
    }

    pub fn identity(n: usize, m: usize) -> Self {
        MixedWord {
            n,
            m,
            word: Word::identity(n + m),
        }
    }

    pub fn d(n: usize, m: usize, k: usize) -> Result<Self> {
        if k == 0 || k > n {
            return Err(Error::IndexOutOfRange { index: k, rank: n });
        }
        Ok(MixedWord {
            n,
            m,
            word: Word::generator(n + m, k)?,
        })
    }

    pub fn t(n: usize, m: usize, j: usize) -> Result<Self> {
        if j == 0 || j > m {
            return Err(Error::RelatorIndex { index: j, count: m });
        }
        Ok(MixedWord {
            n,
            m,
            word: Word::generator(n + m, n + j)?,
        })
    }

    /// Embeds a word of `F_n` as the corresponding d-word.
    pub fn from_d_word(n: usize, m: usize, w: &Word) -> Result<Self> {
        if w.rank() != n {
            return Err(Error::RankMismatch {
                left: n,
                right: w.rank(),
            });
        }
        Ok(MixedWord {
            n,
            m,
            word: w.with_rank(n + m)?,
        })
    }

    pub fn parse(text: &str, n: usize, m: usize) -> Result<Self> {
        Ok(MixedWord {
            n,
            m,
            word: parse_word(text, n + m, &Alphabet::Mixed { n })?,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_identity()
    }

    pub fn is_d_word(&self) -> bool {
        self.word.letters().iter().all(|l| l.generator() <= self.n)
    }

    pub fn mul(&self, other: &MixedWord) -> MixedWord {
        assert_eq!((self.n, self.m), (other.n, other.m), "alphabet mismatch");
        MixedWord {
            n: self.n,
            m: self.m,
            word: &self.word * &other.word,
        }
    }

    pub fn inverse(&self) -> MixedWord {
        MixedWord {
            n: self.n,
            m: self.m,
            word: self.word.inverse(),
        }
    }

    pub fn pow(&self, k: i64) -> MixedWord {
        MixedWord {
            n: self.n,
            m: self.m,
            word: self.word.pow(k),
        }
    }

    /// `[a, b] = a^-1 b^-1 a b`.
    pub fn commutator(a: &MixedWord, b: &MixedWord) -> MixedWord {
        a.inverse().mul(&b.inverse()).mul(a).mul(b)
    }

    pub fn alphabet(&self) -> Alphabet {
        Alphabet::Mixed { n: self.n }
    }
}

impl fmt::Display for MixedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.word.display(&Alphabet::Mixed { n: self.n }))
    }
}

/// One `t_relator^sign` occurrence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TLetter {
    /// 1-based.
    pub relator: usize,
    pub sign: Sign,
}

/// `u_1 t_{i_1}^{e_1} u_2 ... u_l t_{i_l}^{e_l} u_{l+1}` with each `u_k` a reduced
/// d-word, stored over rank `n`.
///
/// Adjacent inverse t-letters separated by an empty syllable are kept: the
/// associated identity depends on this expression, not just on the element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SyllableForm {
    pub n: usize,
    pub m: usize,
    pub syllables: Vec<Word>,
    pub t_letters: Vec<TLetter>,
}

impl SyllableForm {
    pub fn decompose(w: &MixedWord) -> SyllableForm {
        let n = w.n;
        let mut syllables = Vec::new();
        let mut t_letters = Vec::new();
        let mut current: Vec<Letter> = Vec::new();
        for &l in w.word.letters() {
            if l.generator() <= n {
                current.push(l);
            } else {
                syllables.push(Word::from_reduced_unchecked(
                    n,
                    std::mem::take(&mut current),
                ));
                t_letters.push(TLetter {
                    relator: l.generator() - n,
                    sign: l.sign(),
                });
            }
        }
        syllables.push(Word::from_reduced_unchecked(n, current));
        SyllableForm {
            n,
            m: w.m,
            syllables,
            t_letters,
        }
    }

    /// Number of t-letters.
    pub fn len(&self) -> usize {
        self.t_letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.t_letters.is_empty()
    }

    /// The freely reduced word this expression denotes.
    pub fn recompose(&self) -> MixedWord {
        let rank = self.n + self.m;
        let mut letters = Vec::new();
        for (k, u) in self.syllables.iter().enumerate() {
            letters.extend_from_slice(u.letters());
            if let Some(t) = self.t_letters.get(k) {
                letters.push(Letter::new(self.n + t.relator, t.sign));
            }
        }
        MixedWord {
            n: self.n,
            m: self.m,
            word: Word::from_letters(rank, letters).expect("letters within n + m"),
        }
    }

    /// True when no t-letters cancel on recomposition, i.e. decomposing the
    /// recomposed word gives this form back.
    pub fn is_reduced(&self) -> bool {
        (1..self.t_letters.len()).all(|k| {
            let (a, b) = (self.t_letters[k - 1], self.t_letters[k]);
            !(self.syllables[k].is_identity() && a.relator == b.relator && a.sign != b.sign)
        })
    }

    /// Capitalized accumulated products `U_1 ... U_k` for `k = 1..=l+1`.
    pub fn accumulated(&self) -> Vec<Word> {
        let mut acc = Word::identity(self.n);
        self.syllables
            .iter()
            .map(|u| {
                acc = &acc * u;
                acc.clone()
            })
            .collect()
    }
}

/// `(x_1, x_1), ..., (x_n, x_n), (1, R_1), ..., (1, R_m)`.
pub fn mihailova_generators(p: &Presentation) -> Vec<PairWord> {
    let n = p.rank();
    let diagonal = (1..=n).map(|k| {
        let x = Word::generator(n, k).expect("k <= n");
        PairWord {
            left: x.clone(),
            right: x,
        }
    });
    let relators = p.relators().iter().map(|r| PairWord {
        left: Word::identity(n),
        right: r.clone(),
    });
    diagonal.chain(relators).collect()
}

/// Relabels `d_k -> x_k`.
pub fn capitalize(u: &MixedWord) -> Result<Word> {
    if !u.is_d_word() {
        return Err(Error::NotDWord);
    }
    u.word.with_rank(u.n)
}

fn check_alphabet(p: &Presentation, w: &MixedWord) -> Result<()> {
    if w.n != p.rank() || w.m != p.relator_count() {
        return Err(Error::RankMismatch {
            left: p.rank() + p.relator_count(),
            right: w.n + w.m,
        });
    }
    Ok(())
}

/// `r_i`: the relator `R_i` rewritten as a d-word.
pub fn relator_word(p: &Presentation, i: usize) -> Result<MixedWord> {
    MixedWord::from_d_word(p.rank(), p.relator_count(), p.relator(i)?)
}

/// The homomorphism `pi : F_{n+m} -> M(H)`.
pub fn pi(p: &Presentation, w: &MixedWord) -> Result<PairWord> {
    check_alphabet(p, w)?;
    let n = p.rank();
    let mut images = Vec::with_capacity(n + p.relator_count());
    for k in 1..=n {
        images.push(Word::generator(n, k)?);
    }
    let left_images: Vec<Word> = images
        .iter()
        .cloned()
        .chain(std::iter::repeat_n(Word::identity(n), p.relator_count()))
        .collect();
    let right_images: Vec<Word> = images
        .into_iter()
        .chain(p.relators().iter().cloned())
        .collect();
    Ok(PairWord {
        left: w.word.substitute(&left_images)?,
        right: w.word.substitute(&right_images)?,
    })
}

/// Exact test for `pi(w) = (1, 1)`.
pub fn in_kernel_of_pi(p: &Presentation, w: &MixedWord) -> Result<bool> {
    Ok(pi(p, w)?.is_identity())
}

/// `[t_j, d^-1 t_i^-1 r_i d]`.
pub fn commutation_relator(
    p: &Presentation,
    i: usize,
    j: usize,
    d: &MixedWord,
) -> Result<MixedWord> {
    check_alphabet(p, d)?;
    if !d.is_d_word() {
        return Err(Error::NotDWord);
    }
    let (n, m) = (p.rank(), p.relator_count());
    let ri = relator_word(p, i)?;
    let tj = MixedWord::t(n, m, j)?;
    let ti = MixedWord::t(n, m, i)?;
    let inner = d.inverse().mul(&ti.inverse()).mul(&ri).mul(d);
    Ok(MixedWord::commutator(&tj, &inner))
}

/// `[t_i, root(r_i)]`.
pub fn root_relator(p: &Presentation, i: usize) -> Result<MixedWord> {
    let (n, m) = (p.rank(), p.relator_count());
    let ri = p.relator(i)?;
    let s = root(ri)?.root;
    let s = MixedWord::from_d_word(n, m, &s)?;
    Ok(MixedWord::commutator(&MixedWord::t(n, m, i)?, &s))
}

/// Number of reduced words of length at most `radius` in rank `n`.
pub fn ball_count(n: usize, radius: usize) -> usize {
    let mut total = 1;
    let mut layer = 2 * n;
    for _ in 0..radius {
        total += layer;
        layer *= 2 * n - 1;
    }
    total
}

/// Truncation of the relator family of `M(H)`: commutation relators for `i`,
/// then `j`, then every reduced `d` with `|d| <= max_d_len` in shortlex order,
/// followed by the `m` root relators.
pub fn relator_family(p: &Presentation, max_d_len: usize) -> Result<Vec<MixedWord>> {
    let (n, m) = (p.rank(), p.relator_count());
    let ds: Vec<MixedWord> = Word::ball(n, max_d_len)
        .iter()
        .map(|d| MixedWord::from_d_word(n, m, d))
        .collect::<Result<_>>()?;
    let mut out = Vec::with_capacity(m * m * ds.len() + m);
    for i in 1..=m {
        for j in 1..=m {
            for d in &ds {
                out.push(commutation_relator(p, i, j, d)?);
            }
        }
    }
    for i in 1..=m {
        out.push(root_relator(p, i)?);
    }
    Ok(out)
}

/// Membership of a pair in `M(H)` via the bounded word problem.
pub fn in_m(p: &Presentation, pair: &PairWord, budget: &Budget) -> Result<WpVerdict> {
    check_pair(p, pair)?;
    Ok(equal_in_h(p, &pair.left, &pair.right, budget))
}

/// Membership in `M(H)` using a caller-supplied word problem oracle.
pub fn in_m_with(
    p: &Presentation,
    pair: &PairWord,
    oracle: &dyn WordProblemOracle,
) -> Result<WpVerdict> {
    check_pair(p, pair)?;
    Ok(oracle.equal(p, &pair.left, &pair.right))
}

fn check_pair(p: &Presentation, pair: &PairWord) -> Result<()> {
    for w in [&pair.left, &pair.right] {
        if w.rank() != p.rank() {
            return Err(Error::RankMismatch {
                left: p.rank(),
                right: w.rank(),
            });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::Verdict;

    fn torus() -> Presentation {
        Presentation::from_ints(2, &[&[1, 2, -1, -2]]).unwrap()
    }

    fn x(ints: &[i32]) -> Word {
        Word::from_ints(2, ints).unwrap()
    }

    fn mixed(p: &Presentation, text: &str) -> MixedWord {
        MixedWord::parse(text, p.rank(), p.relator_count()).unwrap()
    }

    #[test]
    fn generators() {
        let gens = mihailova_generators(&torus());
        assert_eq!(gens.len(), 3);
        assert_eq!(gens[0], PairWord::new(x(&[1]), x(&[1])).unwrap());
        assert_eq!(gens[1], PairWord::new(x(&[2]), x(&[2])).unwrap());
        assert_eq!(gens[2], PairWord::new(x(&[]), x(&[1, 2, -1, -2])).unwrap());
        let free = Presentation::new(3, vec![]).unwrap();
        assert_eq!(mihailova_generators(&free).len(), 3);
    }

    #[test]
    fn capitalize_examples() {
        let p = torus();
        assert_eq!(capitalize(&mixed(&p, "d1 d2^-1")).unwrap(), x(&[1, -2]));
        assert!(capitalize(&mixed(&p, "1")).unwrap().is_empty());
        assert_eq!(capitalize(&mixed(&p, "d2 d2")).unwrap(), x(&[2, 2]));
        assert_eq!(capitalize(&mixed(&p, "d1 t1")), Err(Error::NotDWord));
    }

    #[test]
    fn relator_word_examples() {
        let p = torus();
        assert_eq!(
            relator_word(&p, 1).unwrap().to_string(),
            "d1 d2 d1^-1 d2^-1"
        );
        assert_eq!(
            capitalize(&relator_word(&p, 1).unwrap()).unwrap(),
            x(&[1, 2, -1, -2])
        );
        assert!(relator_word(&p, 2).is_err());
        let sq = Presentation::from_ints(2, &[&[1, 1]]).unwrap();
        assert_eq!(relator_word(&sq, 1).unwrap().to_string(), "d1 d1");
    }

    #[test]
    fn pi_examples() {
        let p = torus();
        assert_eq!(
            pi(&p, &mixed(&p, "d1")).unwrap(),
            PairWord::new(x(&[1]), x(&[1])).unwrap()
        );
        let d1 = mixed(&p, "d1");
        let rel = commutation_relator(&p, 1, 1, &d1).unwrap();
        assert!(pi(&p, &rel).unwrap().is_identity());

        let sq = Presentation::from_ints(2, &[&[1, 1]]).unwrap();
        let image = pi(&sq, &mixed(&sq, "t1 d2")).unwrap();
        assert_eq!(image, PairWord::new(x(&[2]), x(&[1, 1, 2])).unwrap());

        let other = Presentation::from_ints(2, &[&[1, 1], &[2, 2]]).unwrap();
        assert!(pi(&other, &mixed(&p, "d1")).is_err());
    }

    #[test]
    fn decompose_examples() {
        let p = Presentation::from_ints(2, &[&[1, 1], &[2, 2]]).unwrap();
        let f = SyllableForm::decompose(&mixed(&p, "d1 t2 d1^-1"));
        assert_eq!(f.syllables, vec![x(&[1]), x(&[-1])]);
        assert_eq!(
            f.t_letters,
            vec![TLetter {
                relator: 2,
                sign: Sign::Plus
            }]
        );

        let f = SyllableForm::decompose(&mixed(&p, "t1 t1"));
        assert_eq!(f.syllables, vec![x(&[]), x(&[]), x(&[])]);
        assert_eq!(f.len(), 2);

        let w = mixed(&p, "d1 d2^-1");
        let f = SyllableForm::decompose(&w);
        assert!(f.is_empty() && f.syllables.len() == 1);
        assert_eq!(f.recompose(), w);
    }

    #[test]
    fn exchange_relator_examples() {
        let p = torus();
        let e = MixedWord::identity(2, 1);
        let rel = commutation_relator(&p, 1, 1, &e).unwrap();
        let t1 = mixed(&p, "t1");
        let expected = MixedWord::commutator(&t1, &t1.inverse().mul(&relator_word(&p, 1).unwrap()));
        assert_eq!(rel, expected);
        assert!(in_kernel_of_pi(&p, &rel).unwrap());

        // n = m = 1, R = x1: [t1, t1^-1 d1] = t1^-1 d1^-1 t1 t1 t1^-1 d1 = t1^-1 d1^-1 t1 d1
        let p1 = Presentation::from_ints(1, &[&[1]]).unwrap();
        let rel = commutation_relator(&p1, 1, 1, &MixedWord::identity(1, 1)).unwrap();
        assert_eq!(rel.to_string(), "t1^-1 d1^-1 t1 d1");
        assert!(!rel.is_identity());
        assert!(commutation_relator(&p, 2, 1, &e).is_err());
    }

    #[test]
    fn root_relator_examples() {
        let p = torus();
        let rel = root_relator(&p, 1).unwrap();
        let t1 = mixed(&p, "t1");
        assert_eq!(
            rel,
            MixedWord::commutator(&t1, &relator_word(&p, 1).unwrap())
        );
        assert!(in_kernel_of_pi(&p, &rel).unwrap());

        let sq = Presentation::from_ints(2, &[&[1, 1]]).unwrap();
        let rel = root_relator(&sq, 1).unwrap();
        assert_eq!(
            rel,
            MixedWord::commutator(&mixed(&sq, "t1"), &mixed(&sq, "d1"))
        );

        let trivial = Presentation::from_ints(2, &[&[]]).unwrap();
        assert_eq!(root_relator(&trivial, 1), Err(Error::TrivialRoot));
    }

    #[test]
    fn family_counts() {
        let p = torus();
        assert_eq!(ball_count(2, 2), 17);
        assert_eq!(ball_count(2, 3), 53);
        assert_eq!(relator_family(&p, 2).unwrap().len(), 18);
        let two = Presentation::from_ints(2, &[&[1, 1], &[2, 2, 2]]).unwrap();
        assert_eq!(relator_family(&two, 0).unwrap().len(), 4 + 2);
        for rel in relator_family(&two, 2).unwrap() {
            assert!(in_kernel_of_pi(&two, &rel).unwrap());
        }
    }

    #[test]
    fn kernel_examples() {
        let p = torus();
        assert!(!in_kernel_of_pi(&p, &mixed(&p, "d1")).unwrap());
        let t1 = mixed(&p, "t1");
        let r1 = relator_word(&p, 1).unwrap();
        assert!(in_kernel_of_pi(&p, &MixedWord::commutator(&t1, &r1)).unwrap());
    }

    #[test]
    fn membership_examples() {
        let p = torus();
        let b = Budget::default();
        let w = x(&[1, -2, 1]);
        let diag = PairWord::new(w.clone(), w).unwrap();
        assert_eq!(in_m(&p, &diag, &b).unwrap().outcome, Verdict::EqualInH);
        let rel = PairWord::new(x(&[]), x(&[1, 2, -1, -2])).unwrap();
        assert_eq!(in_m(&p, &rel, &b).unwrap().outcome, Verdict::EqualInH);
        let bad = PairWord::new(x(&[1]), x(&[2])).unwrap();
        assert_eq!(in_m(&p, &bad, &b).unwrap().outcome, Verdict::NotEqualInH);
    }

    #[test]
    fn pair_text_round_trip() {
        let pair = PairWord::new(x(&[2]), x(&[1, 2, -1])).unwrap();
        assert_eq!(pair.to_string(), "(x2 , x1 x2 x1^-1)");
        assert_eq!(PairWord::parse(&pair.to_string(), 2).unwrap(), pair);
    }
}
