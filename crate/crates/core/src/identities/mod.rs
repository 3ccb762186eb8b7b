//! Identities among relations and Peiffer transformations.
//!
//! An identity of length `l` is a sequence of conjugated relators
//! `(U_1 R_{i_1}^{e_1} U_1^-1, ..., U_l R_{i_l}^{e_l} U_l^-1)` whose product is
//! trivial in `F_n`. Three moves act on them:
//!
//! - exchange at `p`: `(A, B) -> (B, B^-1 A B)`, with the moved term's
//!   conjugator rewritten to `U_{p+1} R_{i_{p+1}}^{-e_{p+1}} U_{p+1}^-1 U_p`;
//! - deletion at `p` of two adjacent terms with trivial product;
//! - insertion before `p` of a pair `(V R_i^e V^-1, V s^k R_i^-e s^-k V^-1)`
//!   where `s = root(R_i)`.
//!
//! [`transforms`] realizes each move on words of `ker pi`, and [`search`]
//! looks for a sequence of moves down to the empty identity.

pub mod search;
pub mod transforms;

use crate::error::{Error, Result};
use crate::freegroup::{root, Sign, Word};
use crate::presentation::{ConjugatedRelator, Presentation};

pub use search::{reduce_to_empty, Move, ReductionBudget, ReductionCertificate, ReductionOutcome};
pub use transforms::{
    associated_identity, case1_form, case1_transform, case2_form, case2_transform, case3_form,
    case3_transform, identity_of_form, insertion_for, inverse_case1_form, InsertionData,
};

pub type IdentityTerm = ConjugatedRelator;

/// Parameters of a Peiffer insertion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Insertion {
    pub relator: usize,
    pub sign: Sign,
    pub conjugator: Word,
    pub power: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IdentitySequence {
    pub terms: Vec<IdentityTerm>,
}

fn check_position(position: usize, lo: usize, hi: usize) -> Result<()> {
    if position < lo || position > hi {
        return Err(Error::Position {
            position,
            range: format!("{lo}..={hi}"),
        });
    }
    Ok(())
}

impl IdentitySequence {
    pub fn new(terms: Vec<IdentityTerm>) -> Self {
        IdentitySequence { terms }
    }

    pub fn empty() -> Self {
        IdentitySequence::default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of conjugator lengths.
    pub fn weight(&self) -> usize {
        self.terms.iter().map(|t| t.conjugator.len()).sum()
    }

    fn check_terms(&self, p: &Presentation) -> Result<()> {
        for t in &self.terms {
            p.relator(t.relator)?;
            if t.conjugator.rank() != p.rank() {
                return Err(Error::RankMismatch {
                    left: p.rank(),
                    right: t.conjugator.rank(),
                });
            }
        }
        Ok(())
    }

    /// Product of the term values.
    pub fn product(&self, p: &Presentation) -> Result<Word> {
        self.check_terms(p)?;
        Ok(self
            .terms
            .iter()
            .fold(Word::identity(p.rank()), |acc, t| &acc * &t.value(p)))
    }

    /// Whether the product of the terms is trivial in `F_n`.
    pub fn is_identity(&self, p: &Presentation) -> bool {
        self.product(p).is_ok_and(|w| w.is_identity())
    }

    /// Exchange at `position` (1-based, `1..=l-1`).
    pub fn peiffer_exchange(&self, p: &Presentation, position: usize) -> Result<Self> {
        self.check_terms(p)?;
        check_position(position, 1, self.len().saturating_sub(1))?;
        let (a, b) = (&self.terms[position - 1], &self.terms[position]);
        let r = p.relator(b.relator)?;
        let r = if b.sign == Sign::Plus {
            r.inverse()
        } else {
            r.clone()
        };
        let moved = IdentityTerm::new(
            &(&(&b.conjugator * &r) * &b.conjugator.inverse()) * &a.conjugator,
            a.relator,
            a.sign,
        );
        let mut terms = self.terms.clone();
        terms[position - 1] = b.clone();
        terms[position] = moved;
        Ok(IdentitySequence { terms })
    }

    /// Inverse of [`Self::peiffer_exchange`]: `(A, B) -> (A B A^-1, A)`.
    pub fn peiffer_inverse_exchange(&self, p: &Presentation, position: usize) -> Result<Self> {
        self.check_terms(p)?;
        check_position(position, 1, self.len().saturating_sub(1))?;
        let (a, b) = (&self.terms[position - 1], &self.terms[position]);
        let r = p.relator(a.relator)?;
        let r = if a.sign == Sign::Plus {
            r.clone()
        } else {
            r.inverse()
        };
        let moved = IdentityTerm::new(
            &(&(&a.conjugator * &r) * &a.conjugator.inverse()) * &b.conjugator,
            b.relator,
            b.sign,
        );
        let mut terms = self.terms.clone();
        terms[position - 1] = moved;
        terms[position] = a.clone();
        Ok(IdentitySequence { terms })
    }

    /// Whether terms `position` and `position + 1` have trivial product.
    pub fn can_delete(&self, p: &Presentation, position: usize) -> bool {
        if position == 0 || position >= self.len() || self.check_terms(p).is_err() {
            return false;
        }
        let product = &self.terms[position - 1].value(p) * &self.terms[position].value(p);
        product.is_identity()
    }

    /// Deletion of terms `position` and `position + 1`.
    pub fn peiffer_delete(&self, p: &Presentation, position: usize) -> Result<Self> {
        self.check_terms(p)?;
        check_position(position, 1, self.len().saturating_sub(1))?;
        if !self.can_delete(p, position) {
            return Err(Error::InapplicableMove(format!(
                "terms {position} and {} do not cancel",
                position + 1
            )));
        }
        let mut terms = self.terms.clone();
        terms.drain(position - 1..=position);
        Ok(IdentitySequence { terms })
    }

    /// Insertion of `(V R^e V^-1, V s^k R^-e s^-k V^-1)` before `position`
    /// (1-based, `1..=l+1`).
    pub fn peiffer_insert(
        &self,
        p: &Presentation,
        position: usize,
        data: &Insertion,
    ) -> Result<Self> {
        self.check_terms(p)?;
        check_position(position, 1, self.len() + 1)?;
        let r = p.relator(data.relator)?;
        if data.conjugator.rank() != p.rank() {
            return Err(Error::RankMismatch {
                left: p.rank(),
                right: data.conjugator.rank(),
            });
        }
        let s = root(r)?.root;
        let first = IdentityTerm::new(data.conjugator.clone(), data.relator, data.sign);
        let second = IdentityTerm::new(
            &data.conjugator * &s.pow(data.power),
            data.relator,
            -data.sign,
        );
        let mut terms = self.terms.clone();
        terms.splice(position - 1..position - 1, [first, second]);
        Ok(IdentitySequence { terms })
    }
}
