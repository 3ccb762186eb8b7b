//! Word-level counterparts of the Peiffer moves on `ker pi`.
//!
//! A kernel word `w = u_1 t_{i_1}^{e_1} ... u_l t_{i_l}^{e_l} u_{l+1}` carries the
//! identity with terms `(U_1 ... U_k) R_{i_k}^{e_k} (U_1 ... U_k)^-1`. Each
//! transform here rewrites the syllable form so that the identity of the new
//! form is exactly the Peiffer-transformed identity, term for term. The
//! `*_form` functions work on unreduced syllable forms; the `*_transform`
//! functions take and return reduced kernel words.

use super::{IdentitySequence, IdentityTerm, Insertion};
use crate::error::{Error, Result};
use crate::freegroup::{root, Sign, Word};
use crate::mihailova::{in_kernel_of_pi, MixedWord, SyllableForm, TLetter};
use crate::presentation::Presentation;

/// Where and what to insert for an insertion move: the fragment
/// `alpha t_i^e s^k t_i^-e s^-k alpha^-1` (with `s = root(r_i)`) is spliced at
/// the start of syllable `u_position`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct InsertionData {
    /// 1-based syllable index, `1..=l+1`.
    pub position: usize,
    pub relator: usize,
    pub sign: Sign,
    pub power: i64,
    /// A d-word, stored over rank `n`.
    pub alpha: Word,
}

fn relator_power(p: &Presentation, t: TLetter) -> Result<Word> {
    let r = p.relator(t.relator)?;
    Ok(match t.sign {
        Sign::Plus => r.clone(),
        Sign::Minus => r.inverse(),
    })
}

fn check_form(p: &Presentation, form: &SyllableForm) -> Result<()> {
    if form.n != p.rank() || form.m != p.relator_count() {
        return Err(Error::RankMismatch {
            left: p.rank() + p.relator_count(),
            right: form.n + form.m,
        });
    }
    for t in &form.t_letters {
        p.relator(t.relator)?;
    }
    Ok(())
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

/// Identity of a syllable form, with conjugators the accumulated products.
pub fn identity_of_form(form: &SyllableForm) -> IdentitySequence {
    let acc = form.accumulated();
    IdentitySequence::new(
        form.t_letters
            .iter()
            .zip(acc)
            .map(|(t, u)| IdentityTerm::new(u, t.relator, t.sign))
            .collect(),
    )
}

fn kernel_form(p: &Presentation, w: &MixedWord) -> Result<SyllableForm> {
    if !in_kernel_of_pi(p, w)? {
        return Err(Error::NotInKernel);
    }
    Ok(SyllableForm::decompose(w))
}

/// The identity associated to `w` in `ker pi`.
pub fn associated_identity(p: &Presentation, w: &MixedWord) -> Result<IdentitySequence> {
    Ok(identity_of_form(&kernel_form(p, w)?))
}

/// Realizes an exchange at `position`.
pub fn case1_form(p: &Presentation, form: &SyllableForm, position: usize) -> Result<SyllableForm> {
    check_form(p, form)?;
    check_position(position, 1, form.len().saturating_sub(1))?;
    let k = position - 1;
    let moved = form.t_letters[k + 1];
    let r = relator_power(p, moved)?;
    let (u_p, u_next, u_after) = (
        &form.syllables[k],
        &form.syllables[k + 1],
        &form.syllables[k + 2],
    );
    let mut out = form.clone();
    out.syllables[k] = u_p * u_next;
    out.syllables[k + 1] = &r.inverse() * &u_next.inverse();
    out.syllables[k + 2] = &(u_next * &r) * u_after;
    out.t_letters.swap(k, k + 1);
    Ok(out)
}

/// Realizes an inverse exchange at `position`; undoes [`case1_form`].
pub fn inverse_case1_form(
    p: &Presentation,
    form: &SyllableForm,
    position: usize,
) -> Result<SyllableForm> {
    check_form(p, form)?;
    check_position(position, 1, form.len().saturating_sub(1))?;
    let k = position - 1;
    let moved = form.t_letters[k];
    let r = relator_power(p, moved)?;
    let (v_p, v_next, v_after) = (
        &form.syllables[k],
        &form.syllables[k + 1],
        &form.syllables[k + 2],
    );
    let mut out = form.clone();
    out.syllables[k] = &(v_p * &r) * v_next;
    out.syllables[k + 1] = &v_next.inverse() * &r.inverse();
    out.syllables[k + 2] = v_next * v_after;
    out.t_letters.swap(k, k + 1);
    Ok(out)
}

/// Exponent `e` with `u = s^e`, if any.
fn power_of(u: &Word, s: &Word) -> Option<i64> {
    if u.is_identity() {
        return Some(0);
    }
    let decomposition = root(u).ok()?;
    let e = decomposition.exponent as i64;
    if decomposition.root == *s {
        Some(e)
    } else if decomposition.root == s.inverse() {
        Some(-e)
    } else {
        None
    }
}

/// Realizes a deletion at `position`: merges `u_p u_{p+1} u_{p+2}` and drops the
/// two t-letters between them.
pub fn case2_form(p: &Presentation, form: &SyllableForm, position: usize) -> Result<SyllableForm> {
    check_form(p, form)?;
    check_position(position, 1, form.len().saturating_sub(1))?;
    let identity = identity_of_form(form);
    if !identity.can_delete(p, position) {
        return Err(Error::InapplicableMove(format!(
            "terms {position} and {} of the associated identity do not cancel",
            position + 1
        )));
    }
    let k = position - 1;
    let (a, b) = (form.t_letters[k], form.t_letters[k + 1]);
    if a.relator != b.relator || a.sign == b.sign {
        return Err(Error::Inconsistency(format!(
            "cancelling terms use t{}^{} and t{}^{}; the presentation is not concise",
            a.relator, a.sign, b.relator, b.sign
        )));
    }
    let s = root(p.relator(a.relator)?)?.root;
    let between = &form.syllables[k + 1];
    if power_of(between, &s).is_none() {
        return Err(Error::Inconsistency(format!(
            "syllable {} is not a power of root(r{})",
            position + 1,
            a.relator
        )));
    }
    let mut out = form.clone();
    out.syllables[k] = &(&form.syllables[k] * between) * &form.syllables[k + 2];
    out.syllables.drain(k + 1..=k + 2);
    out.t_letters.drain(k..=k + 1);
    Ok(out)
}

/// Realizes an insertion: splices `alpha t_i^e s^k t_i^-e s^-k alpha^-1` at the
/// start of syllable `u_position`. The associated identity gains the pair
/// `(V R_i^e V^-1, V S^k R_i^-e S^-k V^-1)` with `V = U_1 ... U_{position-1} A`.
pub fn case3_form(
    p: &Presentation,
    form: &SyllableForm,
    data: &InsertionData,
) -> Result<SyllableForm> {
    check_form(p, form)?;
    check_position(data.position, 1, form.len() + 1)?;
    if data.alpha.rank() != p.rank() {
        return Err(Error::RankMismatch {
            left: p.rank(),
            right: data.alpha.rank(),
        });
    }
    let s = root(p.relator(data.relator)?)?.root.pow(data.power);
    let k = data.position - 1;
    let tail = &(&s.inverse() * &data.alpha.inverse()) * &form.syllables[k];
    let mut out = form.clone();
    out.syllables.splice(k..=k, [data.alpha.clone(), s, tail]);
    out.t_letters.splice(
        k..k,
        [
            TLetter {
                relator: data.relator,
                sign: data.sign,
            },
            TLetter {
                relator: data.relator,
                sign: -data.sign,
            },
        ],
    );
    Ok(out)
}

/// Peiffer insertion matching [`case3_form`]. The prefix product
/// `U_1 ... U_{position-1}` is the conjugator of term `position - 1`.
pub fn insertion_for(identity: &IdentitySequence, data: &InsertionData) -> Insertion {
    let conjugator = if data.position >= 2 {
        &identity.terms[data.position - 2].conjugator * &data.alpha
    } else {
        data.alpha.clone()
    };
    Insertion {
        relator: data.relator,
        sign: data.sign,
        conjugator,
        power: data.power,
    }
}

/// Case 1 on a reduced kernel word; the result is freely reduced.
pub fn case1_transform(p: &Presentation, w: &MixedWord, position: usize) -> Result<MixedWord> {
    let form = kernel_form(p, w)?;
    Ok(case1_form(p, &form, position)?.recompose())
}

/// Case 2 on a reduced kernel word; the result is freely reduced.
pub fn case2_transform(p: &Presentation, w: &MixedWord, position: usize) -> Result<MixedWord> {
    let form = kernel_form(p, w)?;
    Ok(case2_form(p, &form, position)?.recompose())
}

/// Case 3 on a reduced kernel word; the result is freely reduced.
pub fn case3_transform(p: &Presentation, w: &MixedWord, data: &InsertionData) -> Result<MixedWord> {
    let form = kernel_form(p, w)?;
    Ok(case3_form(p, &form, data)?.recompose())
}
