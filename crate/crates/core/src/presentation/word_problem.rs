//! Bounded semidecision for membership in the normal closure of the relators.
//!
//! Positive answers come from a best-first search over cyclic words: the
//! query is replaced by its canonical cyclic representative (membership in a
//! normal subgroup is conjugation invariant) and each move splices a cyclic
//! conjugate of `R_i^{+-1}`, optionally wrapped in a short conjugator, at a
//! cyclic position. Negative answers come from the exponent-sum lattice,
//! which is exact.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};

use super::Presentation;
use crate::freegroup::{cyclic_reduce, minimal_rotation, Sign, Word};

/// `conjugator * R_relator^sign * conjugator^-1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConjugatedRelator {
    pub conjugator: Word,
    /// 1-based.
    pub relator: usize,
    pub sign: Sign,
}

impl ConjugatedRelator {
    pub fn new(conjugator: Word, relator: usize, sign: Sign) -> Self {
        ConjugatedRelator {
            conjugator,
            relator,
            sign,
        }
    }

    /// Panics if the relator index is out of range for `p`.
    pub fn value(&self, p: &Presentation) -> Word {
        let r = &p.relators()[self.relator - 1];
        let r = match self.sign {
            Sign::Plus => r.clone(),
            Sign::Minus => r.inverse(),
        };
        &(&self.conjugator * &r) * &self.conjugator.inverse()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Node expansions.
    pub max_steps: usize,
    /// Extra conjugator wrapped around a spliced relator rotation.
    pub max_conjugator_len: usize,
    /// Intermediate cyclic words longer than this are discarded.
    pub max_word_len: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_steps: 10_000,
            max_conjugator_len: 0,
            max_word_len: 32,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    EqualInH,
    NotEqualInH,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Evidence {
    /// Conjugated relators whose product, in order, freely equals the query.
    Factors(Vec<ConjugatedRelator>),
    /// Exponent-sum vector of the query, outside the relator lattice.
    Obstruction(Vec<i64>),
    /// Search exhausted; number of expansions performed.
    Exhausted { steps: usize },
    /// Supplied by an external oracle without a certificate.
    None,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WpVerdict {
    pub outcome: Verdict,
    pub evidence: Evidence,
}

impl WpVerdict {
    /// Re-checks the evidence: factors multiply out to `w`, or the obstruction
    /// really lies outside the lattice.
    pub fn verify(&self, p: &Presentation, w: &Word) -> bool {
        match (&self.outcome, &self.evidence) {
            (Verdict::EqualInH, Evidence::Factors(fs)) => {
                let product = fs
                    .iter()
                    .fold(Word::identity(p.rank()), |acc, f| &acc * &f.value(p));
                product == *w
            }
            (Verdict::NotEqualInH, Evidence::Obstruction(v)) => {
                *v == w.abelianize() && !p.relator_lattice().contains(v)
            }
            (Verdict::Unknown, _) => true,
            _ => false,
        }
    }
}

/// Pluggable decision procedure for `w1 =_H w2`.
pub trait WordProblemOracle {
    fn equal(&self, p: &Presentation, w1: &Word, w2: &Word) -> WpVerdict;
}

/// The default bounded search.
#[derive(Debug, Clone, Copy, Default)]
pub struct BoundedSearch(pub Budget);

impl WordProblemOracle for BoundedSearch {
    fn equal(&self, p: &Presentation, w1: &Word, w2: &Word) -> WpVerdict {
        equal_in_h(p, w1, w2, &self.0)
    }
}

/// Exact when the caller knows `H` is abelian: equality of exponent sums
/// modulo the relator lattice.
#[derive(Debug, Clone, Copy, Default)]
pub struct AbelianOracle;

impl WordProblemOracle for AbelianOracle {
    fn equal(&self, p: &Presentation, w1: &Word, w2: &Word) -> WpVerdict {
        let diff = w1 * &w2.inverse();
        let v = diff.abelianize();
        if p.relator_lattice().contains(&v) {
            WpVerdict {
                outcome: Verdict::EqualInH,
                evidence: Evidence::None,
            }
        } else {
            WpVerdict {
                outcome: Verdict::NotEqualInH,
                evidence: Evidence::Obstruction(v),
            }
        }
    }
}

/// Decides `w1 =_H w2` via membership of `w1 w2^-1` in the normal closure.
pub fn equal_in_h(p: &Presentation, w1: &Word, w2: &Word, budget: &Budget) -> WpVerdict {
    normal_closure_contains(p, &(w1 * &w2.inverse()), budget)
}

struct Node {
    word: Word,
    // The query equals transport * word * transport^-1 * (factors along the path).
    transport: Word,
    parent: Option<usize>,
    factor: Option<ConjugatedRelator>,
}

/// A cyclic conjugate `rho = kappa^-1 R^sign kappa` of a relator.
struct Splice {
    rho: Word,
    kappa: Word,
    relator: usize,
    sign: Sign,
}

fn splices(p: &Presentation, max_conjugator_len: usize) -> Vec<Splice> {
    let conjugators = Word::ball(p.rank(), max_conjugator_len);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for (i, r) in p.relators().iter().enumerate() {
        if r.is_identity() {
            continue;
        }
        for sign in [Sign::Plus, Sign::Minus] {
            let power = if sign == Sign::Plus {
                r.clone()
            } else {
                r.inverse()
            };
            let (core, e) = cyclic_reduce(&power);
            for offset in 0..core.len() {
                let s = Word::from_reduced_unchecked(p.rank(), core.letters()[..offset].to_vec());
                let rho = &(&s.inverse() * &core) * &s;
                let kappa = &e * &s;
                for z in &conjugators {
                    // z rho z^-1 = (kappa z^-1)^-1 R^sign (kappa z^-1)
                    let wrapped = &(z * &rho) * &z.inverse();
                    if !seen.insert(wrapped.clone()) {
                        continue;
                    }
                    out.push(Splice {
                        rho: wrapped,
                        kappa: &kappa * &z.inverse(),
                        relator: i + 1,
                        sign,
                    });
                }
            }
        }
    }
    out
}

/// Splits a reduced word as `conj * canonical * conj^-1` with `canonical` the
/// least rotation of the cyclic core.
fn canonical_cyclic(w: &Word) -> (Word, Word) {
    let (core, e) = cyclic_reduce(w);
    let (canonical, offset) = minimal_rotation(&core);
    let f = Word::from_reduced_unchecked(w.rank(), core.letters()[..offset].to_vec());
    (canonical, &e * &f)
}

fn rotate(w: &Word, at: usize) -> (Word, Word) {
    let prefix = Word::from_reduced_unchecked(w.rank(), w.letters()[..at].to_vec());
    let mut letters = w.letters()[at..].to_vec();
    letters.extend_from_slice(&w.letters()[..at]);
    // A cyclically reduced word stays reduced under rotation.
    (Word::from_reduced_unchecked(w.rank(), letters), prefix)
}

/// Bounded membership test for the normal closure of the relators.
pub fn normal_closure_contains(p: &Presentation, w: &Word, budget: &Budget) -> WpVerdict {
    if w.is_identity() {
        return WpVerdict {
            outcome: Verdict::EqualInH,
            evidence: Evidence::Factors(Vec::new()),
        };
    }
    let v = w.abelianize();
    if !p.relator_lattice().contains(&v) {
        return WpVerdict {
            outcome: Verdict::NotEqualInH,
            evidence: Evidence::Obstruction(v),
        };
    }

    let moves = splices(p, budget.max_conjugator_len);
    let (start, transport) = canonical_cyclic(w);
    let mut nodes = vec![Node {
        word: start.clone(),
        transport,
        parent: None,
        factor: None,
    }];
    let mut visited = HashSet::from([start.clone()]);
    let mut frontier = BinaryHeap::from([Reverse((start.len(), 0usize))]);
    let mut steps = 0;

    while let Some(Reverse((_, id))) = frontier.pop() {
        if steps >= budget.max_steps {
            break;
        }
        steps += 1;
        let current = nodes[id].word.clone();
        let positions = current.len().max(1);
        for at in 0..positions {
            let (rotated, a) = rotate(&current, at.min(current.len()));
            for m in &moves {
                let x = &rotated * &m.rho;
                let (next, tail) = canonical_cyclic(&x);
                if next.len() > budget.max_word_len || visited.contains(&next) {
                    continue;
                }
                let c = &nodes[id].transport;
                let conjugator = &(c * &a) * &m.kappa.inverse();
                let factor = ConjugatedRelator::new(conjugator, m.relator, -m.sign);
                let transport = &(c * &a) * &tail;
                visited.insert(next.clone());
                nodes.push(Node {
                    word: next.clone(),
                    transport,
                    parent: Some(id),
                    factor: Some(factor),
                });
                let child = nodes.len() - 1;
                if next.is_identity() {
                    return WpVerdict {
                        outcome: Verdict::EqualInH,
                        evidence: Evidence::Factors(collect_factors(&nodes, child)),
                    };
                }
                frontier.push(Reverse((next.len(), child)));
            }
        }
    }
    WpVerdict {
        outcome: Verdict::Unknown,
        evidence: Evidence::Exhausted { steps },
    }
}

fn collect_factors(nodes: &[Node], mut id: usize) -> Vec<ConjugatedRelator> {
    // The newest factor is leftmost in the product.
    let mut out = Vec::new();
    while let Some(parent) = nodes[id].parent {
        out.push(
            nodes[id]
                .factor
                .clone()
                .expect("non-root nodes carry a factor"),
        );
        id = parent;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn torus() -> Presentation {
        Presentation::from_ints(2, &[&[1, 2, -1, -2]]).unwrap()
    }

    fn w(ints: &[i32]) -> Word {
        Word::from_ints(2, ints).unwrap()
    }

    #[test]
    fn relator_itself() {
        let p = torus();
        let q = w(&[1, 2, -1, -2]);
        let v = normal_closure_contains(&p, &q, &Budget::default());
        assert_eq!(v.outcome, Verdict::EqualInH);
        assert!(v.verify(&p, &q));
    }

    #[test]
    fn abelian_obstruction() {
        let p = torus();
        let v = normal_closure_contains(&p, &w(&[1]), &Budget::default());
        assert_eq!(v.outcome, Verdict::NotEqualInH);
        assert_eq!(v.evidence, Evidence::Obstruction(vec![1, 0]));
    }

    #[test]
    fn two_factor_product() {
        let p = torus();
        let r = w(&[1, 2, -1, -2]);
        let q = &r.conjugate(&w(&[2])).unwrap() * &r.inverse();
        let v = normal_closure_contains(&p, &q, &Budget::default());
        assert_eq!(v.outcome, Verdict::EqualInH);
        assert!(v.verify(&p, &q));
    }

    #[test]
    fn equal_in_h_examples() {
        let p = torus();
        let b = Budget::default();
        let a = w(&[1, 2, -1]);
        assert_eq!(equal_in_h(&p, &a, &a, &b).outcome, Verdict::EqualInH);
        let v = equal_in_h(&p, &w(&[1, 2]), &w(&[2, 1]), &b);
        assert_eq!(v.outcome, Verdict::EqualInH);
        assert!(v.verify(&p, &w(&[1, 2, -1, -2])));
        assert_eq!(
            equal_in_h(&p, &w(&[1]), &w(&[2]), &b).outcome,
            Verdict::NotEqualInH
        );
    }

    #[test]
    fn unknown_when_out_of_budget() {
        // x1^3 x2^3 x1^-3 x2^-3 needs area 9
        let p = torus();
        let q = w(&[1, 1, 1, 2, 2, 2, -1, -1, -1, -2, -2, -2]);
        let tight = Budget {
            max_steps: 1,
            ..Budget::default()
        };
        let v = normal_closure_contains(&p, &q, &tight);
        assert_eq!(v.outcome, Verdict::Unknown);
        let v = normal_closure_contains(&p, &q, &Budget::default());
        assert_eq!(v.outcome, Verdict::EqualInH);
        assert!(v.verify(&p, &q));
    }

    #[test]
    fn wrapped_conjugators_still_certify() {
        let p = Presentation::from_ints(2, &[&[1, 1, -2, -2, -2]]).unwrap();
        let r = w(&[1, 1, -2, -2, -2]);
        let q = &r.conjugate(&w(&[2, 1])).unwrap() * &r.conjugate(&w(&[-1])).unwrap();
        let budget = Budget {
            max_conjugator_len: 1,
            ..Budget::default()
        };
        let v = normal_closure_contains(&p, &q, &budget);
        assert_eq!(v.outcome, Verdict::EqualInH);
        assert!(v.verify(&p, &q));
    }

    #[test]
    fn abelian_oracle() {
        let p = torus();
        let v = AbelianOracle.equal(&p, &w(&[1, 2]), &w(&[2, 1]));
        assert_eq!(v.outcome, Verdict::EqualInH);
        let v = AbelianOracle.equal(&p, &w(&[1]), &w(&[2]));
        assert_eq!(v.outcome, Verdict::NotEqualInH);
    }
}
