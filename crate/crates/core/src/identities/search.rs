//! Bounded best-first search for a Peiffer reduction of the identity
//! associated to a kernel word, carrying the word along through the case
//! transforms. A successful run is a constructive witness that the word lies
//! in the normal closure of the relator family.
//!
//! Nodes are ordered by (identity length, total conjugator length,
//! insertions used, discovery order). Besides the primitive moves, each node
//! offers "transport then delete": term `q` is walked left to `p + 1` by
//! inverse exchanges and the pair `(p, p + 1)` is deleted, recorded in the
//! script as the underlying primitive moves.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};
use std::fmt;

use super::transforms::{
    associated_identity, case1_form, case2_form, case3_form, identity_of_form, insertion_for,
    inverse_case1_form, InsertionData,
};
use super::IdentitySequence;
use crate::error::{Error, Result};
use crate::freegroup::{parse_word, Alphabet, Sign, Word};
use crate::mihailova::{in_kernel_of_pi, MixedWord, SyllableForm};
use crate::presentation::Presentation;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Move {
    Exchange(usize),
    InverseExchange(usize),
    Delete(usize),
    Insert(InsertionData),
}

impl Move {
    pub fn apply_to_form(&self, p: &Presentation, form: &SyllableForm) -> Result<SyllableForm> {
        match self {
            Move::Exchange(k) => case1_form(p, form, *k),
            Move::InverseExchange(k) => inverse_case1_form(p, form, *k),
            Move::Delete(k) => case2_form(p, form, *k),
            Move::Insert(data) => case3_form(p, form, data),
        }
    }

    pub fn apply_to_identity(
        &self,
        p: &Presentation,
        identity: &IdentitySequence,
    ) -> Result<IdentitySequence> {
        match self {
            Move::Exchange(k) => identity.peiffer_exchange(p, *k),
            Move::InverseExchange(k) => identity.peiffer_inverse_exchange(p, *k),
            Move::Delete(k) => identity.peiffer_delete(p, *k),
            Move::Insert(data) => {
                identity.peiffer_insert(p, data.position, &insertion_for(identity, data))
            }
        }
    }

    fn display(&self, n: usize) -> String {
        match self {
            Move::Exchange(k) => format!("exchange {k}"),
            Move::InverseExchange(k) => format!("inv-exchange {k}"),
            Move::Delete(k) => format!("delete {k}"),
            Move::Insert(d) => format!(
                "insert {} {} {} {} {}",
                d.position,
                d.relator,
                d.sign,
                d.power,
                d.alpha.display(&Alphabet::Mixed { n })
            ),
        }
    }

    fn parse(line: &str, n: usize) -> Result<Option<Move>> {
        let mut tokens = line.split_whitespace();
        let Some(keyword) = tokens.next() else {
            return Ok(None);
        };
        let number = |t: Option<&str>| -> Result<i64> {
            t.and_then(|s| s.parse().ok())
                .ok_or_else(|| Error::parse(format!("bad number in `{line}`")))
        };
        let position = |t: Option<&str>| -> Result<usize> {
            let v = number(t)?;
            usize::try_from(v).map_err(|_| Error::parse(format!("bad position in `{line}`")))
        };
        let mv = match keyword {
            "exchange" => Move::Exchange(position(tokens.next())?),
            "inv-exchange" => Move::InverseExchange(position(tokens.next())?),
            "delete" => Move::Delete(position(tokens.next())?),
            "insert" => {
                let pos = position(tokens.next())?;
                let relator = position(tokens.next())?;
                let sign = Sign::from_i32(number(tokens.next())? as i32)
                    .ok_or_else(|| Error::parse(format!("bad sign in `{line}`")))?;
                let power = number(tokens.next())?;
                let rest: Vec<&str> = tokens.collect();
                let alpha = parse_word(&rest.join(" "), n, &Alphabet::Mixed { n })?;
                Move::Insert(InsertionData {
                    position: pos,
                    relator,
                    sign,
                    power,
                    alpha,
                })
            }
            _ => return Ok(None),
        };
        Ok(Some(mv))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReductionBudget {
    /// Node expansions.
    pub max_moves: usize,
    /// Insertions allowed along one path.
    pub max_insertions: usize,
    /// Nodes waiting in the frontier; children beyond this are dropped.
    pub max_frontier: usize,
    /// Forms whose recomposed length (with t-letters) exceeds this are dropped.
    pub max_word_len: usize,
    /// Length bound on the `alpha` word of an insertion.
    pub max_alpha_len: usize,
}

impl Default for ReductionBudget {
    fn default() -> Self {
        ReductionBudget {
            max_moves: 10_000,
            max_insertions: 0,
            max_frontier: 200_000,
            max_word_len: 512,
            max_alpha_len: 1,
        }
    }
}

/// A Peiffer reduction to the empty identity with aligned word and identity
/// trails. `word_trail[0]` is the input word and the trails are one longer
/// than the script.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionCertificate {
    pub script: Vec<Move>,
    pub word_trail: Vec<MixedWord>,
    pub identity_trail: Vec<IdentitySequence>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReductionOutcome {
    Reduced(ReductionCertificate),
    Unknown { expansions: usize, frontier: usize },
}

impl ReductionCertificate {
    /// Replays `script` from `w`, building both trails.
    pub fn replay(p: &Presentation, w: &MixedWord, script: Vec<Move>) -> Result<Self> {
        let mut form = SyllableForm::decompose(w);
        let mut identity = associated_identity(p, w)?;
        let mut word_trail = vec![w.clone()];
        let mut identity_trail = vec![identity.clone()];
        for mv in &script {
            form = mv.apply_to_form(p, &form)?;
            identity = mv.apply_to_identity(p, &identity)?;
            word_trail.push(form.recompose());
            identity_trail.push(identity.clone());
        }
        Ok(ReductionCertificate {
            script,
            word_trail,
            identity_trail,
        })
    }

    /// Checks every stored invariant: trails replay exactly, each identity is
    /// the identity of its syllable form, every trail word lies in `ker pi`,
    /// and both trails end empty.
    pub fn check(&self, p: &Presentation) -> Result<()> {
        let fail = |msg: String| Err(Error::Inconsistency(msg));
        let Some(w) = self.word_trail.first() else {
            return fail("empty word trail".into());
        };
        if self.word_trail.len() != self.script.len() + 1
            || self.identity_trail.len() != self.script.len() + 1
        {
            return fail("trail lengths do not match the script".into());
        }
        if self.identity_trail[0] != associated_identity(p, w)? {
            return fail("first identity is not the associated identity".into());
        }
        let mut form = SyllableForm::decompose(w);
        for (k, mv) in self.script.iter().enumerate() {
            form = mv.apply_to_form(p, &form)?;
            let identity = mv.apply_to_identity(p, &self.identity_trail[k])?;
            if identity != self.identity_trail[k + 1] {
                return fail(format!("identity trail diverges at step {}", k + 1));
            }
            if identity_of_form(&form) != identity {
                return fail(format!("word and identity disagree at step {}", k + 1));
            }
            if !identity.is_identity(p) {
                return fail(format!("step {} is not an identity among relations", k + 1));
            }
            let word = form.recompose();
            if word != self.word_trail[k + 1] {
                return fail(format!("word trail diverges at step {}", k + 1));
            }
            if !in_kernel_of_pi(p, &word)? {
                return fail(format!("step {} leaves ker pi", k + 1));
            }
        }
        let last_word = self.word_trail.last().expect("non-empty");
        let last_identity = self.identity_trail.last().expect("non-empty");
        if !last_word.is_identity() || !last_identity.is_empty() {
            return fail("reduction does not end at the empty word".into());
        }
        Ok(())
    }

    pub fn render(&self) -> String {
        let n = self.word_trail.first().map_or(0, MixedWord::n);
        let mut out = String::new();
        for mv in &self.script {
            out.push_str(&mv.display(n));
            out.push('\n');
        }
        for w in &self.word_trail {
            out.push_str(&w.to_string());
            out.push('\n');
        }
        out
    }

    /// Parses the output of [`Self::render`]; the identity trail is rebuilt by
    /// replay and the word trail is checked against it.
    pub fn parse(p: &Presentation, text: &str) -> Result<Self> {
        let (n, m) = (p.rank(), p.relator_count());
        let mut script = Vec::new();
        let mut words = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(mv) = Move::parse(line, n).map_err(|e| e.at_line(i + 1))? {
                if !words.is_empty() {
                    return Err(Error::parse("move after the word trail").at_line(i + 1));
                }
                script.push(mv);
            } else {
                words.push(MixedWord::parse(line, n, m).map_err(|e| e.at_line(i + 1))?);
            }
        }
        let first = words
            .first()
            .ok_or_else(|| Error::parse("certificate has no word trail"))?
            .clone();
        let replayed = ReductionCertificate::replay(p, &first, script)?;
        if replayed.word_trail != words {
            return Err(Error::Inconsistency(
                "word trail does not match the replayed script".into(),
            ));
        }
        Ok(replayed)
    }
}

impl fmt::Display for ReductionCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

struct Node {
    form: SyllableForm,
    identity: IdentitySequence,
    parent: Option<usize>,
    moves: Vec<Move>,
    insertions: usize,
}

fn form_size(form: &SyllableForm) -> usize {
    form.len() + form.syllables.iter().map(Word::len).sum::<usize>()
}

/// Macro moves that walk term `q` next to term `p` and delete the pair.
fn transport_deletions(p: &Presentation, identity: &IdentitySequence) -> Vec<Vec<Move>> {
    let values: Vec<Word> = identity.terms.iter().map(|t| t.value(p)).collect();
    let mut out = Vec::new();
    for a in 0..values.len() {
        let target = values[a].inverse();
        let mut between = Word::identity(p.rank());
        for (b, value) in values.iter().enumerate().skip(a + 1) {
            let moved = &(&between * value) * &between.inverse();
            if moved == target {
                // 1-based: inverse exchanges at b, b-1, ..., a+2, then delete at a+1.
                let mut moves: Vec<Move> = (a + 2..=b).rev().map(Move::InverseExchange).collect();
                moves.push(Move::Delete(a + 1));
                out.push(moves);
            }
            between = &between * value;
        }
    }
    out
}

fn candidate_moves(
    p: &Presentation,
    node: &Node,
    budget: &ReductionBudget,
    alphas: &[Word],
) -> Vec<Vec<Move>> {
    let l = node.identity.len();
    let mut out = transport_deletions(p, &node.identity);
    for k in 1..l {
        out.push(vec![Move::Exchange(k)]);
        out.push(vec![Move::InverseExchange(k)]);
    }
    if node.insertions < budget.max_insertions {
        for position in 1..=l + 1 {
            for relator in 1..=p.relator_count() {
                for sign in [Sign::Plus, Sign::Minus] {
                    for power in [0, 1, -1] {
                        for alpha in alphas {
                            out.push(vec![Move::Insert(InsertionData {
                                position,
                                relator,
                                sign,
                                power,
                                alpha: alpha.clone(),
                            })]);
                        }
                    }
                }
            }
        }
    }
    out
}

fn apply_all(p: &Presentation, form: &SyllableForm, moves: &[Move]) -> Option<SyllableForm> {
    let mut form = form.clone();
    for mv in moves {
        form = mv.apply_to_form(p, &form).ok()?;
    }
    Some(form)
}

/// Searches for a Peiffer reduction of the identity associated to `w`.
pub fn reduce_to_empty(
    p: &Presentation,
    w: &MixedWord,
    budget: &ReductionBudget,
) -> Result<ReductionOutcome> {
    let identity = associated_identity(p, w)?;
    let start = SyllableForm::decompose(w);
    if identity.is_empty() {
        return Ok(ReductionOutcome::Reduced(ReductionCertificate::replay(
            p,
            w,
            Vec::new(),
        )?));
    }
    let alphas = Word::ball(p.rank(), budget.max_alpha_len);
    let mut nodes = vec![Node {
        form: start.clone(),
        identity: identity.clone(),
        parent: None,
        moves: Vec::new(),
        insertions: 0,
    }];
    let mut visited = HashSet::from([start]);
    let mut frontier =
        BinaryHeap::from([Reverse((identity.len(), identity.weight(), 0usize, 0usize))]);
    let mut expansions = 0;

    while let Some(Reverse((_, _, _, id))) = frontier.pop() {
        if expansions >= budget.max_moves {
            break;
        }
        expansions += 1;
        for moves in candidate_moves(p, &nodes[id], budget, &alphas) {
            let Some(form) = apply_all(p, &nodes[id].form, &moves) else {
                continue;
            };
            if form_size(&form) > budget.max_word_len || visited.contains(&form) {
                continue;
            }
            let identity = identity_of_form(&form);
            let insertions = nodes[id].insertions
                + moves
                    .iter()
                    .filter(|m| matches!(m, Move::Insert(_)))
                    .count();
            visited.insert(form.clone());
            let done = identity.is_empty();
            let key = (identity.len(), identity.weight(), insertions, nodes.len());
            nodes.push(Node {
                form,
                identity,
                parent: Some(id),
                moves,
                insertions,
            });
            if done {
                let script = collect_script(&nodes, nodes.len() - 1);
                let certificate = ReductionCertificate::replay(p, w, script)?;
                return Ok(ReductionOutcome::Reduced(certificate));
            }
            if frontier.len() < budget.max_frontier {
                frontier.push(Reverse(key));
            }
        }
    }
    Ok(ReductionOutcome::Unknown {
        expansions,
        frontier: frontier.len(),
    })
}

fn collect_script(nodes: &[Node], mut id: usize) -> Vec<Move> {
    let mut chunks = Vec::new();
    while let Some(parent) = nodes[id].parent {
        chunks.push(nodes[id].moves.clone());
        id = parent;
    }
    chunks.into_iter().rev().flatten().collect()
}
