//! Finite presentations `<x1..xn | R1..Rm>`.
//!
//! File format, one directive per line:
//!
//! ```text
//! # torus
//! rank 2
//! relator x1 x2 x1^-1 x2^-1
//! ```

mod lattice;
mod word_problem;

use std::fmt;

pub use lattice::IntegerLattice;
pub use word_problem::{
    equal_in_h, normal_closure_contains, AbelianOracle, BoundedSearch, Budget, ConjugatedRelator,
    Evidence, Verdict, WordProblemOracle, WpVerdict,
};

use crate::error::{Error, Result};
use crate::freegroup::{are_conjugate, parse_word, Alphabet, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    rank: usize,
    relators: Vec<Word>,
}

/// A relator conjugate to its own inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SelfInverseWarning {
    /// 1-based.
    pub relator: usize,
}

impl fmt::Display for SelfInverseWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "relator {} is conjugate to its own inverse; deletion may not force equal indices",
            self.relator
        )
    }
}

impl Presentation {
    pub fn new(rank: usize, relators: Vec<Word>) -> Result<Self> {
        if rank == 0 {
            return Err(Error::RankTooSmall { rank, min: 1 });
        }
        if let Some(r) = relators.iter().find(|r| r.rank() != rank) {
            return Err(Error::RankMismatch {
                left: rank,
                right: r.rank(),
            });
        }
        Ok(Presentation { rank, relators })
    }

    /// Convenience constructor from signed-index relators.
    pub fn from_ints(rank: usize, relators: &[&[i32]]) -> Result<Self> {
        let relators = relators
            .iter()
            .map(|r| Word::from_ints(rank, r))
            .collect::<Result<Vec<_>>>()?;
        Presentation::new(rank, relators)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn relator_count(&self) -> usize {
        self.relators.len()
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// The relator `R_index`, 1-based.
    pub fn relator(&self, index: usize) -> Result<&Word> {
        if index == 0 || index > self.relators.len() {
            return Err(Error::RelatorIndex {
                index,
                count: self.relators.len(),
            });
        }
        Ok(&self.relators[index - 1])
    }

    /// Fails on the first trivial relator.
    pub fn validate(&self) -> Result<()> {
        match self.relators.iter().position(Word::is_identity) {
            Some(i) => Err(Error::Inconsistency(format!(
                "relator {} is trivial",
                i + 1
            ))),
            None => Ok(()),
        }
    }

    /// Relators non-trivial, reduced, and pairwise non-conjugate (also to inverses).
    pub fn is_concise(&self) -> bool {
        if self.relators.iter().any(Word::is_identity) {
            return false;
        }
        for (i, a) in self.relators.iter().enumerate() {
            for b in &self.relators[i + 1..] {
                if are_conjugate(a, b) || are_conjugate(a, &b.inverse()) {
                    return false;
                }
            }
        }
        true
    }

    /// Drops trivial relators and later duplicates up to conjugacy and inversion.
    /// Relators are already freely reduced; they are not cyclically reduced.
    pub fn concise_refinement(&self) -> Presentation {
        let mut kept: Vec<Word> = Vec::new();
        for r in &self.relators {
            if r.is_identity() {
                continue;
            }
            let inverse = r.inverse();
            if kept
                .iter()
                .any(|k| are_conjugate(k, r) || are_conjugate(k, &inverse))
            {
                continue;
            }
            kept.push(r.clone());
        }
        Presentation {
            rank: self.rank,
            relators: kept,
        }
    }

    /// Relators conjugate to their own inverse. In a free group no non-trivial
    /// element has this property, so for valid input the list is empty.
    pub fn check_strengthened_conciseness(&self) -> Vec<SelfInverseWarning> {
        self.relators
            .iter()
            .enumerate()
            .filter(|(_, r)| !r.is_identity() && are_conjugate(r, &r.inverse()))
            .map(|(i, _)| SelfInverseWarning { relator: i + 1 })
            .collect()
    }

    /// Integer lattice spanned by the relators' exponent-sum vectors.
    pub fn relator_lattice(&self) -> IntegerLattice {
        IntegerLattice::new(
            self.rank,
            self.relators.iter().map(Word::abelianize).collect(),
        )
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut rank: Option<usize> = None;
        let mut relators = Vec::new();
        for (index, raw) in text.lines().enumerate() {
            let line_no = index + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (keyword, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            match keyword {
                "rank" => {
                    if rank.is_some() {
                        return Err(Error::parse("duplicate `rank` line").at_line(line_no));
                    }
                    let n: usize = rest.trim().parse().map_err(|_| {
                        Error::parse(format!("invalid rank `{}`", rest.trim())).at_line(line_no)
                    })?;
                    if n == 0 {
                        return Err(Error::parse("rank must be positive").at_line(line_no));
                    }
                    rank = Some(n);
                }
                "relator" => {
                    let n = rank
                        .ok_or_else(|| Error::parse("`relator` before `rank`").at_line(line_no))?;
                    let word = parse_word(rest, n, &Alphabet::X).map_err(|e| e.at_line(line_no))?;
                    relators.push(word);
                }
                other => {
                    return Err(
                        Error::parse(format!("unknown directive `{other}`")).at_line(line_no)
                    )
                }
            }
        }
        let rank = rank.ok_or_else(|| Error::parse("missing `rank` line"))?;
        Presentation::new(rank, relators)
    }
}

impl fmt::Display for Presentation {
    /// Renders the file format.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "rank {}", self.rank)?;
        for r in &self.relators {
            writeln!(f, "relator {}", r.display(&Alphabet::X))?;
        }
        Ok(())
    }
}
