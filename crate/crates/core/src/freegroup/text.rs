//! Word text format: space-separated tokens such as `x3` and `x3^-1`; the
//! empty word is written `1`.

use std::fmt;

use super::{reduce, Letter, Sign, Word};
use crate::error::{Error, Result};

/// Letter naming for a given context.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Alphabet {
    /// `x1 .. xn`.
    X,
    /// `d1 .. dn` for indices `1..=n`, then `t1 .. tm`.
    Mixed { n: usize },
    /// `q`, `a`, `b` for indices 1, 2, 3.
    Qab,
    /// `a`, `b` for indices 1, 2.
    Ab,
}

impl Alphabet {
    fn name(&self, generator: usize) -> String {
        match *self {
            Alphabet::X => format!("x{generator}"),
            Alphabet::Mixed { n } if generator <= n => format!("d{generator}"),
            Alphabet::Mixed { n } => format!("t{}", generator - n),
            Alphabet::Qab => ["q", "a", "b"]
                .get(generator - 1)
                .map_or_else(|| format!("?{generator}"), |s| s.to_string()),
            Alphabet::Ab => ["a", "b"]
                .get(generator - 1)
                .map_or_else(|| format!("?{generator}"), |s| s.to_string()),
        }
    }

    fn generator(&self, name: &str) -> Result<usize> {
        let indexed = |prefix: char| -> Option<usize> {
            let rest = name.strip_prefix(prefix)?;
            if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
                return None;
            }
            rest.parse().ok()
        };
        let found = match *self {
            Alphabet::X => indexed('x'),
            Alphabet::Mixed { n } => indexed('d')
                .filter(|&k| k <= n || k == 0)
                .or_else(|| indexed('t').map(|k| if k == 0 { 0 } else { n + k })),
            Alphabet::Qab => ["q", "a", "b"]
                .iter()
                .position(|&s| s == name)
                .map(|i| i + 1),
            Alphabet::Ab => ["a", "b"].iter().position(|&s| s == name).map(|i| i + 1),
        };
        match found {
            Some(0) => Err(Error::parse(format!("generator index 0 in `{name}`"))),
            Some(k) => Ok(k),
            None => Err(Error::parse(format!("unknown letter `{name}`"))),
        }
    }
}

/// Parses a word; the result is freely reduced.
pub fn parse_word(text: &str, rank: usize, alphabet: &Alphabet) -> Result<Word> {
    let text = text.trim();
    if text == "1" {
        return Ok(Word::identity(rank));
    }
    if text.is_empty() {
        return Err(Error::parse("empty word must be written `1`"));
    }
    let mut letters = Vec::new();
    for token in text.split_whitespace() {
        let (name, sign) = match token.strip_suffix("^-1") {
            Some(name) => (name, Sign::Minus),
            None => (token, Sign::Plus),
        };
        let generator = alphabet.generator(name)?;
        if generator > rank {
            return Err(Error::parse(format!(
                "letter `{name}` outside alphabet of rank {rank}"
            )));
        }
        letters.push(Letter::new(generator, sign));
    }
    reduce(letters, rank)
}

/// Parses `(<word> , <word>)`.
pub fn parse_pair(text: &str, rank: usize, alphabet: &Alphabet) -> Result<(Word, Word)> {
    let inner = text
        .trim()
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| Error::parse("pair must be written `(<word> , <word>)`"))?;
    let (left, right) = inner
        .split_once(',')
        .ok_or_else(|| Error::parse("pair is missing the `,` separator"))?;
    Ok((
        parse_word(left, rank, alphabet)?,
        parse_word(right, rank, alphabet)?,
    ))
}

pub struct DisplayWord<'a> {
    pub(super) word: &'a Word,
    pub(super) alphabet: &'a Alphabet,
}

impl fmt::Display for DisplayWord<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return f.write_str("1");
        }
        for (i, l) in self.word.letters().iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(&self.alphabet.name(l.generator()))?;
            if l.sign() == Sign::Minus {
                f.write_str("^-1")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_x() {
        let w = Word::from_ints(3, &[3, -1, 2]).unwrap();
        let text = w.display(&Alphabet::X).to_string();
        assert_eq!(text, "x3 x1^-1 x2");
        assert_eq!(parse_word(&text, 3, &Alphabet::X).unwrap(), w);
    }

    #[test]
    fn mixed_names() {
        let a = Alphabet::Mixed { n: 2 };
        let w = parse_word("t1 d2^-1 t2^-1", 4, &a).unwrap();
        assert_eq!(w.to_ints(), vec![3, -2, -4]);
        assert_eq!(w.display(&a).to_string(), "t1 d2^-1 t2^-1");
        assert!(parse_word("d3", 4, &a).is_err());
        assert!(parse_word("t3", 4, &a).is_err());
    }

    #[test]
    fn identity_and_errors() {
        assert!(parse_word("1", 2, &Alphabet::X).unwrap().is_empty());
        assert_eq!(Word::identity(2).display(&Alphabet::X).to_string(), "1");
        assert!(parse_word("x0", 2, &Alphabet::X).is_err());
        assert!(parse_word("x3", 2, &Alphabet::X).is_err());
        assert!(parse_word("y1", 2, &Alphabet::X).is_err());
        assert!(parse_word("x1^2", 2, &Alphabet::X).is_err());
        assert!(parse_word("", 2, &Alphabet::X).is_err());
    }

    #[test]
    fn parses_unreduced_input() {
        let w = parse_word("x1 x1^-1 x2", 2, &Alphabet::X).unwrap();
        assert_eq!(w.to_ints(), vec![2]);
    }

    #[test]
    fn qab_and_pair() {
        let w = parse_word("a q b^-1", 3, &Alphabet::Qab).unwrap();
        assert_eq!(w.to_ints(), vec![2, 1, -3]);
        let (l, r) = parse_pair("(1 , x1 x2 x1^-1 x2^-1)", 2, &Alphabet::X).unwrap();
        assert!(l.is_empty());
        assert_eq!(r.len(), 4);
        assert!(parse_pair("x1 , x2", 2, &Alphabet::X).is_err());
    }
}
