//! Words in group generators with integer exponents.

use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A word in named generators, kept in canonical form: exponents nonzero and
/// adjacent letters distinct (same-name runs merged, cancellations cascaded).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneratorWord {
    letters: Vec<(String, i64)>,
}

impl GeneratorWord {
    pub fn identity() -> Self {
        GeneratorWord {
            letters: Vec::new(),
        }
    }

    pub fn generator(name: &str) -> Self {
        GeneratorWord {
            letters: vec![(name.to_owned(), 1)],
        }
    }

    /// Build from raw letters, merging adjacent equal names and dropping
    /// zero exponents until the word is reduced.
    pub fn from_letters<S: AsRef<str>>(letters: impl IntoIterator<Item = (S, i64)>) -> Self {
        let mut stack: Vec<(String, i64)> = Vec::new();
        for (name, exp) in letters {
            if exp == 0 {
                continue;
            }
            let name = name.as_ref();
            match stack.last_mut() {
                Some((top, e)) if top == name => {
                    *e += exp;
                    if *e == 0 {
                        stack.pop();
                    }
                }
                _ => stack.push((name.to_owned(), exp)),
            }
        }
        GeneratorWord { letters: stack }
    }

    pub fn letters(&self) -> &[(String, i64)] {
        &self.letters
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> GeneratorWord {
        GeneratorWord {
            letters: self
                .letters
                .iter()
                .rev()
                .map(|(n, e)| (n.clone(), -e))
                .collect(),
        }
    }

    pub fn concat(&self, other: &GeneratorWord) -> GeneratorWord {
        Self::from_letters(
            self.letters
                .iter()
                .chain(&other.letters)
                .map(|(n, e)| (n.as_str(), *e)),
        )
    }

    /// Distinct generator names, in order of first appearance.
    pub fn support(&self) -> Vec<String> {
        let mut out: Vec<String> = Vec::new();
        for (n, _) in &self.letters {
            if !out.contains(n) {
                out.push(n.clone());
            }
        }
        out
    }

    /// Parse the whitespace-separated text form, e.g. `a^-2 w a w`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for token in text.split_whitespace() {
            let (name, exp) = match token.split_once('^') {
                None => (token, 1i64),
                Some((name, e)) => {
                    let exp: i64 = e.parse().map_err(|_| {
                        Error::MalformedInput(format!("bad exponent in word token '{token}'"))
                    })?;
                    (name, exp)
                }
            };
            if name.is_empty() {
                return Err(Error::MalformedInput(format!("bad word token '{token}'")));
            }
            letters.push((name, exp));
        }
        Ok(Self::from_letters(letters))
    }
}

impl fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for (name, exp) in &self.letters {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if *exp == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{exp}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for GeneratorWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.letters.len()))?;
        for (name, exp) in &self.letters {
            seq.serialize_element(&(name, exp))?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cascade_reduction() {
        // a w w^-1 a a^-2 collapses completely.
        let w = GeneratorWord::from_letters([("a", 1), ("w", 1), ("w", -1), ("a", 1), ("a", -2)]);
        assert!(w.is_identity());
        assert_eq!(w.to_string(), "1");
    }

    #[test]
    fn adjacent_letters_distinct() {
        let w = GeneratorWord::from_letters([("a", -2), ("w", 1), ("a", 1), ("a", -1)]);
        assert_eq!(w.letters(), &[("a".to_owned(), -2), ("w".to_owned(), 1)]);
        for pair in w.letters().windows(2) {
            assert_ne!(pair[0].0, pair[1].0);
        }
    }

    #[test]
    fn parse_round_trip() {
        let w = GeneratorWord::parse("a^-2 w a w a w").unwrap();
        assert_eq!(w.to_string(), "a^-2 w a w a w");
        assert_eq!(GeneratorWord::parse(&w.to_string()).unwrap(), w);
    }

    #[test]
    fn inverse_concat_is_identity() {
        let w = GeneratorWord::parse("a^-2 w a w").unwrap();
        assert!(w.concat(&w.inverse()).is_identity());
    }
}
