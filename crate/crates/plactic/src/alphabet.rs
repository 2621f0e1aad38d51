//! The ordered alphabet `{1, 2, …, n}`, letters, and plain letter words.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite ordered alphabet `1 < 2 < … < n`.
///
/// Every value in this crate carries its alphabet; operations that combine
/// two values panic if the alphabets differ.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Alphabet {
    n: usize,
}

impl Alphabet {
    /// Creates the alphabet `{1, …, n}`. Fails for `n = 0`.
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyAlphabet(n));
        }
        Ok(Alphabet { n })
    }

    /// Number of letters.
    pub fn size(self) -> usize {
        self.n
    }

    /// All letters in increasing order.
    pub fn letters(self) -> impl Iterator<Item = Letter> {
        (1..=self.n as u64).map(Letter)
    }

    /// Whether `letter` belongs to this alphabet.
    pub fn contains(self, letter: Letter) -> bool {
        letter.value() >= 1 && letter.value() <= self.n as u64
    }

    /// Validates a letter against this alphabet.
    pub fn letter(self, value: u64) -> Result<Letter> {
        if value < 1 || value > self.n as u64 {
            return Err(Error::LetterOutOfRange {
                letter: value,
                n: self.n,
            });
        }
        Ok(Letter(value))
    }
}

/// A single letter, 1-based.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Letter(u64);

impl Letter {
    /// 1-based value of the letter.
    pub fn value(self) -> u64 {
        self.0
    }

    /// 0-based position into a count vector.
    pub(crate) fn index(self) -> usize {
        (self.0 - 1) as usize
    }

    pub(crate) fn from_index(index: usize) -> Letter {
        Letter(index as u64 + 1)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A finite (possibly empty) word over an alphabet; element of the free monoid.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct LetterWord {
    alphabet: Alphabet,
    letters: Vec<Letter>,
}

impl LetterWord {
    /// Builds a word, validating every letter against `alphabet`.
    pub fn new(alphabet: Alphabet, values: &[u64]) -> Result<Self> {
        let letters = values
            .iter()
            .map(|&v| alphabet.letter(v))
            .collect::<Result<Vec<_>>>()?;
        Ok(LetterWord { alphabet, letters })
    }

    /// The empty word.
    pub fn empty(alphabet: Alphabet) -> Self {
        LetterWord {
            alphabet,
            letters: Vec::new(),
        }
    }

    pub(crate) fn from_letters(alphabet: Alphabet, letters: Vec<Letter>) -> Self {
        debug_assert!(letters.iter().all(|&l| alphabet.contains(l)));
        LetterWord { alphabet, letters }
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
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

    /// Parses a word: a compact digit string (alphabets up to 9 letters),
    /// a comma-separated integer list, or `ε` for the empty word.
    pub fn parse(alphabet: Alphabet, text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() || text == "ε" {
            return Ok(LetterWord::empty(alphabet));
        }
        let values = parse_letter_values(alphabet, text)?;
        LetterWord::new(alphabet, &values)
    }
}

impl fmt::Display for LetterWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "ε");
        }
        write_letters(f, self.alphabet, self.letters.iter().map(|l| l.value()))
    }
}

/// Writes letters compactly as digits when the alphabet allows, otherwise as
/// a comma-separated list.
pub(crate) fn write_letters(
    f: &mut fmt::Formatter<'_>,
    alphabet: Alphabet,
    values: impl Iterator<Item = u64>,
) -> fmt::Result {
    if alphabet.size() <= 9 {
        for v in values {
            write!(f, "{v}")?;
        }
    } else {
        let mut first = true;
        for v in values {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
    }
    Ok(())
}

/// Shared letter-sequence parser: digit strings for `n ≤ 9`, comma lists always.
pub(crate) fn parse_letter_values(alphabet: Alphabet, text: &str) -> Result<Vec<u64>> {
    if text.contains(',') {
        text.split(',')
            .map(|tok| {
                let tok = tok.trim();
                tok.parse::<u64>()
                    .map_err(|_| Error::parse(tok, "expected an integer letter"))
            })
            .collect()
    } else if text.chars().all(|c| c.is_ascii_digit()) {
        if alphabet.size() > 9 {
            // over wide alphabets every word is comma-separated, so a
            // comma-free digit token is one integer letter
            let value = text
                .parse::<u64>()
                .map_err(|_| Error::parse(text, "expected an integer letter"))?;
            return Ok(vec![value]);
        }
        Ok(text.chars().map(|c| c.to_digit(10).unwrap() as u64).collect())
    } else {
        let bad = text
            .chars()
            .find(|c| !c.is_ascii_digit())
            .map(String::from)
            .unwrap_or_else(|| text.to_string());
        Err(Error::parse(bad, "expected digits or comma-separated letters"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alphabet_rejects_zero() {
        assert!(Alphabet::new(0).is_err());
        assert!(Alphabet::new(1).is_ok());
    }

    #[test]
    fn letters_validate_range() {
        let a = Alphabet::new(3).unwrap();
        assert!(a.letter(0).is_err());
        assert!(a.letter(4).is_err());
        assert_eq!(a.letter(2).unwrap().value(), 2);
    }

    #[test]
    fn word_roundtrip_compact() {
        let a = Alphabet::new(5).unwrap();
        let w = LetterWord::parse(a, "13245").unwrap();
        assert_eq!(w.to_string(), "13245");
        assert_eq!(LetterWord::parse(a, &w.to_string()).unwrap(), w);
    }

    #[test]
    fn word_roundtrip_wide_alphabet() {
        let a = Alphabet::new(12).unwrap();
        let w = LetterWord::parse(a, "1,1,12").unwrap();
        assert_eq!(w.to_string(), "1,1,12");
        assert_eq!(LetterWord::parse(a, &w.to_string()).unwrap(), w);
        // a comma-free digit token over a wide alphabet is one letter
        let single = LetterWord::parse(a, "12").unwrap();
        assert_eq!(single.len(), 1);
        assert_eq!(single.letters()[0].value(), 12);
        assert_eq!(LetterWord::parse(a, &single.to_string()).unwrap(), single);
    }

    #[test]
    fn empty_word_prints_epsilon() {
        let a = Alphabet::new(3).unwrap();
        assert_eq!(LetterWord::empty(a).to_string(), "ε");
        assert_eq!(LetterWord::parse(a, "ε").unwrap(), LetterWord::empty(a));
    }

    #[test]
    fn parse_names_offending_token() {
        let a = Alphabet::new(3).unwrap();
        let err = LetterWord::parse(a, "102").unwrap_err();
        match err {
            Error::LetterOutOfRange { letter, .. } => assert_eq!(letter, 0),
            other => panic!("unexpected error {other:?}"),
        }
        let err = LetterWord::parse(a, "1x2").unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
    }
}
