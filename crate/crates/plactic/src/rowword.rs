//! Words over the row generators and their deg-lex ordering.

use std::cmp::Ordering;
use std::fmt;

use crate::alphabet::{Alphabet, LetterWord};
use crate::error::{Error, Result};
use crate::row::Row;

/// A finite sequence of rows; the empty sequence is the monoid identity.
///
/// Row words carry the deg-lex ordering used to orient every rewrite:
/// degree is the *number of rows*, ties break lexicographically by the row
/// ordering. The ordering is monomial — multiplying on either side by a
/// common context preserves comparisons — which is what makes rewriting
/// terminate.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RowWord {
    alphabet: Alphabet,
    rows: Vec<Row>,
}

impl RowWord {
    /// Builds a row word, checking that all rows share `alphabet`.
    pub fn new(alphabet: Alphabet, rows: Vec<Row>) -> Result<Self> {
        for row in &rows {
            if row.alphabet() != alphabet {
                return Err(Error::parse(
                    row.to_string(),
                    format!(
                        "row over alphabet of {} letters in a word over {}",
                        row.alphabet().size(),
                        alphabet.size()
                    ),
                ));
            }
        }
        Ok(RowWord { alphabet, rows })
    }

    /// The identity of the free monoid on rows.
    pub fn empty(alphabet: Alphabet) -> Self {
        RowWord {
            alphabet,
            rows: Vec::new(),
        }
    }

    /// The word of one-letter rows spelling `word`.
    pub fn from_letter_word(word: &LetterWord) -> Self {
        let alphabet = word.alphabet();
        let rows = word
            .letters()
            .iter()
            .map(|&l| Row::single(alphabet, l))
            .collect();
        RowWord { alphabet, rows }
    }

    pub(crate) fn from_rows_unchecked(alphabet: Alphabet, rows: Vec<Row>) -> Self {
        debug_assert!(rows.iter().all(|r| r.alphabet() == alphabet));
        RowWord { alphabet, rows }
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    /// Number of rows (the deg-lex degree).
    pub fn degree(&self) -> usize {
        self.rows.len()
    }

    /// Total letters across all rows.
    pub fn letter_len(&self) -> u64 {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Concatenation in the free monoid.
    pub fn concat(&self, other: &RowWord) -> RowWord {
        assert_eq!(
            self.alphabet, other.alphabet,
            "concatenation requires a common alphabet"
        );
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        RowWord {
            alphabet: self.alphabet,
            rows,
        }
    }

    /// Parses rows joined by `·` or `|`; `ε` (or the empty string) is the
    /// identity.
    pub fn parse(alphabet: Alphabet, text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() || text == "ε" {
            return Ok(RowWord::empty(alphabet));
        }
        let rows = text
            .split(['·', '|'])
            .map(|tok| Row::parse(alphabet, tok))
            .collect::<Result<Vec<_>>>()?;
        RowWord::new(alphabet, rows)
    }
}

impl fmt::Display for RowWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return write!(f, "ε");
        }
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, "·")?;
            }
            if f.alternate() {
                write!(f, "{row:#}")?;
            } else {
                write!(f, "{row}")?;
            }
        }
        Ok(())
    }
}

impl PartialOrd for RowWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RowWord {
    /// Deg-lex: fewer rows first, then left-to-right by the row ordering.
    fn cmp(&self, other: &Self) -> Ordering {
        self.alphabet
            .cmp(&other.alphabet)
            .then_with(|| self.rows.len().cmp(&other.rows.len()))
            .then_with(|| {
                for (a, b) in self.rows.iter().zip(&other.rows) {
                    let ord = a.cmp(b);
                    if ord != Ordering::Equal {
                        return ord;
                    }
                }
                Ordering::Equal
            })
    }
}
