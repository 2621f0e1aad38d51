//! Young tableaux: the normal forms of the monoid, plus reduction of
//! arbitrary words to them.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::alphabet::{Alphabet, LetterWord};
use crate::error::{Error, Result};
use crate::row::{enumerate_rows, Row};
use crate::rowword::RowWord;
use crate::schensted::{insert_letter, multiply_rows};

/// A sequence of rows in which each row dominates its successor, written
/// shortest row first (so row lengths are nondecreasing left to right).
/// The empty sequence is the identity and prints as `ε`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "TableauData", into = "TableauData")]
pub struct Tableau {
    alphabet: Alphabet,
    rows: Vec<Row>,
}

/// Serialized form of a tableau: the alphabet size and the count vectors of
/// the rows in display order.
#[derive(Clone, Serialize, Deserialize)]
pub struct TableauData {
    pub n: usize,
    pub rows: Vec<Vec<u64>>,
}

impl Tableau {
    /// Builds a tableau, checking successive domination.
    pub fn new(alphabet: Alphabet, rows: Vec<Row>) -> Result<Self> {
        for row in &rows {
            if row.alphabet() != alphabet {
                return Err(Error::parse(
                    row.to_string(),
                    "row alphabet differs from the tableau's",
                ));
            }
        }
        for (i, pair) in rows.windows(2).enumerate() {
            if !pair[0].dominates(&pair[1]) {
                return Err(Error::NotATableau { position: i + 1 });
            }
        }
        Ok(Tableau { alphabet, rows })
    }

    /// The identity tableau (empty row sequence).
    pub fn identity(alphabet: Alphabet) -> Self {
        Tableau {
            alphabet,
            rows: Vec::new(),
        }
    }

    pub(crate) fn from_rows_unchecked(alphabet: Alphabet, rows: Vec<Row>) -> Self {
        debug_assert!(rows.windows(2).all(|p| p[0].dominates(&p[1])));
        Tableau { alphabet, rows }
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    pub fn is_identity(&self) -> bool {
        self.rows.is_empty()
    }

    /// Total number of letters.
    pub fn letter_len(&self) -> u64 {
        self.rows.iter().map(|r| r.len()).sum()
    }

    /// The tableau as an element of the free monoid on rows.
    pub fn to_row_word(&self) -> RowWord {
        RowWord::from_rows_unchecked(self.alphabet, self.rows.clone())
    }

    /// The word read off the rows left to right.
    pub fn read_word(&self) -> LetterWord {
        let letters = self.rows.iter().flat_map(|r| r.letters()).collect();
        LetterWord::from_letters(self.alphabet, letters)
    }

    /// Parses the `·`/`|`-joined row syntax and validates domination.
    pub fn parse(alphabet: Alphabet, text: &str) -> Result<Self> {
        let word = RowWord::parse(alphabet, text)?;
        Tableau::new(alphabet, word.rows().to_vec())
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word = RowWord::from_rows_unchecked(self.alphabet, self.rows.clone());
        if f.alternate() {
            write!(f, "{word:#}")
        } else {
            write!(f, "{word}")
        }
    }
}

impl TryFrom<TableauData> for Tableau {
    type Error = Error;

    fn try_from(data: TableauData) -> Result<Self> {
        let alphabet = Alphabet::new(data.n)?;
        let rows = data
            .rows
            .into_iter()
            .map(|counts| {
                if counts.len() != data.n {
                    return Err(Error::parse(
                        format!("{counts:?}"),
                        format!("count vector length differs from alphabet size {}", data.n),
                    ));
                }
                Row::from_counts(counts)
            })
            .collect::<Result<Vec<_>>>()?;
        Tableau::new(alphabet, rows)
    }
}

impl From<Tableau> for TableauData {
    fn from(t: Tableau) -> Self {
        TableauData {
            n: t.alphabet.size(),
            rows: t.rows.iter().map(|r| r.counts().to_vec()).collect(),
        }
    }
}

impl PartialOrd for Tableau {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Tableau {
    /// The term order used for printing and enumeration: total letters
    /// first, then count vectors compared lexicographically from the
    /// bottom (longest) row upward.
    fn cmp(&self, other: &Self) -> Ordering {
        self.alphabet
            .cmp(&other.alphabet)
            .then_with(|| self.letter_len().cmp(&other.letter_len()))
            .then_with(|| {
                let mut mine = self.rows.iter().rev();
                let mut theirs = other.rows.iter().rev();
                loop {
                    match (mine.next(), theirs.next()) {
                        (None, None) => return Ordering::Equal,
                        (None, Some(_)) => return Ordering::Less,
                        (Some(_), None) => return Ordering::Greater,
                        (Some(a), Some(b)) => {
                            let ord = a.counts().cmp(b.counts());
                            if ord != Ordering::Equal {
                                return ord;
                            }
                        }
                    }
                }
            })
    }
}

/// Which reducible pair a reduction step rewrites first.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ReductionStrategy {
    /// Rightmost reducible pair first (the default; mirrors appending
    /// letters one at a time).
    RightmostFirst,
    /// Leftmost reducible pair first.
    LeftmostFirst,
}

/// Normal form of a letter word: Schensted insertion of each letter into
/// the bottom row, cascading bumps upward, opening a new top row when a
/// bump leaves the top.
pub fn normal_form_letters(word: &LetterWord) -> Tableau {
    let alphabet = word.alphabet();
    let mut rows: Vec<Row> = Vec::new();
    for &x in word.letters() {
        let mut carry = x;
        let mut settled = false;
        for row in rows.iter_mut().rev() {
            let step = insert_letter(row, carry);
            *row = step.row;
            match step.bumped {
                None => {
                    settled = true;
                    break;
                }
                Some(y) => carry = y,
            }
        }
        if !settled {
            rows.insert(0, Row::single(alphabet, carry));
        }
    }
    Tableau::from_rows_unchecked(alphabet, rows)
}

/// Normal form of a row word under the default (rightmost-first) strategy.
pub fn normal_form_rowword(word: &RowWord) -> Tableau {
    normal_form_rowword_with(word, ReductionStrategy::RightmostFirst)
}

/// Normal form of a row word: repeatedly replaces a non-dominating adjacent
/// pair by its two-row product until every pair dominates.
///
/// Each step strictly decreases the word in the deg-lex order, so the loop
/// terminates; the result is independent of `strategy` because the rewrite
/// system is confluent (re-verified at scale by the `verify` module).
pub fn normal_form_rowword_with(word: &RowWord, strategy: ReductionStrategy) -> Tableau {
    let alphabet = word.alphabet();
    let mut rows: Vec<Row> = word.rows().to_vec();
    loop {
        let reducible = |i: &usize| !rows[*i].dominates(&rows[*i + 1]);
        let upper = rows.len().saturating_sub(1);
        let target = match strategy {
            ReductionStrategy::RightmostFirst => (0..upper).rev().find(reducible),
            ReductionStrategy::LeftmostFirst => (0..upper).find(reducible),
        };
        let Some(i) = target else { break };
        #[cfg(debug_assertions)]
        let before = RowWord::from_rows_unchecked(alphabet, rows.clone());
        let product = multiply_rows(&rows[i], &rows[i + 1]);
        match product.bumped {
            Some(x) => {
                rows[i] = x;
                rows[i + 1] = product.bottom;
            }
            None => {
                rows.remove(i);
                rows[i] = product.bottom;
            }
        }
        #[cfg(debug_assertions)]
        debug_assert!(
            RowWord::from_rows_unchecked(alphabet, rows.clone()) < before,
            "a reduction step must strictly decrease the deg-lex order"
        );
    }
    Tableau::from_rows_unchecked(alphabet, rows)
}

/// Product in the monoid of normal forms: concatenate and reduce.
pub fn tableau_multiply(left: &Tableau, right: &Tableau) -> Tableau {
    assert_eq!(
        left.alphabet(),
        right.alphabet(),
        "tableau product requires a common alphabet"
    );
    let word = left.to_row_word().concat(&right.to_row_word());
    normal_form_rowword(&word)
}

/// Whether two words are congruent, decided by comparing normal forms.
pub fn plactic_equivalent(u: &LetterWord, v: &LetterWord) -> bool {
    assert_eq!(
        u.alphabet(),
        v.alphabet(),
        "congruence requires a common alphabet"
    );
    normal_form_letters(u) == normal_form_letters(v)
}

/// Lazily enumerates every tableau over `alphabet` with exactly `letters`
/// letters, in ascending term order: tableaux are generated by choosing the
/// bottom row first, candidates in ascending lexicographic order of their
/// count vectors, then recursing upward.
pub fn enumerate_tableaux(alphabet: Alphabet, letters: u64) -> TableauEnumerator {
    let mut stack = Vec::new();
    if letters > 0 {
        stack.push(Frame {
            candidates: candidate_rows(alphabet, letters, None),
            next: 0,
            budget: letters,
        });
    }
    TableauEnumerator {
        alphabet,
        letters,
        emitted_identity: false,
        stack,
        chosen: Vec::new(),
    }
}

/// Depth-first enumeration state for [`enumerate_tableaux`].
pub struct TableauEnumerator {
    alphabet: Alphabet,
    letters: u64,
    emitted_identity: bool,
    stack: Vec<Frame>,
    /// Rows chosen so far, bottom row first.
    chosen: Vec<Row>,
}

struct Frame {
    candidates: Vec<Row>,
    next: usize,
    budget: u64,
}

impl Iterator for TableauEnumerator {
    type Item = Tableau;

    fn next(&mut self) -> Option<Tableau> {
        if self.letters == 0 {
            if self.emitted_identity {
                return None;
            }
            self.emitted_identity = true;
            return Some(Tableau::identity(self.alphabet));
        }
        loop {
            let frame = self.stack.last_mut()?;
            if frame.next >= frame.candidates.len() {
                self.stack.pop();
                self.chosen.pop();
                continue;
            }
            let row = frame.candidates[frame.next].clone();
            frame.next += 1;
            let remaining = frame.budget - row.len();
            if remaining == 0 {
                let mut rows = self.chosen.clone();
                rows.push(row);
                rows.reverse();
                return Some(Tableau::from_rows_unchecked(self.alphabet, rows));
            }
            let candidates = candidate_rows(self.alphabet, remaining, Some(&row));
            self.chosen.push(row);
            self.stack.push(Frame {
                candidates,
                next: 0,
                budget: remaining,
            });
        }
    }
}

/// Rows usable above `below` (or as the bottom row when `below` is absent)
/// within a letter budget, in ascending count-vector order.
fn candidate_rows(alphabet: Alphabet, budget: u64, below: Option<&Row>) -> Vec<Row> {
    let cap = match below {
        Some(b) => budget.min(b.len()),
        None => budget,
    };
    if cap == 0 {
        return Vec::new();
    }
    enumerate_rows(alphabet, 1, cap)
        .into_iter()
        .filter(|r| below.is_none_or(|b| r.dominates(b)))
        .collect()
}
