//! Rows: nondecreasing words stored as letter-count vectors.

use std::cmp::Ordering;
use std::fmt;

use crate::alphabet::{parse_letter_values, write_letters, Alphabet, Letter, LetterWord};
use crate::error::{Error, Result};

/// A nonempty nondecreasing word, represented by its count vector
/// `(r₁, …, r_n)` where `r_i` is the multiplicity of letter `i`.
///
/// Rows are the generators of the monoid: every word factors into rows, and
/// the product of two rows is again (at most) two rows. The ordering
/// implemented by [`Ord`] compares by length first; between rows of equal
/// length the one with more copies of the smallest differing letter is the
/// *smaller* of the two.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Row {
    counts: Vec<u64>,
}

impl Row {
    /// Builds a row from a count vector. The vector length fixes the
    /// alphabet; the total count must be positive.
    pub fn from_counts(counts: Vec<u64>) -> Result<Self> {
        if counts.is_empty() {
            return Err(Error::EmptyAlphabet(0));
        }
        if counts.iter().all(|&c| c == 0) {
            return Err(Error::EmptyRow);
        }
        Ok(Row { counts })
    }

    /// Builds a row from an explicit nondecreasing letter sequence.
    pub fn from_letters(alphabet: Alphabet, values: &[u64]) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::NotARow("a row must be nonempty".into()));
        }
        let mut counts = vec![0u64; alphabet.size()];
        let mut prev = 0u64;
        for &v in values {
            let letter = alphabet.letter(v)?;
            if v < prev {
                return Err(Error::NotARow(format!(
                    "letters must be nondecreasing, found {v} after {prev}"
                )));
            }
            counts[letter.index()] += 1;
            prev = v;
        }
        Ok(Row { counts })
    }

    /// The one-letter row containing `letter`.
    pub fn single(alphabet: Alphabet, letter: Letter) -> Self {
        debug_assert!(alphabet.contains(letter));
        let mut counts = vec![0u64; alphabet.size()];
        counts[letter.index()] = 1;
        Row { counts }
    }

    pub(crate) fn from_counts_unchecked(counts: Vec<u64>) -> Self {
        debug_assert!(counts.iter().any(|&c| c > 0));
        Row { counts }
    }

    pub fn alphabet(&self) -> Alphabet {
        Alphabet::new(self.counts.len()).expect("rows always have a nonempty alphabet")
    }

    /// The count vector `(r₁, …, r_n)`.
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// Multiplicity of one letter.
    pub fn count(&self, letter: Letter) -> u64 {
        self.counts[letter.index()]
    }

    /// Total number of letters; always positive, rows are never empty.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> u64 {
        sum_checked(&self.counts)
    }

    /// Partial sums `Φ_p = r₁ + … + r_p` for `p = 1..=n`.
    pub fn partial_sums(&self) -> Vec<u64> {
        prefix_sums(&self.counts)
    }

    /// The letters of the row in nondecreasing order.
    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        self.counts
            .iter()
            .enumerate()
            .flat_map(|(i, &c)| std::iter::repeat_n(Letter::from_index(i), c as usize))
    }

    /// The `j`-th letter (1-based): the least `p` with `Φ_p ≥ j`.
    pub fn letter_at(&self, j: u64) -> Letter {
        debug_assert!(j >= 1 && j <= self.len());
        let mut acc = 0u64;
        for (i, &c) in self.counts.iter().enumerate() {
            acc += c;
            if acc >= j {
                return Letter::from_index(i);
            }
        }
        unreachable!("index {j} beyond row length")
    }

    /// The word spelled by this row.
    pub fn to_letter_word(&self) -> LetterWord {
        LetterWord::from_letters(self.alphabet(), self.letters().collect())
    }

    /// Whether this row dominates `other`: it is no longer, and each of its
    /// letters strictly exceeds the letter at the same position in `other`.
    ///
    /// Decided from counts alone: with `Φ` and `Ψ` the partial sums of
    /// `self` and `other`, domination holds iff `|self| ≤ |other|` and for
    /// every letter `p` present in `other` whose first occurrence lies
    /// within the first `|self|` positions, `Φ_p ≤ Ψ_{p−1}`.
    pub fn dominates(&self, other: &Row) -> bool {
        assert_eq!(
            self.alphabet(),
            other.alphabet(),
            "domination requires a common alphabet"
        );
        let len = self.len();
        if len > other.len() {
            return false;
        }
        let mine = self.partial_sums();
        let mut below = 0u64; // Ψ_{p−1}
        for (i, &c) in other.counts.iter().enumerate() {
            if c > 0 && below < len && mine[i] > below {
                return false;
            }
            below += c;
        }
        true
    }

    /// Parses a row: nondecreasing letters (digit or comma form) or a count
    /// vector `(3,2,0,0,1)` whose length must equal the alphabet size.
    pub fn parse(alphabet: Alphabet, text: &str) -> Result<Self> {
        let text = text.trim();
        if let Some(inner) = text.strip_prefix('(') {
            let inner = inner
                .strip_suffix(')')
                .ok_or_else(|| Error::parse(text, "unterminated count vector"))?;
            let counts = inner
                .split(',')
                .map(|tok| {
                    let tok = tok.trim();
                    tok.parse::<u64>()
                        .map_err(|_| Error::parse(tok, "expected a non-negative count"))
                })
                .collect::<Result<Vec<_>>>()?;
            if counts.len() != alphabet.size() {
                return Err(Error::parse(
                    text,
                    format!(
                        "count vector has {} entries but the alphabet has {}",
                        counts.len(),
                        alphabet.size()
                    ),
                ));
            }
            return Row::from_counts(counts);
        }
        let values = parse_letter_values(alphabet, text)?;
        Row::from_letters(alphabet, &values)
    }
}

impl fmt::Display for Row {
    /// Prints the letters of the row; the alternate form `{:#}` prints the
    /// count vector.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if f.alternate() {
            write!(f, "(")?;
            for (i, c) in self.counts.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{c}")?;
            }
            return write!(f, ")");
        }
        write_letters(f, self.alphabet(), self.letters().map(|l| l.value()))
    }
}

impl PartialOrd for Row {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Row {
    /// Length first; on equal lengths, at the first differing count the row
    /// with the larger count (more copies of a smaller letter) is smaller.
    /// Rows over different alphabets order by alphabet size so that the
    /// ordering stays total.
    fn cmp(&self, other: &Self) -> Ordering {
        self.counts
            .len()
            .cmp(&other.counts.len())
            .then_with(|| self.len().cmp(&other.len()))
            .then_with(|| {
                for (a, b) in self.counts.iter().zip(&other.counts) {
                    if a != b {
                        return b.cmp(a);
                    }
                }
                Ordering::Equal
            })
    }
}

/// All rows over `alphabet` with `min_len ≤ |R| ≤ max_len`, in ascending
/// lexicographic order of their count vectors. This is the canonical row
/// enumeration order used by sweeps and tableau enumeration.
pub fn enumerate_rows(alphabet: Alphabet, min_len: u64, max_len: u64) -> Vec<Row> {
    let mut out = Vec::new();
    let mut counts = vec![0u64; alphabet.size()];
    push_rows(&mut out, &mut counts, 0, min_len.max(1), max_len);
    out
}

fn push_rows(out: &mut Vec<Row>, counts: &mut Vec<u64>, pos: usize, min_len: u64, budget: u64) {
    if pos == counts.len() {
        let total: u64 = counts.iter().sum();
        if total >= min_len {
            out.push(Row::from_counts_unchecked(counts.clone()));
        }
        return;
    }
    for c in 0..=budget {
        counts[pos] = c;
        push_rows(out, counts, pos + 1, min_len, budget - c);
    }
    counts[pos] = 0;
}

pub(crate) fn prefix_sums(counts: &[u64]) -> Vec<u64> {
    let mut acc = 0u64;
    counts
        .iter()
        .map(|&c| {
            acc = acc.checked_add(c).expect("row length overflow");
            acc
        })
        .collect()
}

pub(crate) fn sum_checked(counts: &[u64]) -> u64 {
    counts
        .iter()
        .try_fold(0u64, |acc, &c| acc.checked_add(c))
        .expect("row length overflow")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(n: usize, text: &str) -> Row {
        Row::parse(Alphabet::new(n).unwrap(), text).unwrap()
    }

    #[test]
    fn counts_from_letters() {
        assert_eq!(row(5, "111225").counts(), &[3, 2, 0, 0, 1]);
        assert_eq!(row(3, "3").counts(), &[0, 0, 1]);
    }

    #[test]
    fn rejects_non_rows() {
        let a = Alphabet::new(3).unwrap();
        assert!(matches!(Row::parse(a, "21"), Err(Error::NotARow(_))));
        assert!(matches!(Row::parse(a, ""), Err(Error::NotARow(_))));
        assert!(matches!(
            Row::from_counts(vec![0, 0, 0]),
            Err(Error::EmptyRow)
        ));
    }

    #[test]
    fn count_vector_parse_roundtrip() {
        let a = Alphabet::new(5).unwrap();
        let r = Row::parse(a, "(3,2,0,0,1)").unwrap();
        assert_eq!(r, row(5, "111225"));
        assert_eq!(format!("{r:#}"), "(3,2,0,0,1)");
        assert_eq!(r.to_string(), "111225");
        assert_eq!(Row::parse(a, &r.to_string()).unwrap(), r);
    }

    #[test]
    fn ordering_follows_length_then_reversed_counts() {
        assert!(row(2, "2") < row(2, "11"));
        assert!(row(2, "11") < row(2, "12"));
        assert_eq!(row(5, "111225").cmp(&row(5, "111225")), Ordering::Equal);
    }

    #[test]
    fn domination_examples() {
        assert!(row(7, "4556").dominates(&row(7, "223357")));
        assert!(!row(3, "2").dominates(&row(3, "2")));
        assert!(!row(3, "22").dominates(&row(3, "1")));
        assert!(row(3, "2").dominates(&row(3, "11")));
    }

    #[test]
    fn domination_matches_letterwise_definition() {
        let a = Alphabet::new(4).unwrap();
        let rows = enumerate_rows(a, 1, 4);
        for r in &rows {
            for s in &rows {
                let naive = r.len() <= s.len()
                    && (1..=r.len()).all(|j| r.letter_at(j).value() > s.letter_at(j).value());
                assert_eq!(r.dominates(s), naive, "r={r} s={s}");
            }
        }
    }

    #[test]
    #[should_panic(expected = "common alphabet")]
    fn cross_alphabet_operations_are_rejected() {
        let _ = row(3, "12").dominates(&row(4, "12"));
    }

    #[test]
    fn letter_at_uses_partial_sums() {
        let r = row(5, "111225");
        let letters: Vec<u64> = (1..=r.len()).map(|j| r.letter_at(j).value()).collect();
        assert_eq!(letters, vec![1, 1, 1, 2, 2, 5]);
        assert_eq!(r.partial_sums(), vec![3, 5, 5, 5, 6]);
    }

    #[test]
    fn letters_roundtrip_through_from_letters() {
        let a = Alphabet::new(3).unwrap();
        for r in enumerate_rows(a, 1, 3) {
            let values: Vec<u64> = r.letters().map(|l| l.value()).collect();
            assert_eq!(Row::from_letters(a, &values).unwrap(), r);
            assert_eq!(r.to_letter_word().len() as u64, r.len());
        }
    }

    #[test]
    fn enumeration_is_lexicographic_and_complete() {
        let a = Alphabet::new(3).unwrap();
        let rows = enumerate_rows(a, 1, 3);
        assert_eq!(rows.len(), 3 + 6 + 10);
        let mut sorted = rows.clone();
        sorted.sort_by(|x, y| x.counts().cmp(y.counts()));
        assert_eq!(rows, sorted);
        assert!(rows.iter().all(|r| r.len() >= 1 && r.len() <= 3));
    }

    #[test]
    fn total_order_on_small_rows() {
        let a = Alphabet::new(4).unwrap();
        let rows = enumerate_rows(a, 1, 4);
        // trichotomy
        for r in &rows {
            for s in &rows {
                let lt = r < s;
                let gt = r > s;
                let eq = r == s;
                assert_eq!(u8::from(lt) + u8::from(gt) + u8::from(eq), 1);
            }
        }
        // transitivity, exhaustively over triples
        for r in &rows {
            for s in &rows {
                if r >= s {
                    continue;
                }
                for t in &rows {
                    if s < t {
                        assert!(r < t, "transitivity failed: {r} < {s} < {t}");
                    }
                }
            }
        }
    }
}
