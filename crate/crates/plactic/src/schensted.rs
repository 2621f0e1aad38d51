//! Row products: letter-by-letter insertion and the closed-form recurrence.
//!
//! Both algorithms compute the unique factorization `W·Z = X·Y` where `X·Y`
//! is a two-row tableau (or a single row when nothing bumps). The insertion
//! path is the classical one; the closed form computes the same product in
//! one pass over the count vectors via
//!
//! ```text
//! x₁ = 0,   x_p = min(Z_{p−1} − X_{p−1}, w_p),   y_q = w_q + z_q − x_q
//! ```
//!
//! with uppercase letters denoting partial sums. [`multiply_rows`] dispatches
//! to the closed form; the insertion path is kept behind the same interface
//! as an independent oracle.

use crate::alphabet::Letter;
use crate::row::{prefix_sums, Row};

/// Result of inserting one letter into a row.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Insertion {
    /// The letter bumped out, absent when the insertion merely appends.
    pub bumped: Option<Letter>,
    /// The updated row.
    pub row: Row,
}

/// The two-row product `X·Y` of two rows, with `X` absent when the whole
/// product collapses to a single row.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RowProduct {
    /// The bumped row `X`; dominates `bottom` whenever present.
    pub bumped: Option<Row>,
    /// The remaining row `Y`.
    pub bottom: Row,
}

impl RowProduct {
    /// The rows of the product as a (one- or two-element) sequence.
    pub fn rows(&self) -> Vec<Row> {
        match &self.bumped {
            Some(x) => vec![x.clone(), self.bottom.clone()],
            None => vec![self.bottom.clone()],
        }
    }
}

/// Inserts `x` into a row: appends if the result stays nondecreasing,
/// otherwise replaces the leftmost letter strictly larger than `x` and
/// returns it.
pub fn insert_letter(row: &Row, x: Letter) -> Insertion {
    assert!(
        row.alphabet().contains(x),
        "letter {x} outside the row's alphabet"
    );
    let mut counts = row.counts().to_vec();
    let above = counts[x.index() + 1..]
        .iter()
        .position(|&c| c > 0)
        .map(|offset| x.index() + 1 + offset);
    match above {
        None => {
            counts[x.index()] += 1;
            Insertion {
                bumped: None,
                row: Row::from_counts_unchecked(counts),
            }
        }
        Some(y_index) => {
            counts[y_index] -= 1;
            counts[x.index()] += 1;
            Insertion {
                bumped: Some(Letter::from_index(y_index)),
                row: Row::from_counts_unchecked(counts),
            }
        }
    }
}

/// Product of two rows by inserting the letters of `z` in order into `w`.
/// The bumped letters are collected into `X`, asserted nondecreasing.
pub fn multiply_rows_schensted(w: &Row, z: &Row) -> RowProduct {
    assert_eq!(
        w.alphabet(),
        z.alphabet(),
        "row product requires a common alphabet"
    );
    let n = w.alphabet().size();
    let mut bottom = w.clone();
    let mut bumped_counts = vec![0u64; n];
    let mut any_bumped = false;
    let mut last_bumped = 0u64;
    for letter in z.letters() {
        let step = insert_letter(&bottom, letter);
        bottom = step.row;
        if let Some(y) = step.bumped {
            // The sequence of bumped letters must itself be a row.
            assert!(
                y.value() >= last_bumped,
                "bumped letters out of order: {} after {last_bumped}",
                y.value()
            );
            last_bumped = y.value();
            bumped_counts[y.index()] += 1;
            any_bumped = true;
        }
    }
    RowProduct {
        bumped: any_bumped.then(|| Row::from_counts_unchecked(bumped_counts)),
        bottom,
    }
}

/// Product of two rows by the closed-form recurrence; `O(n)` regardless of
/// row lengths.
pub fn multiply_rows_closed_form(w: &Row, z: &Row) -> RowProduct {
    assert_eq!(
        w.alphabet(),
        z.alphabet(),
        "row product requires a common alphabet"
    );
    let (x, y) = closed_form_raw(w.counts(), z.counts());
    RowProduct {
        bumped: (x.iter().any(|&c| c > 0)).then(|| Row::from_counts_unchecked(x)),
        bottom: Row::from_counts_unchecked(y),
    }
}

/// Default row product. The closed form and the insertion path are proven
/// equal; [`check_equivalence`] re-verifies that on demand.
pub fn multiply_rows(w: &Row, z: &Row) -> RowProduct {
    multiply_rows_closed_form(w, z)
}

/// Whether both product algorithms agree on `(w, z)`.
pub fn check_equivalence(w: &Row, z: &Row) -> bool {
    multiply_rows_schensted(w, z) == multiply_rows_closed_form(w, z)
}

/// The closed-form recurrence on raw count vectors. Zero vectors are
/// allowed and behave as the identity, which is what lets reduction traces
/// keep explicit all-zero rows.
pub(crate) fn closed_form_raw(w: &[u64], z: &[u64]) -> (Vec<u64>, Vec<u64>) {
    debug_assert_eq!(w.len(), z.len());
    let n = w.len();
    let z_sums = prefix_sums(z);
    let mut x = vec![0u64; n];
    let mut x_sum = 0u64;
    for p in 1..n {
        let room = z_sums[p - 1]
            .checked_sub(x_sum)
            .expect("bumped prefix exceeded incoming prefix");
        x[p] = room.min(w[p]);
        x_sum += x[p];
    }
    let y = w
        .iter()
        .zip(z)
        .zip(&x)
        .map(|((&wq, &zq), &xq)| {
            wq.checked_add(zq)
                .and_then(|s| s.checked_sub(xq))
                .expect("row count overflow")
        })
        .collect();
    (x, y)
}
