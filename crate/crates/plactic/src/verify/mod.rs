//! The rewriting-confluence verifier.
//!
//! The defining relations rewrite any two-row word `R·S` to its tableau
//! form. This module materializes those relations on bounded row sets,
//! replays both reduction orders on every three-row word, and checks that
//! the two ends coincide — together with the closed-form identities and
//! prefix-sum inequalities that make the rewriting system confluent.

mod sweep;
mod trace;

pub use sweep::{
    verify_gs_basis, CheckCounts, Counterexample, SweepConfig, SweepSection, VerificationReport,
    DEFAULT_BUDGET, DEFAULT_SAMPLE_MAX_LEN, DEFAULT_SEED,
};
pub use trace::{
    check_c3k3_closed_form, check_e2l2_closed_form, check_lemma_invariants,
    check_letter_conservation, check_zero_pattern, composition_trivial, reduce_triple,
    CheckOutcome, LemmaFinding, LemmaReport, ReductionTrace, TraceLemma, TraceProduct,
};

use crate::row::Row;
use crate::rowword::RowWord;
use crate::schensted::{multiply_rows, RowProduct};

/// One defining relation: the two-row word `R·S` and its tableau form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Relation {
    /// The pair being rewritten.
    pub lhs: (Row, Row),
    /// Its product, `R′·S′` (or a single row).
    pub rhs: RowProduct,
}

impl Relation {
    /// A relation is trivial when the pair is already a tableau, i.e. the
    /// rewrite does nothing.
    pub fn is_trivial(&self) -> bool {
        let trivial = self.lhs.0.dominates(&self.lhs.1);
        debug_assert_eq!(
            trivial,
            self.rhs.bumped.as_ref() == Some(&self.lhs.0) && self.rhs.bottom == self.lhs.1
        );
        trivial
    }

    /// The left-hand side as a row word.
    pub fn lhs_word(&self) -> RowWord {
        RowWord::from_rows_unchecked(
            self.lhs.0.alphabet(),
            vec![self.lhs.0.clone(), self.lhs.1.clone()],
        )
    }

    /// The right-hand side as a row word.
    pub fn rhs_word(&self) -> RowWord {
        RowWord::from_rows_unchecked(self.lhs.0.alphabet(), self.rhs.rows())
    }
}

/// Builds the relation rewriting `r·s` to its product.
pub fn build_relation(r: &Row, s: &Row) -> Relation {
    Relation {
        lhs: (r.clone(), s.clone()),
        rhs: multiply_rows(r, s),
    }
}

/// Whether the relation's right-hand side lies strictly below its left-hand
/// side in the deg-lex order. This is what lets every rewrite step make
/// progress; nontrivial relations must always satisfy it.
pub fn relation_respects_ordering(relation: &Relation) -> bool {
    relation.rhs_word() < relation.lhs_word()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;
    use crate::row::enumerate_rows;

    fn row(n: usize, text: &str) -> Row {
        Row::parse(Alphabet::new(n).unwrap(), text).unwrap()
    }

    #[test]
    fn relation_examples() {
        let rel = build_relation(&row(5, "111225"), &row(5, "23"));
        assert!(!rel.is_trivial());
        assert_eq!(rel.rhs.bumped, Some(row(5, "5")));
        assert_eq!(rel.rhs.bottom, row(5, "1112223"));
        assert!(relation_respects_ordering(&rel));

        let rel = build_relation(&row(7, "4556"), &row(7, "223357"));
        assert!(rel.is_trivial());
        assert_eq!(rel.rhs_word(), rel.lhs_word());

        let rel = build_relation(&row(3, "2"), &row(3, "2"));
        assert!(!rel.is_trivial());
        assert_eq!(rel.rhs.bumped, None);
        assert_eq!(rel.rhs.bottom, row(3, "22"));
        assert!(relation_respects_ordering(&rel));
    }

    #[test]
    fn every_nontrivial_relation_descends() {
        for n in 1..=3 {
            let alphabet = Alphabet::new(n).unwrap();
            let rows = enumerate_rows(alphabet, 1, 3);
            for r in &rows {
                for s in &rows {
                    let rel = build_relation(r, s);
                    if !rel.is_trivial() {
                        assert!(relation_respects_ordering(&rel), "ascending rewrite {r}·{s}");
                    }
                }
            }
        }
    }
}
