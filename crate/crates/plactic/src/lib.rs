//! Plactic monoid and plactic algebra on a finite ordered alphabet,
//! presented by row generators.
//!
//! The pieces:
//!
//! - [`Row`], [`RowWord`] and their orderings — rows are nondecreasing
//!   words stored as count vectors; row words carry the deg-lex order that
//!   orients all rewriting.
//! - [`schensted`] — the two equivalent row-product algorithms
//!   (letter insertion and the closed-form recurrence).
//! - [`Tableau`] and normal forms — every word reduces to a unique Young
//!   tableau; tableaux multiply through reduction.
//! - [`knuth`] — an independent brute-force congruence oracle on letter
//!   words, used to validate the rest of the crate.
//! - [`verify`] — replays both reduction orders on row triples at scale
//!   and checks confluence plus the supporting prefix-sum identities.
//! - [`algebra`] — the monoid algebra over exact rationals with tableaux
//!   as basis.
//!
//! All types are immutable values: cheap to clone, safe to share across
//! threads.

pub mod algebra;
pub mod alphabet;
pub mod error;
pub mod knuth;
pub mod row;
pub mod rowword;
pub mod schensted;
pub mod tableau;
pub mod verify;

pub use algebra::{is_zero_mod_ideal, reduce_free_word, AlgebraElement};
pub use alphabet::{Alphabet, Letter, LetterWord};
pub use error::{Error, Result};
pub use knuth::{congruence_class, knuth_neighbors, oracle_equivalent, CongruenceClass};
pub use row::{enumerate_rows, Row};
pub use rowword::RowWord;
pub use schensted::{
    check_equivalence, insert_letter, multiply_rows, multiply_rows_closed_form,
    multiply_rows_schensted, Insertion, RowProduct,
};
pub use tableau::{
    enumerate_tableaux, normal_form_letters, normal_form_rowword, normal_form_rowword_with,
    plactic_equivalent, tableau_multiply, ReductionStrategy, Tableau,
};
pub use verify::{
    build_relation, reduce_triple, relation_respects_ordering, verify_gs_basis, Relation,
    SweepConfig, VerificationReport,
};
