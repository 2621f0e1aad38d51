use thiserror::Error;

/// Errors produced by constructors, parsers and the verification engine.
///
/// Operations on already-validated values (products, comparisons,
/// normal forms) do not fail; mixing values from different alphabets is a
/// programming error and panics instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Alphabet size must be at least 1.
    #[error("alphabet size must be at least 1, got {0}")]
    EmptyAlphabet(usize),

    /// A letter outside `1..=n`.
    #[error("letter {letter} out of range 1..={n}")]
    LetterOutOfRange { letter: u64, n: usize },

    /// Input that should have been a row is not one.
    #[error("not a row: {0}")]
    NotARow(String),

    /// The all-zero count vector where a nonempty row is required.
    #[error("empty row: a row must contain at least one letter")]
    EmptyRow,

    /// A row sequence that violates successive domination.
    #[error("not a tableau: row {position} does not dominate its successor")]
    NotATableau { position: usize },

    /// Malformed textual input; `token` is the offending fragment.
    #[error("parse error at {token:?}: {reason}")]
    Parse { token: String, reason: String },

    /// Congruence-class search exceeded its fuel.
    #[error("congruence class exceeded fuel of {fuel} words")]
    FuelExhausted { fuel: usize },

    /// A verification sweep larger than the configured budget.
    #[error("sweep of {triples} triples exceeds budget of {budget}")]
    BudgetExceeded { triples: u128, budget: u64 },
}

impl Error {
    pub(crate) fn parse(token: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Parse {
            token: token.into(),
            reason: reason.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
