//! Two-path reduction traces on row triples and the per-trace checks.
//!
//! For rows `R, S, T`, the overlap `R·S·T` can be reduced starting from
//! either pair. The trace records all six intermediate products of both
//! orders, writing each product `W·Z = X·Y` with `X` the bumped row and `Y`
//! the remaining row:
//!
//! ```text
//! right path:  S·T = A·B,   R·A = C·D,   D·B = E·F   →  final C·E·F
//! left path:   R·S = G·H,   H·T = I·J,   G·I = K·L   →  final K·L·J
//! ```
//!
//! Bumped parts that vanish are kept as explicit all-zero vectors so that
//! prefix-sum identities remain evaluable; zero rows are dropped only when
//! the final words are compared.

use crate::row::{prefix_sums, Row};
use crate::rowword::RowWord;
use crate::schensted::closed_form_raw;

/// One product `W·Z = X·Y` inside a trace, on raw count vectors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TraceProduct {
    /// The bumped row `X`; all-zero when nothing bumps.
    pub bumped: Vec<u64>,
    /// The remaining row `Y`.
    pub bottom: Vec<u64>,
}

fn product(w: &[u64], z: &[u64]) -> TraceProduct {
    let (bumped, bottom) = closed_form_raw(w, z);
    TraceProduct { bumped, bottom }
}

/// The twelve intermediate vectors produced by reducing a row triple in
/// both orders. Vector names follow the equations in the module docs:
/// `st` holds `(A, B)`, `ra` holds `(C, D)`, `db` holds `(E, F)`,
/// `rs` holds `(G, H)`, `ht` holds `(I, J)`, `gi` holds `(K, L)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ReductionTrace {
    pub r: Vec<u64>,
    pub s: Vec<u64>,
    pub t: Vec<u64>,
    /// `S·T = A·B`
    pub st: TraceProduct,
    /// `R·A = C·D`
    pub ra: TraceProduct,
    /// `D·B = E·F`
    pub db: TraceProduct,
    /// `R·S = G·H`
    pub rs: TraceProduct,
    /// `H·T = I·J`
    pub ht: TraceProduct,
    /// `G·I = K·L`
    pub gi: TraceProduct,
}

impl ReductionTrace {
    pub fn alphabet_size(&self) -> usize {
        self.r.len()
    }

    /// Final vectors of the right path: `(C, E, F)`.
    pub fn right_final(&self) -> [&[u64]; 3] {
        [&self.ra.bumped, &self.db.bumped, &self.db.bottom]
    }

    /// Final vectors of the left path: `(K, L, J)`.
    pub fn left_final(&self) -> [&[u64]; 3] {
        [&self.gi.bumped, &self.gi.bottom, &self.ht.bottom]
    }

    /// The right path's final word with zero rows dropped.
    pub fn right_final_word(&self) -> RowWord {
        rows_of(self.right_final())
    }

    /// The left path's final word with zero rows dropped.
    pub fn left_final_word(&self) -> RowWord {
        rows_of(self.left_final())
    }
}

fn rows_of(vectors: [&[u64]; 3]) -> RowWord {
    let n = vectors[0].len();
    let alphabet = crate::alphabet::Alphabet::new(n).expect("traces carry a nonempty alphabet");
    let rows = vectors
        .iter()
        .filter(|v| v.iter().any(|&c| c > 0))
        .map(|v| Row::from_counts_unchecked(v.to_vec()))
        .collect();
    RowWord::from_rows_unchecked(alphabet, rows)
}

/// Runs both reduction orders on `(r, s, t)` and records every
/// intermediate vector.
pub fn reduce_triple(r: &Row, s: &Row, t: &Row) -> ReductionTrace {
    assert!(
        r.alphabet() == s.alphabet() && s.alphabet() == t.alphabet(),
        "a trace requires a common alphabet"
    );
    let (r, s, t) = (
        r.counts().to_vec(),
        s.counts().to_vec(),
        t.counts().to_vec(),
    );
    let st = product(&s, &t);
    let ra = product(&r, &st.bumped);
    let db = product(&ra.bottom, &st.bottom);
    let rs = product(&r, &s);
    let ht = product(&rs.bottom, &t);
    let gi = product(&rs.bumped, &ht.bumped);
    ReductionTrace {
        r,
        s,
        t,
        st,
        ra,
        db,
        rs,
        ht,
        gi,
    }
}

/// Whether the two reduction orders end in the same word.
pub fn composition_trivial(trace: &ReductionTrace) -> bool {
    trace.right_final_word() == trace.left_final_word()
}

/// Outcome of a single per-trace check.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CheckOutcome {
    Pass,
    Fail,
    /// The check's hypothesis never fires on this trace (distinct from a
    /// vacuous pass so that reports can show how often a check bites).
    NotApplicable,
}

impl CheckOutcome {
    pub(crate) fn from_bool(ok: bool) -> Self {
        if ok {
            CheckOutcome::Pass
        } else {
            CheckOutcome::Fail
        }
    }
}

/// Verifies the structural zeros every trace must satisfy:
/// `a₁ = c₁ = c₂ = e₁ = g₁ = i₁ = k₁ = k₂ = l₁ = 0`.
pub fn check_zero_pattern(trace: &ReductionTrace) -> bool {
    let n = trace.alphabet_size();
    let mut ok = trace.st.bumped[0] == 0
        && trace.ra.bumped[0] == 0
        && trace.db.bumped[0] == 0
        && trace.rs.bumped[0] == 0
        && trace.ht.bumped[0] == 0
        && trace.gi.bumped[0] == 0
        && trace.gi.bottom[0] == 0;
    if n >= 2 {
        ok = ok && trace.ra.bumped[1] == 0 && trace.gi.bumped[1] == 0;
    }
    ok
}

/// Verifies that both final words carry exactly the letters of `r, s, t`.
pub fn check_letter_conservation(trace: &ReductionTrace) -> bool {
    let n = trace.alphabet_size();
    let mut input = vec![0u64; n];
    let mut right = vec![0u64; n];
    let mut left = vec![0u64; n];
    for p in 0..n {
        input[p] = trace.r[p] + trace.s[p] + trace.t[p];
        for v in trace.right_final() {
            right[p] += v[p];
        }
        for v in trace.left_final() {
            left[p] += v[p];
        }
    }
    input == right && input == left
}

/// Verifies the closed form for the third prefix of the bumped rows:
/// `C₃ = K₃ = min(t₁, s₂, r₃)`. Not applicable below three letters.
pub fn check_c3k3_closed_form(trace: &ReductionTrace) -> CheckOutcome {
    if trace.alphabet_size() < 3 {
        return CheckOutcome::NotApplicable;
    }
    let c = prefix_sums(&trace.ra.bumped);
    let k = prefix_sums(&trace.gi.bumped);
    let expected = trace.t[0].min(trace.s[1]).min(trace.r[2]);
    CheckOutcome::from_bool(c[2] == expected && k[2] == expected)
}

/// Verifies the closed form for the second entries of the last products:
/// `e₂ = l₂ = min(s₁ + t₁, t₁ + r₂, r₂ + s₂)`. Not applicable below two
/// letters.
pub fn check_e2l2_closed_form(trace: &ReductionTrace) -> CheckOutcome {
    if trace.alphabet_size() < 2 {
        return CheckOutcome::NotApplicable;
    }
    let expected = (trace.s[0] + trace.t[0])
        .min(trace.t[0] + trace.r[1])
        .min(trace.r[1] + trace.s[1]);
    CheckOutcome::from_bool(trace.db.bumped[1] == expected && trace.gi.bottom[1] == expected)
}

/// The five prefix-sum inequalities checked on every trace.
///
/// Written with uppercase letters for prefix sums of the trace vectors
/// (`A_p = a₁ + … + a_p` and so on):
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TraceLemma {
    /// `A_p ≤ I_p` for every `p`.
    PrefixBound,
    /// `S_p + C_p − G_p − A_p ≥ 0` for every `p`.
    SlackNonnegative,
    /// `S_p + C_p − G_p − A_p > 0` forces `A_p = I_p`.
    SlackForcesEquality,
    /// `C_p = K_p`, `C_{p+1} = K_{p+1}` and `C_{p+1} = C_p + r_{p+1}`
    /// force `S_p − G_p ≥ r_{p+1}` (for `2 ≤ p ≤ n−1`).
    GrowthForcesRoom,
    /// `K_{p−1} = C_{p−1}`, `K_p = C_p = A_{p−1} < C_{p−1} + r_p` and
    /// `S_{p−1} − G_{p−1} ≥ r_p` force `K_p = I_{p−1}` (for `3 ≤ p ≤ n`).
    PinnedPrefix,
}

impl TraceLemma {
    pub const ALL: [TraceLemma; 5] = [
        TraceLemma::PrefixBound,
        TraceLemma::SlackNonnegative,
        TraceLemma::SlackForcesEquality,
        TraceLemma::GrowthForcesRoom,
        TraceLemma::PinnedPrefix,
    ];

    /// Stable key used in reports.
    pub fn key(self) -> &'static str {
        match self {
            TraceLemma::PrefixBound => "lemma_prefix_bound",
            TraceLemma::SlackNonnegative => "lemma_slack_nonnegative",
            TraceLemma::SlackForcesEquality => "lemma_slack_forces_equality",
            TraceLemma::GrowthForcesRoom => "lemma_growth_forces_room",
            TraceLemma::PinnedPrefix => "lemma_pinned_prefix",
        }
    }
}

/// Result of one lemma on one trace; `witness` is the 1-based prefix index
/// of the first violation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LemmaFinding {
    pub lemma: TraceLemma,
    pub outcome: CheckOutcome,
    pub witness: Option<usize>,
}

/// Outcomes of all five lemmas on one trace.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LemmaReport {
    pub findings: [LemmaFinding; 5],
}

impl LemmaReport {
    /// True when no lemma failed (not-applicable entries do not count
    /// against the trace).
    pub fn all_hold(&self) -> bool {
        self.findings
            .iter()
            .all(|f| f.outcome != CheckOutcome::Fail)
    }

    pub fn outcome_of(&self, lemma: TraceLemma) -> CheckOutcome {
        self.findings
            .iter()
            .find(|f| f.lemma == lemma)
            .map(|f| f.outcome)
            .expect("all lemmas are present")
    }
}

/// Evaluates the five [`TraceLemma`] inequalities at every applicable
/// prefix index of the trace.
pub fn check_lemma_invariants(trace: &ReductionTrace) -> LemmaReport {
    let n = trace.alphabet_size();
    let a = prefix_sums(&trace.st.bumped);
    let i = prefix_sums(&trace.ht.bumped);
    let s = prefix_sums(&trace.s);
    let c = prefix_sums(&trace.ra.bumped);
    let g = prefix_sums(&trace.rs.bumped);
    let k = prefix_sums(&trace.gi.bumped);
    let r = &trace.r;

    let prefix_bound = first_violation(1..=n, |p| a[p - 1] <= i[p - 1]);
    let slack_nonneg = first_violation(1..=n, |p| s[p - 1] + c[p - 1] >= g[p - 1] + a[p - 1]);

    let slack_fires = |p: usize| s[p - 1] + c[p - 1] > g[p - 1] + a[p - 1];
    let slack_forces = conditional(1..=n, slack_fires, |p| a[p - 1] == i[p - 1]);

    // hypothesis and conclusion at 1-based p, valid for 2 ≤ p ≤ n−1
    let growth_fires = |p: usize| {
        c[p - 1] == k[p - 1] && c[p] == k[p] && c[p] == c[p - 1] + r[p]
    };
    let growth_forces = if n >= 3 {
        conditional(2..=n - 1, growth_fires, |p| s[p - 1] >= g[p - 1] + r[p])
    } else {
        (CheckOutcome::NotApplicable, None)
    };

    // hypothesis and conclusion at 1-based p, valid for 3 ≤ p ≤ n
    let pinned_fires = |p: usize| {
        k[p - 2] == c[p - 2]
            && k[p - 1] == c[p - 1]
            && c[p - 1] == a[p - 2]
            && a[p - 2] < c[p - 2] + r[p - 1]
            && s[p - 2] >= g[p - 2] + r[p - 1]
    };
    let pinned = if n >= 3 {
        conditional(3..=n, pinned_fires, |p| k[p - 1] == i[p - 2])
    } else {
        (CheckOutcome::NotApplicable, None)
    };

    let finding = |lemma, (outcome, witness)| LemmaFinding {
        lemma,
        outcome,
        witness,
    };
    LemmaReport {
        findings: [
            finding(TraceLemma::PrefixBound, prefix_bound),
            finding(TraceLemma::SlackNonnegative, slack_nonneg),
            finding(TraceLemma::SlackForcesEquality, slack_forces),
            finding(TraceLemma::GrowthForcesRoom, growth_forces),
            finding(TraceLemma::PinnedPrefix, pinned),
        ],
    }
}

fn first_violation(
    range: std::ops::RangeInclusive<usize>,
    holds: impl Fn(usize) -> bool,
) -> (CheckOutcome, Option<usize>) {
    for p in range {
        if !holds(p) {
            return (CheckOutcome::Fail, Some(p));
        }
    }
    (CheckOutcome::Pass, None)
}

fn conditional(
    range: std::ops::RangeInclusive<usize>,
    fires: impl Fn(usize) -> bool,
    holds: impl Fn(usize) -> bool,
) -> (CheckOutcome, Option<usize>) {
    let mut applicable = false;
    for p in range {
        if fires(p) {
            applicable = true;
            if !holds(p) {
                return (CheckOutcome::Fail, Some(p));
            }
        }
    }
    if applicable {
        (CheckOutcome::Pass, None)
    } else {
        (CheckOutcome::NotApplicable, None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;
    use crate::row::enumerate_rows;

    fn row(n: usize, text: &str) -> Row {
        Row::parse(Alphabet::new(n).unwrap(), text).unwrap()
    }

    fn trace(n: usize, r: &str, s: &str, t: &str) -> ReductionTrace {
        reduce_triple(&row(n, r), &row(n, s), &row(n, t))
    }

    #[test]
    fn worked_trace_is_reproduced_exactly() {
        let tr = trace(2, "2", "12", "1");
        assert_eq!(tr.st.bumped, vec![0, 1]); // A = "2"
        assert_eq!(tr.st.bottom, vec![2, 0]); // B = "11"
        assert_eq!(tr.ra.bumped, vec![0, 0]); // C absent
        assert_eq!(tr.ra.bottom, vec![0, 2]); // D = "22"
        assert_eq!(tr.db.bumped, vec![0, 2]); // E = "22"
        assert_eq!(tr.db.bottom, vec![2, 0]); // F = "11"
        assert_eq!(tr.rs.bumped, vec![0, 1]); // G = "2"
        assert_eq!(tr.rs.bottom, vec![1, 1]); // H = "12"
        assert_eq!(tr.ht.bumped, vec![0, 1]); // I = "2"
        assert_eq!(tr.ht.bottom, vec![2, 0]); // J = "11"
        assert_eq!(tr.gi.bumped, vec![0, 0]); // K absent
        assert_eq!(tr.gi.bottom, vec![0, 2]); // L = "22"
        assert_eq!(tr.right_final_word().to_string(), "22·11");
        assert_eq!(tr.left_final_word().to_string(), "22·11");
        assert!(composition_trivial(&tr));
    }

    #[test]
    fn dominating_triple_is_fixed() {
        let tr = trace(3, "3", "2", "1");
        assert_eq!(tr.right_final_word().to_string(), "3·2·1");
        assert_eq!(tr.left_final_word().to_string(), "3·2·1");
        assert!(composition_trivial(&tr));
    }

    #[test]
    fn c3k3_examples() {
        let tr = trace(3, "3", "2", "1");
        // min(t₁, s₂, r₃) = min(1, 1, 1) = 1
        assert_eq!(prefix_sums(&tr.ra.bumped)[2], 1);
        assert_eq!(check_c3k3_closed_form(&tr), CheckOutcome::Pass);

        // t₁ = 0 forces C₃ = K₃ = 0
        let tr = trace(3, "3", "2", "2");
        assert_eq!(prefix_sums(&tr.ra.bumped)[2], 0);
        assert_eq!(check_c3k3_closed_form(&tr), CheckOutcome::Pass);

        assert_eq!(
            check_c3k3_closed_form(&trace(2, "2", "12", "1")),
            CheckOutcome::NotApplicable
        );
    }

    #[test]
    fn e2l2_examples() {
        let tr = trace(2, "2", "12", "1");
        // min(s₁+t₁, t₁+r₂, r₂+s₂) = min(2, 2, 2) = 2
        assert_eq!(tr.db.bumped[1], 2);
        assert_eq!(check_e2l2_closed_form(&tr), CheckOutcome::Pass);

        assert_eq!(
            check_e2l2_closed_form(&trace(1, "1", "1", "1")),
            CheckOutcome::NotApplicable
        );
    }

    #[test]
    fn lemma_invariants_on_worked_traces() {
        let report = check_lemma_invariants(&trace(2, "2", "12", "1"));
        assert!(report.all_hold());
        assert_eq!(
            report.outcome_of(TraceLemma::PrefixBound),
            CheckOutcome::Pass
        );
        assert_eq!(
            report.outcome_of(TraceLemma::SlackForcesEquality),
            CheckOutcome::Pass
        );
        // conditional lemmas need at least three letters
        assert_eq!(
            report.outcome_of(TraceLemma::GrowthForcesRoom),
            CheckOutcome::NotApplicable
        );
        assert_eq!(
            report.outcome_of(TraceLemma::PinnedPrefix),
            CheckOutcome::NotApplicable
        );

        let report = check_lemma_invariants(&trace(1, "1", "1", "1"));
        assert!(report.all_hold());
    }

    #[test]
    fn exhaustive_small_grid_passes_every_check() {
        let alphabet = Alphabet::new(3).unwrap();
        let rows = enumerate_rows(alphabet, 1, 2);
        for r in &rows {
            for s in &rows {
                for t in &rows {
                    let tr = reduce_triple(r, s, t);
                    assert!(composition_trivial(&tr), "paths split on {r}·{s}·{t}");
                    assert!(check_zero_pattern(&tr), "zeros broken on {r}·{s}·{t}");
                    assert!(
                        check_letter_conservation(&tr),
                        "letters lost on {r}·{s}·{t}"
                    );
                    assert_eq!(check_c3k3_closed_form(&tr), CheckOutcome::Pass);
                    assert_eq!(check_e2l2_closed_form(&tr), CheckOutcome::Pass);
                    assert!(
                        check_lemma_invariants(&tr).all_hold(),
                        "lemma failed on {r}·{s}·{t}"
                    );
                }
            }
        }
    }
}
