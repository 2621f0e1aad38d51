//! Exhaustive (and optionally sampled) verification sweeps.
//!
//! A sweep enumerates every row of bounded length, checks the ordering law
//! on all pairs and replays both reduction orders on all triples, then
//! aggregates per-check pass/not-applicable/fail counts into a
//! deterministic report. Work is distributed with rayon; counts are sums
//! and the counterexample is a minimum over enumeration indices, so the
//! report is identical for any thread count.

use std::collections::BTreeMap;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::row::{enumerate_rows, Row};

use super::trace::{
    check_c3k3_closed_form, check_e2l2_closed_form, check_lemma_invariants,
    check_letter_conservation, check_zero_pattern, composition_trivial, reduce_triple,
    CheckOutcome, TraceLemma,
};
use super::{build_relation, relation_respects_ordering};

/// Default ceiling on the number of triples an exhaustive sweep may visit.
pub const DEFAULT_BUDGET: u64 = 10_000_000;
/// Default seed for the sampled extension.
pub const DEFAULT_SEED: u64 = 1;
/// Default maximum row length drawn by the sampler.
pub const DEFAULT_SAMPLE_MAX_LEN: u64 = 30;

/// Configuration of one sweep.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SweepConfig {
    /// Alphabet size.
    pub n: usize,
    /// Maximum row length of the exhaustive grid.
    pub max_len: u64,
    /// Number of random triples beyond the grid (0 disables sampling).
    pub samples: u64,
    /// Seed for the sampler; echoed into the report.
    pub seed: u64,
    /// Maximum row length drawn by the sampler.
    pub sample_max_len: u64,
    /// Refuse to start when the grid has more triples than this.
    pub budget: u64,
}

impl SweepConfig {
    pub fn new(n: usize, max_len: u64) -> Self {
        SweepConfig {
            n,
            max_len,
            samples: 0,
            seed: DEFAULT_SEED,
            sample_max_len: DEFAULT_SAMPLE_MAX_LEN,
            budget: DEFAULT_BUDGET,
        }
    }
}

/// Pass/not-applicable/fail tallies for one check.
#[derive(Clone, Copy, Default, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CheckCounts {
    pub pass: u64,
    pub not_applicable: u64,
    pub fail: u64,
}

impl CheckCounts {
    fn record(&mut self, outcome: CheckOutcome) {
        match outcome {
            CheckOutcome::Pass => self.pass += 1,
            CheckOutcome::NotApplicable => self.not_applicable += 1,
            CheckOutcome::Fail => self.fail += 1,
        }
    }

    pub fn total(&self) -> u64 {
        self.pass + self.not_applicable + self.fail
    }
}

/// The least failing input of a sweep section, in enumeration order.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Counterexample {
    /// The rows involved (two for the ordering check, three for traces).
    pub rows: Vec<String>,
    /// Keys of the checks that failed there.
    pub failed_checks: Vec<String>,
}

/// Tallies and counterexample for one part of a sweep.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SweepSection {
    pub pairs: u64,
    pub triples: u64,
    pub checks: BTreeMap<String, CheckCounts>,
    pub counterexample: Option<Counterexample>,
}

impl SweepSection {
    pub fn failures(&self) -> u64 {
        self.checks.values().map(|c| c.fail).sum()
    }
}

/// Full result of [`verify_gs_basis`].
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct VerificationReport {
    /// Library version that produced the report.
    pub version: String,
    /// Echo of the configuration, including the seed.
    pub config: SweepConfig,
    /// Number of generator rows in the exhaustive grid.
    pub rows: usize,
    /// Results over the exhaustive grid.
    pub exhaustive: SweepSection,
    /// Results over the sampled triples, when sampling was requested.
    pub sampled: Option<SweepSection>,
    /// Wall time in milliseconds. Excluded from determinism comparisons.
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn has_failures(&self) -> bool {
        self.exhaustive.failures() > 0
            || self.sampled.as_ref().is_some_and(|s| s.failures() > 0)
    }

    /// Human-readable summary, one line per check.
    pub fn summary(&self) -> String {
        use std::fmt::Write;
        let mut out = String::new();
        let _ = writeln!(
            out,
            "verification sweep: n={}, max_len={} (budget {})",
            self.config.n, self.config.max_len, self.config.budget
        );
        let _ = writeln!(
            out,
            "rows: {}, pairs: {}, triples: {}",
            self.rows, self.exhaustive.pairs, self.exhaustive.triples
        );
        write_section(&mut out, &self.exhaustive);
        if let Some(sampled) = &self.sampled {
            let _ = writeln!(
                out,
                "sampled: {} triples, seed {}, row lengths ≤ {}",
                sampled.triples, self.config.seed, self.config.sample_max_len
            );
            write_section(&mut out, sampled);
        }
        let total_failures = self.exhaustive.failures()
            + self.sampled.as_ref().map_or(0, |s| s.failures());
        let _ = writeln!(
            out,
            "result: {} ({} failures) in {} ms",
            if total_failures == 0 { "PASS" } else { "FAIL" },
            total_failures,
            self.elapsed_ms
        );
        out
    }
}

fn write_section(out: &mut String, section: &SweepSection) {
    use std::fmt::Write;
    for (name, counts) in &section.checks {
        let _ = writeln!(
            out,
            "  {name:<28} pass={} na={} fail={}",
            counts.pass, counts.not_applicable, counts.fail
        );
    }
    if let Some(ce) = &section.counterexample {
        let _ = writeln!(
            out,
            "  counterexample: {} failing {}",
            ce.rows.join(" · "),
            ce.failed_checks.join(", ")
        );
    }
}

/// Keys of the ten per-triple checks, in report order.
const TRIPLE_CHECKS: [&str; 10] = [
    "composition_trivial",
    "c3_k3_closed_form",
    "e2_l2_closed_form",
    "lemma_prefix_bound",
    "lemma_slack_nonnegative",
    "lemma_slack_forces_equality",
    "lemma_growth_forces_room",
    "lemma_pinned_prefix",
    "zero_pattern",
    "letter_conservation",
];

/// Key of the per-pair ordering check.
const PAIR_CHECK: &str = "ordering_compatibility";

#[derive(Clone)]
struct Tally {
    triple_counts: [CheckCounts; 10],
    pair_counts: CheckCounts,
    pairs: u64,
    triples: u64,
    /// `(enumeration indices, rows, failed checks)` of the least failure.
    counterexample: Option<(Vec<usize>, Vec<String>, Vec<String>)>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            triple_counts: [CheckCounts::default(); 10],
            pair_counts: CheckCounts::default(),
            pairs: 0,
            triples: 0,
            counterexample: None,
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        for (mine, theirs) in self.triple_counts.iter_mut().zip(other.triple_counts) {
            mine.pass += theirs.pass;
            mine.not_applicable += theirs.not_applicable;
            mine.fail += theirs.fail;
        }
        self.pair_counts.pass += other.pair_counts.pass;
        self.pair_counts.not_applicable += other.pair_counts.not_applicable;
        self.pair_counts.fail += other.pair_counts.fail;
        self.pairs += other.pairs;
        self.triples += other.triples;
        self.counterexample = match (self.counterexample.take(), other.counterexample) {
            (None, ce) | (ce, None) => ce,
            (Some(a), Some(b)) => Some(if a.0 <= b.0 { a } else { b }),
        };
        self
    }

    fn record_triple(&mut self, indices: Vec<usize>, rows: [&Row; 3]) {
        let outcomes = evaluate_triple(rows[0], rows[1], rows[2]);
        self.triples += 1;
        let mut failed = Vec::new();
        for (counts, (key, outcome)) in self
            .triple_counts
            .iter_mut()
            .zip(TRIPLE_CHECKS.iter().zip(outcomes))
        {
            counts.record(outcome);
            if outcome == CheckOutcome::Fail {
                failed.push(key.to_string());
            }
        }
        if !failed.is_empty() {
            self.note_failure(indices, rows.iter().map(|r| r.to_string()).collect(), failed);
        }
    }

    fn record_pair(&mut self, indices: Vec<usize>, r: &Row, s: &Row) {
        let relation = build_relation(r, s);
        let outcome = if relation.is_trivial() {
            CheckOutcome::NotApplicable
        } else {
            CheckOutcome::from_bool(relation_respects_ordering(&relation))
        };
        self.pairs += 1;
        self.pair_counts.record(outcome);
        if outcome == CheckOutcome::Fail {
            self.note_failure(
                indices,
                vec![r.to_string(), s.to_string()],
                vec![PAIR_CHECK.to_string()],
            );
        }
    }

    fn note_failure(&mut self, indices: Vec<usize>, rows: Vec<String>, failed: Vec<String>) {
        let better = match &self.counterexample {
            None => true,
            Some((existing, _, _)) => indices < *existing,
        };
        if better {
            self.counterexample = Some((indices, rows, failed));
        }
    }

    fn into_section(self) -> SweepSection {
        let mut checks = BTreeMap::new();
        for (key, counts) in TRIPLE_CHECKS.iter().zip(self.triple_counts) {
            checks.insert(key.to_string(), counts);
        }
        if self.pairs > 0 {
            checks.insert(PAIR_CHECK.to_string(), self.pair_counts);
        }
        SweepSection {
            pairs: self.pairs,
            triples: self.triples,
            checks,
            counterexample: self
                .counterexample
                .map(|(_, rows, failed_checks)| Counterexample {
                    rows,
                    failed_checks,
                }),
        }
    }
}

fn evaluate_triple(r: &Row, s: &Row, t: &Row) -> [CheckOutcome; 10] {
    let trace = reduce_triple(r, s, t);
    let lemmas = check_lemma_invariants(&trace);
    [
        CheckOutcome::from_bool(composition_trivial(&trace)),
        check_c3k3_closed_form(&trace),
        check_e2l2_closed_form(&trace),
        lemmas.outcome_of(TraceLemma::PrefixBound),
        lemmas.outcome_of(TraceLemma::SlackNonnegative),
        lemmas.outcome_of(TraceLemma::SlackForcesEquality),
        lemmas.outcome_of(TraceLemma::GrowthForcesRoom),
        lemmas.outcome_of(TraceLemma::PinnedPrefix),
        CheckOutcome::from_bool(check_zero_pattern(&trace)),
        CheckOutcome::from_bool(check_letter_conservation(&trace)),
    ]
}

/// Runs the full sweep described by `config`.
///
/// Fails up front when the exhaustive grid exceeds the configured budget.
/// The returned report is byte-for-byte reproducible for a fixed config and
/// seed, apart from `elapsed_ms`.
pub fn verify_gs_basis(config: &SweepConfig) -> Result<VerificationReport> {
    let alphabet = Alphabet::new(config.n)?;
    let rows = enumerate_rows(alphabet, 1, config.max_len);
    let triples = (rows.len() as u128).pow(3);
    if triples > u128::from(config.budget) {
        return Err(Error::BudgetExceeded {
            triples,
            budget: config.budget,
        });
    }
    let start = Instant::now();

    let exhaustive = (0..rows.len())
        .into_par_iter()
        .map(|i| {
            let mut tally = Tally::new();
            for j in 0..rows.len() {
                tally.record_pair(vec![i, j], &rows[i], &rows[j]);
                for k in 0..rows.len() {
                    tally.record_triple(vec![i, j, k], [&rows[i], &rows[j], &rows[k]]);
                }
            }
            tally
        })
        .reduce(Tally::new, Tally::merge)
        .into_section();

    let sampled = (config.samples > 0).then(|| {
        let triples = sample_triples(alphabet, config);
        triples
            .par_iter()
            .enumerate()
            .map(|(idx, (r, s, t))| {
                let mut tally = Tally::new();
                tally.record_triple(vec![idx], [r, s, t]);
                tally
            })
            .reduce(Tally::new, Tally::merge)
            .into_section()
    });

    Ok(VerificationReport {
        version: env!("CARGO_PKG_VERSION").to_string(),
        config: config.clone(),
        rows: rows.len(),
        exhaustive,
        sampled,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

/// Draws `config.samples` random triples; rows are random words of length
/// `1..=sample_max_len` sorted into count vectors.
fn sample_triples(alphabet: Alphabet, config: &SweepConfig) -> Vec<(Row, Row, Row)> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let random_row = |rng: &mut ChaCha8Rng| {
        let len = rng.gen_range(1..=config.sample_max_len.max(1));
        let mut counts = vec![0u64; alphabet.size()];
        for _ in 0..len {
            counts[rng.gen_range(0..alphabet.size())] += 1;
        }
        Row::from_counts_unchecked(counts)
    };
    (0..config.samples)
        .map(|_| {
            (
                random_row(&mut rng),
                random_row(&mut rng),
                random_row(&mut rng),
            )
        })
        .collect()
}
