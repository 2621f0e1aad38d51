//! Command-line front end for the plactic crate.
//!
//! Exit codes: 0 for success (and `true` verdicts), 1 for `false` verdicts
//! or verification failures, 2 for usage and parse errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use plactic::algebra::AlgebraElement;
use plactic::knuth::{congruence_class_with_fuel, DEFAULT_FUEL};
use plactic::verify::{
    build_relation, relation_respects_ordering, verify_gs_basis, SweepConfig, DEFAULT_BUDGET,
    DEFAULT_SAMPLE_MAX_LEN, DEFAULT_SEED,
};
use plactic::{
    enumerate_tableaux, multiply_rows_closed_form, multiply_rows_schensted, normal_form_letters,
    plactic_equivalent, tableau_multiply, Alphabet, Error, LetterWord, Row, Tableau,
};

#[derive(Parser)]
#[command(
    name = "plactic",
    version,
    about = "Rows, Young tableaux, normal forms, and rewriting verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct Common {
    /// Alphabet size; letters are 1..=n
    #[arg(long)]
    n: usize,
    /// Output format for stdout
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Also write the JSON form of the result to this file
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ProductAlgorithm {
    /// Closed-form recurrence on count vectors (the default)
    Closed,
    /// Letter-by-letter insertion
    Schensted,
}

#[derive(Subcommand)]
enum Command {
    /// Normal form of a letter word as a Young tableau
    NormalForm {
        #[command(flatten)]
        common: Common,
        /// Letter word, e.g. "21" (or "2,1,12" beyond 9 letters)
        word: String,
    },
    /// Whether two letter words have the same normal form
    Equiv {
        #[command(flatten)]
        common: Common,
        left: String,
        right: String,
    },
    /// Product of two rows as a (one- or two-row) tableau
    MulRows {
        #[command(flatten)]
        common: Common,
        left: String,
        right: String,
        /// Which product algorithm to run
        #[arg(long, value_enum, default_value_t = ProductAlgorithm::Closed)]
        algorithm: ProductAlgorithm,
    },
    /// Product of two tableaux
    TabMul {
        #[command(flatten)]
        common: Common,
        left: String,
        right: String,
    },
    /// Every tableau with a given number of letters
    Enumerate {
        #[command(flatten)]
        common: Common,
        /// Total number of letters
        #[arg(long)]
        letters: u64,
    },
    /// Whether two letter words are congruent, by brute-force search
    OracleEquiv {
        #[command(flatten)]
        common: Common,
        left: String,
        right: String,
        /// Bound on the congruence-class size
        #[arg(long, default_value_t = DEFAULT_FUEL)]
        fuel: usize,
    },
    /// The full congruence class of a letter word
    OracleClass {
        #[command(flatten)]
        common: Common,
        word: String,
        /// Bound on the congruence-class size
        #[arg(long, default_value_t = DEFAULT_FUEL)]
        fuel: usize,
    },
    /// Whether the rewrite for a row pair descends in the deg-lex order
    CheckOrder {
        #[command(flatten)]
        common: Common,
        left: String,
        right: String,
    },
    /// Exhaustive two-path reduction sweep over bounded row triples
    VerifyGs {
        #[command(flatten)]
        common: Common,
        /// Maximum row length of the exhaustive grid
        #[arg(long)]
        max_len: u64,
        /// Extra random triples beyond the grid
        #[arg(long, default_value_t = 0)]
        samples: u64,
        /// Seed for the sampled triples
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Maximum row length drawn by the sampler
        #[arg(long, default_value_t = DEFAULT_SAMPLE_MAX_LEN)]
        sample_max_len: u64,
        /// Refuse to run grids with more triples than this
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Product of two algebra elements
    AlgMul {
        #[command(flatten)]
        common: Common,
        left: String,
        right: String,
    },
    /// Canonical form of a linear combination of row words
    AlgReduce {
        #[command(flatten)]
        common: Common,
        expr: String,
    },
}

impl Command {
    fn common(&self) -> &Common {
        match self {
            Command::NormalForm { common, .. }
            | Command::Equiv { common, .. }
            | Command::MulRows { common, .. }
            | Command::TabMul { common, .. }
            | Command::Enumerate { common, .. }
            | Command::OracleEquiv { common, .. }
            | Command::OracleClass { common, .. }
            | Command::CheckOrder { common, .. }
            | Command::VerifyGs { common, .. }
            | Command::AlgMul { common, .. }
            | Command::AlgReduce { common, .. } => common,
        }
    }
}

struct CommandResult {
    text: String,
    json: serde_json::Value,
    /// `Some(false)` makes the process exit 1.
    verdict: Option<bool>,
}

impl CommandResult {
    fn value(text: String, json: serde_json::Value) -> Self {
        CommandResult {
            text,
            json,
            verdict: None,
        }
    }

    fn verdict(flag: bool, json: serde_json::Value) -> Self {
        CommandResult {
            text: flag.to_string(),
            json,
            verdict: Some(flag),
        }
    }
}

struct CliError {
    message: String,
    code: u8,
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        let code = match err {
            Error::FuelExhausted { .. } => 1,
            _ => 2,
        };
        CliError {
            message: err.to_string(),
            code,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads();
    match run(&cli.command) {
        Ok(result) => {
            if let Some(path) = &cli.command.common().out {
                let pretty = serde_json::to_string_pretty(&result.json)
                    .expect("reports always serialize");
                if let Err(err) = std::fs::write(path, pretty + "\n") {
                    eprintln!("error: cannot write {}: {err}", path.display());
                    return ExitCode::from(2);
                }
            }
            match cli.command.common().format {
                Format::Text => println!("{}", result.text),
                Format::Json => println!(
                    "{}",
                    serde_json::to_string(&result.json).expect("reports always serialize")
                ),
            }
            match result.verdict {
                Some(false) => ExitCode::from(1),
                _ => ExitCode::SUCCESS,
            }
        }
        Err(err) => {
            eprintln!("error: {}", err.message);
            ExitCode::from(err.code)
        }
    }
}

/// Honors PLACTIC_THREADS for the sweep's worker pool.
fn configure_threads() {
    if let Ok(value) = std::env::var("PLACTIC_THREADS") {
        if let Ok(threads) = value.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build_global();
        }
    }
}

fn run(command: &Command) -> Result<CommandResult, CliError> {
    let alphabet = Alphabet::new(command.common().n)?;
    match command {
        Command::NormalForm { word, .. } => {
            let word = LetterWord::parse(alphabet, word)?;
            let tableau = normal_form_letters(&word);
            Ok(tableau_result(&tableau))
        }
        Command::Equiv { left, right, .. } => {
            let u = LetterWord::parse(alphabet, left)?;
            let v = LetterWord::parse(alphabet, right)?;
            let equivalent = plactic_equivalent(&u, &v);
            Ok(CommandResult::verdict(
                equivalent,
                json!({ "equivalent": equivalent }),
            ))
        }
        Command::MulRows {
            left,
            right,
            algorithm,
            ..
        } => {
            let w = Row::parse(alphabet, left)?;
            let z = Row::parse(alphabet, right)?;
            let product = match algorithm {
                ProductAlgorithm::Closed => multiply_rows_closed_form(&w, &z),
                ProductAlgorithm::Schensted => multiply_rows_schensted(&w, &z),
            };
            let tableau = Tableau::new(alphabet, product.rows())?;
            Ok(tableau_result(&tableau))
        }
        Command::TabMul { left, right, .. } => {
            let a = Tableau::parse(alphabet, left)?;
            let b = Tableau::parse(alphabet, right)?;
            Ok(tableau_result(&tableau_multiply(&a, &b)))
        }
        Command::Enumerate { letters, .. } => {
            let tableaux: Vec<Tableau> = enumerate_tableaux(alphabet, *letters).collect();
            let text = tableaux
                .iter()
                .map(|t| t.to_string())
                .collect::<Vec<_>>()
                .join("\n");
            let json = json!({
                "n": alphabet.size(),
                "letters": letters,
                "count": tableaux.len(),
                "tableaux": tableaux,
            });
            Ok(CommandResult::value(text, json))
        }
        Command::OracleEquiv {
            left, right, fuel, ..
        } => {
            let u = LetterWord::parse(alphabet, left)?;
            let v = LetterWord::parse(alphabet, right)?;
            let equivalent = if u == v {
                true
            } else if u.len() != v.len() {
                false
            } else {
                congruence_class_with_fuel(&u, *fuel)?.contains(&v)
            };
            Ok(CommandResult::verdict(
                equivalent,
                json!({ "equivalent": equivalent }),
            ))
        }
        Command::OracleClass { word, fuel, .. } => {
            let word = LetterWord::parse(alphabet, word)?;
            let class = congruence_class_with_fuel(&word, *fuel)?;
            let members: Vec<String> = class.members().iter().map(|w| w.to_string()).collect();
            let text = members.join("\n");
            let json = json!({
                "word": word.to_string(),
                "size": members.len(),
                "members": members,
            });
            Ok(CommandResult::value(text, json))
        }
        Command::CheckOrder { left, right, .. } => {
            let r = Row::parse(alphabet, left)?;
            let s = Row::parse(alphabet, right)?;
            let relation = build_relation(&r, &s);
            if relation.is_trivial() {
                let json = json!({
                    "lhs": relation.lhs_word().to_string(),
                    "rhs": relation.rhs_word().to_string(),
                    "trivial": true,
                    "descends": serde_json::Value::Null,
                });
                return Ok(CommandResult {
                    text: "trivial".into(),
                    json,
                    verdict: Some(true),
                });
            }
            let descends = relation_respects_ordering(&relation);
            let json = json!({
                "lhs": relation.lhs_word().to_string(),
                "rhs": relation.rhs_word().to_string(),
                "trivial": false,
                "descends": descends,
            });
            Ok(CommandResult::verdict(descends, json))
        }
        Command::VerifyGs {
            max_len,
            samples,
            seed,
            sample_max_len,
            budget,
            ..
        } => {
            let config = SweepConfig {
                n: alphabet.size(),
                max_len: *max_len,
                samples: *samples,
                seed: *seed,
                sample_max_len: *sample_max_len,
                budget: *budget,
            };
            let report = verify_gs_basis(&config)?;
            let json = serde_json::to_value(&report).expect("reports always serialize");
            Ok(CommandResult {
                text: report.summary().trim_end().to_string(),
                json,
                verdict: Some(!report.has_failures()),
            })
        }
        Command::AlgMul { left, right, .. } => {
            let a = AlgebraElement::parse(alphabet, left)?;
            let b = AlgebraElement::parse(alphabet, right)?;
            let product = &a * &b;
            let json = serde_json::to_value(&product).expect("elements always serialize");
            Ok(CommandResult::value(product.to_string(), json))
        }
        Command::AlgReduce { expr, .. } => {
            let element = AlgebraElement::parse(alphabet, expr)?;
            let json = serde_json::to_value(&element).expect("elements always serialize");
            Ok(CommandResult::value(element.to_string(), json))
        }
    }
}

fn tableau_result(tableau: &Tableau) -> CommandResult {
    let json = serde_json::to_value(tableau).expect("tableaux always serialize");
    CommandResult::value(tableau.to_string(), json)
}
