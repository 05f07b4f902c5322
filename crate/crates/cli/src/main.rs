//! `qshuffle`: exact computation and identity verification in the q-shuffle
//! algebra on the two-letter alphabet.
//!
//! Exit status: 0 on success (all verifications pass), 1 on verification
//! failure, 2 on usage or parse errors.

mod verify_all;

use std::fmt;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use qshuffle_core::relations::{self, Arity};
use qshuffle_core::shuffle::{commutator_qk, shuffle};
use qshuffle_core::words::{classify, AltFamily, WordClass};
use qshuffle_core::{series, FreeElement, Letter, Side, Word};

#[derive(Parser)]
#[command(
    name = "qshuffle",
    version,
    about = "Exact q-shuffle algebra computations on words over {x, y}",
    after_help = "Word operands are literals over {x, y} ('1' is the trivial word). \
                  Use --expr to pass full element expressions such as '(1 + q^2)*xxy + xyx'. \
                  Set QSHUFFLE_FORMAT=json to default to JSON output."
)]
struct Cli {
    /// Output format (defaults to $QSHUFFLE_FORMAT, then text).
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Worker threads for verification sweeps (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

#[derive(Clone, Copy, ValueEnum)]
enum LetterArg {
    X,
    Y,
}

/// Up to two operands: positional word literals first, then `--expr`
/// element expressions fill the remaining slots.
#[derive(Args)]
struct Operands {
    /// Word literals over {x, y}; `1` denotes the trivial word.
    #[arg(value_name = "WORD")]
    words: Vec<String>,
    /// Element expressions, e.g. "(1 + q^2)*xxy + xyx".
    #[arg(long = "expr", value_name = "ELEMENT")]
    exprs: Vec<String>,
}

#[derive(Subcommand)]
enum Command {
    /// q-shuffle product of two operands.
    Shuffle(Operands),
    /// Free (concatenation) product of two operands.
    FreeMul(Operands),
    /// q^k-commutator [a, b]_{q^k} = q^k(a ⋆ b) - q^-k(b ⋆ a).
    Commutator {
        /// Commutator twist: 0, 1, or 2.
        #[arg(long, default_value_t = 0)]
        k: i64,
        #[command(flatten)]
        operands: Operands,
    },
    /// Classify a word: trivial, letter power, alternating, doubly
    /// alternating, or not in the letter-generated subalgebra.
    Classify {
        #[arg(value_name = "WORD")]
        word: String,
    },
    /// Strip a letter from the left or right end of every word.
    Truncate {
        #[arg(long, value_enum)]
        side: SideArg,
        #[arg(long, value_enum)]
        letter: LetterArg,
        #[command(flatten)]
        operand: Operands,
    },
    /// Verify one identity family at explicit parameters or over a range.
    Verify {
        /// Family id (e.g. P4.xcomm1.1) or prefix group (e.g. C.5).
        #[arg(long)]
        family: String,
        /// Verify all instances with n <= MAX (or i + j <= MAX).
        #[arg(long, value_name = "MAX")]
        max: Option<usize>,
        /// Verify a single instance, e.g. --params 2,3.
        #[arg(long, value_delimiter = ',', value_name = "N[,M]")]
        params: Option<Vec<usize>>,
    },
    /// Run the whole catalog, the series identities, the classification
    /// sweep, and the shuffle cross-checks.
    VerifyAll(verify_all::VerifyAllArgs),
    /// Verify a generating-function identity through t^ORDER.
    Series {
        /// Series identity id, e.g. S6.1.1.
        #[arg(value_name = "ID")]
        id: String,
        #[arg(long, default_value_t = 8)]
        order: usize,
    },
    /// List every identity family with its arity and source.
    Catalog,
}

/// Usage/parse-level error: prints to stderr and exits with status 2.
struct CliError(String);

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl<E: std::error::Error> From<E> for CliError {
    fn from(e: E) -> Self {
        CliError(e.to_string())
    }
}

impl Operands {
    fn resolve(&self, want: usize) -> Result<Vec<FreeElement>, CliError> {
        let mut out = Vec::new();
        for w in &self.words {
            let word = Word::from_str(w)
                .map_err(|e| CliError(format!("word operand '{w}': {e}")))?;
            out.push(FreeElement::from_word(word));
        }
        for e in &self.exprs {
            let elem = FreeElement::from_str(e)
                .map_err(|err| CliError(format!("element operand '{e}': {err}")))?;
            out.push(elem);
        }
        if out.len() != want {
            return Err(CliError(format!(
                "expected {want} operand(s) (positional words and/or --expr), got {}",
                out.len()
            )));
        }
        Ok(out)
    }
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::Left => Side::Left,
            SideArg::Right => Side::Right,
        }
    }
}

impl From<LetterArg> for Letter {
    fn from(l: LetterArg) -> Letter {
        match l {
            LetterArg::X => Letter::X,
            LetterArg::Y => Letter::Y,
        }
    }
}

fn chosen_format(cli: &Cli) -> Format {
    if let Some(f) = cli.format {
        return f;
    }
    match std::env::var("QSHUFFLE_FORMAT").as_deref() {
        Ok("json") | Ok("JSON") => Format::Json,
        _ => Format::Text,
    }
}

fn print_element(elem: &FreeElement, format: Format) {
    match format {
        Format::Text => println!("{elem}"),
        Format::Json => println!("{}", elem.to_json()),
    }
}

fn classification_json(class: &WordClass) -> serde_json::Value {
    match class {
        WordClass::Trivial => json!({"kind": "trivial"}),
        WordClass::PowerX(n) => json!({"kind": "power", "letter": "x", "n": n}),
        WordClass::PowerY(n) => json!({"kind": "power", "letter": "y", "n": n}),
        WordClass::Alternating(fam, n) => json!({
            "kind": "alternating",
            "family": fam.as_str(),
            "n": n,
        }),
        WordClass::DoublyAlternating(fam, n) => json!({
            "kind": "doubly-alternating",
            "family": fam.as_str(),
            "n": n,
        }),
        WordClass::NotInU { offset, segment } => json!({
            "kind": "not-in-U",
            "offset": offset,
            "segment": segment.to_string(),
        }),
    }
}

/// Default verification bound when `--max` is not given: the per-section
/// sweep defaults used by verify-all.
fn default_bound(id: &str) -> usize {
    let section_bound = |fam: &relations::RelationFamily| match (fam.source.section, fam.arity) {
        (_, Arity::None) => 0,
        ("4", _) => 4,
        ("5", _) | ("C", _) => 3,
        ("A", _) => 6,
        ("B", _) => 4,
        _ => 4,
    };
    relations::resolve(id)
        .iter()
        .filter_map(|fam_id| relations::find_exact(fam_id))
        .map(section_bound)
        .max()
        .unwrap_or(verify_all::DEFAULT_SERIES_ORDER)
}

fn run(cli: &Cli) -> Result<ExitCode, CliError> {
    let format = chosen_format(cli);
    match &cli.command {
        Command::Shuffle(operands) => {
            let ops = operands.resolve(2)?;
            print_element(&shuffle(&ops[0], &ops[1]), format);
            Ok(ExitCode::SUCCESS)
        }
        Command::FreeMul(operands) => {
            let ops = operands.resolve(2)?;
            print_element(&ops[0].free_mul(&ops[1]), format);
            Ok(ExitCode::SUCCESS)
        }
        Command::Commutator { k, operands } => {
            if !(0..=2).contains(k) {
                return Err(CliError("--k must be 0, 1, or 2".into()));
            }
            let ops = operands.resolve(2)?;
            print_element(&commutator_qk(&ops[0], &ops[1], *k), format);
            Ok(ExitCode::SUCCESS)
        }
        Command::Classify { word } => {
            let w = Word::from_str(word).map_err(|e| CliError(format!("word '{word}': {e}")))?;
            let class = classify(w);
            match format {
                Format::Text => println!("{class}"),
                Format::Json => println!("{}", classification_json(&class)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Truncate {
            side,
            letter,
            operand,
        } => {
            let ops = operand.resolve(1)?;
            print_element(&ops[0].truncate((*side).into(), (*letter).into()), format);
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            family,
            max,
            params,
        } => {
            if max.is_some() && params.is_some() {
                return Err(CliError("--max and --params are mutually exclusive".into()));
            }
            let reports = match params {
                Some(p) => vec![relations::verify(family, p)?],
                None => {
                    let bound = max.unwrap_or_else(|| default_bound(family));
                    relations::verify_range(family, bound)?
                }
            };
            let all_pass = reports.iter().all(|r| r.pass);
            match format {
                Format::Text => {
                    for report in &reports {
                        println!("{report}");
                    }
                }
                Format::Json => {
                    let arr: Vec<_> = reports.iter().map(|r| r.to_json()).collect();
                    println!("{}", serde_json::Value::Array(arr));
                }
            }
            Ok(if all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::VerifyAll(args) => verify_all::run(args, format == Format::Json, cli.jobs),
        Command::Series { id, order } => {
            if *order > verify_all::MAX_SERIES_ORDER {
                return Err(CliError(format!(
                    "--order is capped at {} (word length would overflow the packed representation)",
                    verify_all::MAX_SERIES_ORDER
                )));
            }
            let report = series::verify_series_identity(id, *order)?;
            match format {
                Format::Text => println!("{report}"),
                Format::Json => println!("{}", report.to_json()),
            }
            Ok(if report.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Catalog => {
            let listing = relations::list_families();
            match format {
                Format::Text => {
                    for (id, arity, source) in listing {
                        println!("{id:<16} params: {:<6} {source}", arity.as_str());
                    }
                }
                Format::Json => {
                    let arr: Vec<_> = listing
                        .iter()
                        .map(|(id, arity, source)| {
                            json!({
                                "id": id,
                                "arity": arity.as_str(),
                                "section": source.section,
                                "item": source.item,
                                "position": source.position,
                                "note": source.note,
                            })
                        })
                        .collect();
                    println!("{}", serde_json::Value::Array(arr));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
