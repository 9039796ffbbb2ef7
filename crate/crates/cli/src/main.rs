//! `credit-weights`: author credit weights, alpha solving, reference tables
//! and weighted h-indices from the command line.
//!
//! Exit status is 0 on success, 1 when the inputs are well-formed but
//! invalid (infeasible alpha, bad corpus), and 2 on usage errors.

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{CommandFactory, Parser, Subcommand};
use credit_weights::corpus::{load_corpus, write_weights, WeightFormat};
use credit_weights::fraction::parse_rational;
use credit_weights::index::build_profiles;
use credit_weights::report::{fig2_csv, fig2_dataset, Artifact};
use credit_weights::scheme::{endpoint_alpha, endpoints_consistent, max_alpha};
use credit_weights::{Positivity, Rational, Scheme, SchemeKind};

#[derive(Parser)]
#[command(
    name = "credit-weights",
    version,
    about = "Positional credit weights for multi-author papers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the weight vector of a scheme for k authors.
    Weights {
        #[arg(long, value_parser = parse_scheme)]
        scheme: SchemeKind,
        #[arg(short = 'k', long = "authors")]
        k: usize,
        /// Type-2 decrement, as a fraction (1/20) or exact decimal (0.05).
        #[arg(long, value_parser = parse_fraction, allow_hyphen_values = true)]
        alpha: Option<Rational>,
        #[arg(long, value_parser = parse_positivity, default_value = "strict")]
        positivity: Positivity,
        #[arg(long, value_parser = parse_format, env = "CREDIT_WEIGHTS_FORMAT", default_value = "csv-fraction")]
        format: WeightFormat,
    },
    /// Bound alpha by a floor on the last weight (--mu), or recover it from
    /// the first and last weights (--w1 and --wk).
    Alpha {
        #[arg(short = 'k', long = "authors")]
        k: usize,
        #[arg(long, value_parser = parse_fraction)]
        mu: Option<Rational>,
        #[arg(long, value_parser = parse_fraction)]
        w1: Option<Rational>,
        #[arg(long, value_parser = parse_fraction)]
        wk: Option<Rational>,
    },
    /// Regenerate a reference table or plot dataset
    /// (table2, table3, table4, table5, fig1, fig2, or all with --out-dir).
    Table {
        #[arg(value_parser = parse_table)]
        name: TableChoice,
        /// Emit markdown instead of CSV for the weight tables.
        #[arg(long)]
        markdown: bool,
        /// Write the artifact's files into this directory instead of stdout.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Weighted h-index of every author in a corpus (.jsonl or .csv).
    Index {
        corpus: PathBuf,
        #[arg(long, value_parser = parse_scheme)]
        scheme: SchemeKind,
        #[arg(long, value_parser = parse_fraction, allow_hyphen_values = true)]
        alpha: Option<Rational>,
        #[arg(long, value_parser = parse_positivity, default_value = "strict")]
        positivity: Positivity,
    },
    /// Weights of all five schemes for k authors, type2 at the given alpha.
    Compare {
        #[arg(short = 'k', long = "authors")]
        k: usize,
        #[arg(long, value_parser = parse_fraction, allow_hyphen_values = true)]
        alpha: Rational,
    },
}

#[derive(Clone, Copy)]
enum TableChoice {
    One(Artifact),
    All,
}

fn parse_scheme(s: &str) -> Result<SchemeKind, String> {
    s.parse()
}

fn parse_fraction(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn parse_format(s: &str) -> Result<WeightFormat, String> {
    s.parse()
}

fn parse_positivity(s: &str) -> Result<Positivity, String> {
    match s {
        "strict" => Ok(Positivity::StrictPositive),
        "allow-zero" => Ok(Positivity::AllowZero),
        "unchecked" => Ok(Positivity::Unchecked),
        other => Err(format!(
            "unknown positivity '{other}' (expected strict, allow-zero or unchecked)"
        )),
    }
}

fn parse_table(s: &str) -> Result<TableChoice, String> {
    if s == "all" {
        Ok(TableChoice::All)
    } else {
        s.parse().map(TableChoice::One)
    }
}

enum Failure {
    Usage(ErrorKind, String),
    Invalid(String),
}

impl<E: std::error::Error> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Invalid(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    match run(cli.command, &mut out) {
        Ok(()) => {
            let mut stdout = io::stdout().lock();
            if stdout
                .write_all(out.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(kind, message)) => Cli::command().error(kind, message).exit(),
        Err(Failure::Invalid(message)) => {
            // partial results still go to stdout
            let _ = io::stdout().lock().write_all(out.as_bytes());
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}

fn scheme_from_flags(
    kind: SchemeKind,
    alpha: Option<Rational>,
    positivity: Positivity,
) -> Result<Scheme, Failure> {
    match (Scheme::fixed(kind), alpha) {
        (Some(spec), None) => Ok(spec),
        (Some(_), Some(_)) => Err(Failure::Usage(
            ErrorKind::ArgumentConflict,
            format!("--alpha only applies to --scheme type2, not {kind}"),
        )),
        (None, Some(alpha)) => Ok(Scheme::type2(alpha, positivity)),
        (None, None) => Err(Failure::Usage(
            ErrorKind::MissingRequiredArgument,
            "--scheme type2 requires --alpha".to_string(),
        )),
    }
}

fn run(command: Command, out: &mut String) -> Result<(), Failure> {
    match command {
        Command::Weights {
            scheme,
            k,
            alpha,
            positivity,
            format,
        } => {
            let spec = scheme_from_flags(scheme, alpha, positivity)?;
            let v = spec.weights(k)?;
            out.push_str(&write_weights(&v, format));
        }
        Command::Alpha { k, mu, w1, wk } => match (mu, w1, wk) {
            (Some(mu), None, None) => {
                let bound = max_alpha(k, &mu)?;
                let strictness = if bound.strict { "strict" } else { "non-strict" };
                out.push_str(&format!("{} ({strictness})\n", bound.max_alpha));
            }
            (None, Some(w1), Some(wk)) => {
                let alpha = endpoint_alpha(k, &w1, &wk)?;
                if endpoints_consistent(k, &w1, &wk) {
                    out.push_str(&format!("{alpha} (consistent)\n"));
                } else {
                    out.push_str(&format!("{alpha} (inconsistent)\n"));
                    return Err(Failure::Invalid(format!(
                        "inconsistent endpoints: w1 + wk = {}, expected 2/k = {}",
                        w1 + wk,
                        Rational::new(2.into(), k.into())
                    )));
                }
            }
            _ => {
                return Err(Failure::Usage(
                    ErrorKind::ArgumentConflict,
                    "give either --mu, or both --w1 and --wk".to_string(),
                ))
            }
        },
        Command::Table {
            name,
            markdown,
            out_dir,
        } => match (name, out_dir) {
            (TableChoice::All, None) => {
                return Err(Failure::Usage(
                    ErrorKind::MissingRequiredArgument,
                    "'table all' requires --out-dir".to_string(),
                ))
            }
            (TableChoice::All, Some(dir)) => {
                for artifact in Artifact::ALL {
                    for path in artifact.write_to(&dir)? {
                        out.push_str(&format!("{}\n", path.display()));
                    }
                }
            }
            (TableChoice::One(artifact), Some(dir)) => {
                for path in artifact.write_to(&dir)? {
                    out.push_str(&format!("{}\n", path.display()));
                }
            }
            (TableChoice::One(artifact), None) => {
                let files = artifact.file_names();
                let wanted = if markdown { ".md" } else { ".csv" };
                let file = files
                    .iter()
                    .find(|f| f.ends_with(wanted))
                    .unwrap_or(&files[0]);
                out.push_str(&artifact.render(file)?);
            }
        },
        Command::Index {
            corpus,
            scheme,
            alpha,
            positivity,
        } => {
            let spec = scheme_from_flags(scheme, alpha, positivity)?;
            let doc = load_corpus(&corpus)?;
            let profiles = build_profiles(&doc.papers, &spec)?;
            let mut rows: Vec<_> = profiles.values().collect();
            rows.sort_by(|a, b| {
                b.weighted_h
                    .cmp(&a.weighted_h)
                    .then_with(|| a.author_id.cmp(&b.author_id))
            });
            for p in rows {
                out.push_str(&format!(
                    "{} {} {}\n",
                    p.author_id,
                    p.paper_count(),
                    p.weighted_h
                ));
            }
        }
        Command::Compare { k, alpha } => {
            out.push_str(&fig2_csv(&fig2_dataset(k, &alpha)?));
        }
    }
    Ok(())
}
