//! `harmsum` command line.
//!
//! Exit status is 0 on success, 1 when a verification finds a mismatch and
//! 2 for usage, parse or input errors.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use harmsum_core::{closed_form, verify_closed_form, ShiftSet, Weight};

use crate::corpus::{corpus_check, load_corpus, Outcome};
use crate::error::Error;
use crate::render::{Format, RenderedIdentity};
use crate::{fuzz, BUNDLED_CORPUS};

#[derive(Debug, Parser)]
#[command(name = "harmsum", version, about = "Closed forms for sums of harmonic numbers over products of reciprocals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the closed form of a sum.
    ClosedForm {
        #[command(flatten)]
        sum: SumArgs,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Check a closed form against direct summation.
    Verify {
        #[command(flatten)]
        sum: SumArgs,
        /// First n checked (default: n_min).
        #[arg(long, allow_hyphen_values = true)]
        n_from: Option<i64>,
        /// Last n checked (default: n_min + 40).
        #[arg(long, allow_hyphen_values = true)]
        n_to: Option<i64>,
    },
    /// Recompute every identity in a corpus file.
    Corpus {
        /// Corpus JSON file (default: the bundled catalog).
        #[arg(long)]
        file: Option<std::path::PathBuf>,
    },
    /// Verify random shift sets against direct summation.
    Fuzz {
        #[arg(long, default_value_t = 500)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Args)]
struct SumArgs {
    /// Comma-separated distinct integer shifts p_i of the factors 1/(k+p_i).
    #[arg(long, allow_hyphen_values = true, value_delimiter = ',', required = true)]
    shifts: Vec<i64>,
    #[arg(long, value_enum, default_value_t = WeightArg::Hk)]
    weight: WeightArg,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum WeightArg {
    /// H_k
    Hk,
    /// H_{n-k}
    Hnmk,
}

impl SumArgs {
    fn shift_set(&self) -> Result<ShiftSet, Error> {
        let weight = match self.weight {
            WeightArg::Hk => Weight::Hk,
            WeightArg::Hnmk => Weight::HnMinusK,
        };
        Ok(ShiftSet::new(self.shifts.clone(), weight)?)
    }
}

const USAGE: u8 = 2;
const MISMATCH: u8 = 1;

/// Runs the command line with explicit output streams and returns the exit
/// status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { USAGE } else { 0 };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "harmsum: {e}");
            USAGE
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<u8, Error> {
    let io = |e: std::io::Error| Error::Io {
        path: "<stdout>".into(),
        source: e,
    };
    match command {
        Command::ClosedForm { sum, format } => {
            let cf = closed_form(&sum.shift_set()?)?;
            let identity = RenderedIdentity::of(&cf, format);
            match format {
                Format::Json => writeln!(out, "{identity}"),
                _ => writeln!(out, "{identity}    (n >= {})", cf.n_min),
            }
            .map_err(io)?;
            Ok(0)
        }
        Command::Verify { sum, n_from, n_to } => {
            let cf = closed_form(&sum.shift_set()?)?;
            let from = n_from.unwrap_or(cf.n_min as i64);
            let to = n_to.unwrap_or(cf.n_min as i64 + fuzz::RANGE_WIDTH as i64);
            let report = verify_closed_form(&cf, from, to)?;
            match &report.first_failure {
                None if report.passed() => {
                    writeln!(out, "pass (checked={})", report.checked).map_err(io)?;
                    Ok(0)
                }
                None => {
                    writeln!(out, "fail (checked={})", report.checked).map_err(io)?;
                    Ok(MISMATCH)
                }
                Some(m) => {
                    writeln!(
                        out,
                        "fail at n={}: expected {}, got {} (checked={})",
                        m.n, m.expected, m.got, report.checked
                    )
                    .map_err(io)?;
                    Ok(MISMATCH)
                }
            }
        }
        Command::Corpus { file } => {
            let text = match &file {
                Some(path) => std::fs::read_to_string(path).map_err(|source| Error::Io {
                    path: path.display().to_string(),
                    source,
                })?,
                None => BUNDLED_CORPUS.to_owned(),
            };
            let results = corpus_check(&load_corpus(&text)?);
            let matched = results.iter().filter(|r| r.outcome == Outcome::Match).count();
            for r in results.iter().filter(|r| r.outcome == Outcome::Mismatch) {
                let _ = writeln!(err, "{}: mismatch: {}", r.id, r.detail.as_deref().unwrap_or(""));
            }
            writeln!(out, "{matched}/{} match", results.len()).map_err(io)?;
            Ok(if matched == results.len() { 0 } else { MISMATCH })
        }
        Command::Fuzz { count, seed } => {
            let summary = fuzz::run(seed, count);
            for case in summary.failures() {
                let _ = writeln!(err, "failed: {:?} {:?}: {:?}", case.set.shifts(), case.set.weight(), case.report);
            }
            writeln!(out, "seed={seed}: {}/{} pass", summary.passed(), count).map_err(io)?;
            Ok(if summary.passed() == count { 0 } else { MISMATCH })
        }
    }
}
