//! Command-line front end. Exit codes: 0 success, 1 counterexample or
//! internal failure, 2 usage or parse error.

use std::ffi::OsString;
use std::io::{self, BufRead, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::classify::{classify, ClassificationReport};
use crate::error::Error;
use crate::ideal::{dual, parse_ideal, RelativeIdeal};
use crate::search::{bg_bounds, enumerate_by_genus, survey_questions, SurveyRow};
use crate::semigroup::{parse_int_list, NumericalSemigroup};
use crate::verify::{verify, verify_all, TheoremId};

/// Default ceiling on `--genus`, overridable through `SGFORGE_MAX_GENUS`.
pub const DEFAULT_MAX_GENUS: u32 = 18;

#[derive(Debug, Parser)]
#[command(
    name = "sgforge",
    version,
    about = "Numerical semigroup ring classifier and theorem checker"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Core invariants of one semigroup.
    Invariants { gens: String },
    /// Full classification report, for one semigroup or a batch file.
    Classify {
        #[arg(required_unless_present = "file", conflicts_with = "file")]
        gens: Option<String>,
        /// One generator list per line; blank lines and `#` comments are skipped.
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// Dual `K - I` of an ideal and its isomorphism shift.
    Dual {
        gens: String,
        /// Ideal generators, either `a,b,..` or `a,b,..@H`.
        #[arg(long)]
        ideal: String,
    },
    /// Certified interval for the Gorenstein colength.
    Bg {
        gens: String,
        #[arg(long)]
        bound: Option<u32>,
    },
    /// Every semigroup of genus at most G, one report per line.
    Enumerate {
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        filter: Option<Filter>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run theorem checks over the genus tree.
    Verify {
        #[arg(long, required_unless_present = "all", conflicts_with = "all")]
        theorem: Option<String>,
        #[arg(long)]
        all: bool,
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Trace colength, minimal self-dual colength and bg interval per semigroup.
    Survey {
        #[arg(long)]
        genus: u32,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Filter {
    Uesy,
    Selfdual,
    Almost,
    Nearly,
    Minmult,
    Symmetric,
}

impl Filter {
    fn matches(self, r: &ClassificationReport) -> bool {
        match self {
            Filter::Uesy => r.uesy.is_some(),
            Filter::Selfdual => r.self_dual_max,
            Filter::Almost => r.almost_symmetric,
            Filter::Nearly => r.nearly_gorenstein,
            Filter::Minmult => r.min_mult,
            Filter::Symmetric => r.symmetric,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

/// Column order of `enumerate --format csv`. List-valued fields are
/// space-separated; an absent UESY core is an empty field.
pub const REPORT_CSV_HEADER: [&str; 17] = [
    "gens",
    "e",
    "edim",
    "type",
    "genus",
    "frobenius",
    "conductor",
    "n_of_h",
    "symmetric",
    "uesy_core",
    "self_dual_max",
    "almost_symmetric",
    "nearly_gorenstein",
    "min_mult",
    "rho",
    "endo_gens",
    "endo_type",
];

/// Column order of `survey --format csv`.
pub const SURVEY_CSV_HEADER: [&str; 7] = [
    "gens",
    "trace_colength",
    "sd_min",
    "bg_lower",
    "bg_upper",
    "violation",
    "violated",
];

fn join(v: &[i32]) -> String {
    v.iter().map(i32::to_string).collect::<Vec<_>>().join(" ")
}

fn report_record(r: &ClassificationReport) -> Vec<String> {
    let c = &r.core;
    vec![
        join(&r.gens),
        c.multiplicity.to_string(),
        c.embedding_dim.to_string(),
        c.semigroup_type.to_string(),
        c.genus.to_string(),
        c.frobenius.to_string(),
        c.conductor.to_string(),
        c.n_of_h.to_string(),
        r.symmetric.to_string(),
        r.uesy
            .as_ref()
            .map(|u| join(&u.core_generators))
            .unwrap_or_default(),
        r.self_dual_max.to_string(),
        r.almost_symmetric.to_string(),
        r.nearly_gorenstein.to_string(),
        r.min_mult.to_string(),
        r.rho.to_string(),
        join(&r.endo_gens),
        r.endo_type.to_string(),
    ]
}

fn survey_record(r: &SurveyRow) -> Vec<String> {
    vec![
        join(&r.gens),
        r.trace_colength.to_string(),
        r.sd_min.to_string(),
        r.bg_lower.to_string(),
        r.bg_upper.to_string(),
        r.violation.to_string(),
        r.violated.join("; "),
    ]
}

#[derive(Serialize)]
struct DualOutput {
    ideal: String,
    ideal_generators: Vec<i32>,
    dual: String,
    dual_generators: Vec<i32>,
    /// `dual = ideal + shift` when the two are isomorphic.
    shift: Option<i32>,
    self_dual: bool,
}

enum Failure {
    Usage(String),
    Counterexample,
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InternalDisagreement(_) | Error::TheoremViolation(_) => {
                Failure::Internal(e.to_string())
            }
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Internal(e.to_string())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Internal(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Internal(e.to_string())
    }
}

fn json_line(out: &mut dyn Write, value: &impl Serialize) -> Result<(), Failure> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

type Sink<'a, T> = Box<dyn FnMut(&T) -> Result<(), Failure> + 'a>;

/// Row writer for streamed output in either format.
fn sink<'a, T: Serialize + 'a>(
    out: &'a mut dyn Write,
    format: Format,
    header: &[&str],
    record: fn(&T) -> Vec<String>,
) -> Result<Sink<'a, T>, Failure> {
    Ok(match format {
        Format::Json => Box::new(move |row| json_line(out, row)),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(header)?;
            Box::new(move |row| {
                w.write_record(record(row))?;
                w.flush()?;
                Ok(())
            })
        }
    })
}

fn parse_gens(s: &str) -> Result<NumericalSemigroup, Failure> {
    s.parse().map_err(Failure::from)
}

fn check_genus(genus: u32, max_genus: u32) -> Result<(), Failure> {
    if genus > max_genus {
        return Err(Failure::Usage(format!(
            "genus {genus} exceeds the ceiling {max_genus} (set SGFORGE_MAX_GENUS to raise it)"
        )));
    }
    Ok(())
}

fn read_batch(path: &PathBuf) -> Result<Vec<NumericalSemigroup>, Failure> {
    let file = std::fs::File::open(path)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let mut semigroups = Vec::new();
    for (i, line) in io::BufReader::new(file).lines().enumerate() {
        let line = line?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let h = line
            .parse()
            .map_err(|e: Error| Failure::Usage(format!("{}:{}: {e}", path.display(), i + 1)))?;
        semigroups.push(h);
    }
    Ok(semigroups)
}

fn execute(cli: Cli, max_genus: u32, out: &mut dyn Write) -> Result<(), Failure> {
    match cli.command {
        Command::Invariants { gens } => json_line(out, &parse_gens(&gens)?.core_invariants())?,
        Command::Classify {
            gens: Some(gens), ..
        } => json_line(out, &classify(&parse_gens(&gens)?)?)?,
        Command::Classify { file, .. } => {
            let batch = read_batch(file.as_ref().expect("clap requires gens or --file"))?;
            let reports: Vec<_> = batch.par_iter().map(classify).collect();
            for r in reports {
                json_line(out, &r?)?;
            }
        }
        Command::Dual { gens, ideal } => {
            let h = parse_gens(&gens)?;
            let e = if ideal.contains('@') {
                let (ambient, e) = parse_ideal(&ideal)?;
                if ambient != h {
                    return Err(Failure::Usage(format!(
                        "ideal is over {ambient} but the semigroup is {h}"
                    )));
                }
                e
            } else {
                RelativeIdeal::from_generators(&h, &parse_int_list(&ideal)?)?
            };
            let d = dual(&h, &e);
            let shift = e.is_isomorphic(&d);
            json_line(
                out,
                &DualOutput {
                    ideal: e.to_string(),
                    ideal_generators: e.minimal_generators(&h),
                    dual: d.to_string(),
                    dual_generators: d.minimal_generators(&h),
                    shift,
                    self_dual: shift.is_some(),
                },
            )?;
        }
        Command::Bg { gens, bound } => json_line(out, &bg_bounds(&parse_gens(&gens)?, bound))?,
        Command::Enumerate {
            genus,
            filter,
            format,
        } => {
            check_genus(genus, max_genus)?;
            let mut emit = sink(out, format, &REPORT_CSV_HEADER, report_record)?;
            let mut failure = None;
            enumerate_by_genus(genus, |node| {
                if failure.is_some() {
                    return;
                }
                let written = classify(&node.semigroup)
                    .map_err(Failure::from)
                    .and_then(|r| {
                        if filter.is_none_or(|f| f.matches(&r)) {
                            emit(&r)
                        } else {
                            Ok(())
                        }
                    });
                failure = written.err();
            });
            if let Some(f) = failure {
                return Err(f);
            }
        }
        Command::Verify {
            theorem,
            all,
            genus,
            jobs,
        } => {
            check_genus(genus, max_genus)?;
            let outcomes = if all {
                verify_all(genus, jobs)?
            } else {
                let id: TheoremId = theorem.expect("clap requires --theorem or --all").parse()?;
                vec![verify(id, genus, jobs)?]
            };
            for o in &outcomes {
                json_line(out, o)?;
            }
            if outcomes.iter().any(|o| !o.pass) {
                return Err(Failure::Counterexample);
            }
        }
        Command::Survey { genus, format } => {
            check_genus(genus, max_genus)?;
            let mut emit = sink(out, format, &SURVEY_CSV_HEADER, survey_record)?;
            let mut failure = None;
            enumerate_by_genus(genus, |node| {
                if failure.is_none() {
                    failure = emit(&survey_questions(&node.semigroup)).err();
                }
            });
            if let Some(f) = failure {
                return Err(f);
            }
        }
    }
    Ok(())
}

/// Runs the CLI on `args` (including the program name).
pub fn run_with<I, T>(args: I, max_genus: u32, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    let result = execute(cli, max_genus, out).and_then(|()| out.flush().map_err(Failure::from));
    match result {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Counterexample) => {
            let _ = writeln!(err, "counterexample found");
            1
        }
        Err(Failure::Internal(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}

/// Runs the CLI on the process arguments with stdout and stderr.
pub fn run() -> i32 {
    let max_genus = std::env::var("SGFORGE_MAX_GENUS")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_MAX_GENUS);
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    run_with(std::env::args_os(), max_genus, &mut out, &mut io::stderr())
}
