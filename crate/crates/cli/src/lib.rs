//! `pell-lab`: sequence terms, identity and matrix verification, the binary
//! matrix census and the gcd and Sidon checks, from the command line.
//!
//! Exit status is 0 when every check passes, 1 when a check fails and 2 for
//! usage errors.

pub mod checks;
pub mod report;

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use pell_core::sequences::{self, SequenceId};
use pell_core::{classifier, numtheory};

use report::{ClassifyReport, GcdReport, Report, SeqReport, SeqRow, VerifyReport};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

const DEFAULT_VERIFY_N_MAX: i64 = 200;
const DEFAULT_VERIFY_M_MAX: i64 = 100;
const DEFAULT_SIDON_N_MAX: i64 = 60;
const DEFAULT_GCD_N_MAX: i64 = 81;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Human,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Scope {
    Identities,
    Matrices,
    Numtheory,
    All,
}

impl Scope {
    fn name(self) -> &'static str {
        match self {
            Scope::Identities => "identities",
            Scope::Matrices => "matrices",
            Scope::Numtheory => "numtheory",
            Scope::All => "all",
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "pell-lab", version, about = "Exact checks for the Pell family of recurrences")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    pub format: Format,

    /// Upper bound for one-parameter ranges.
    #[arg(long, global = true)]
    pub n_max: Option<i64>,

    /// Upper bound for both parameters of two-parameter identities
    /// (defaults to the smaller of `--n-max` and 100).
    #[arg(long, global = true)]
    pub m_max: Option<i64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print terms `lo..=hi` of a sequence (E, Q, QHAT, B, R, A, S, J).
    Seq {
        id: String,
        #[arg(allow_negative_numbers = true)]
        lo: i64,
        #[arg(allow_negative_numbers = true)]
        hi: i64,
    },
    /// Run the identity, matrix and number-theory suites.
    Verify {
        #[arg(value_enum)]
        scope: Scope,
        /// Evaluate identities with every (-1)^n replaced by (-1)^(n+1).
        /// Identities carrying a sign factor must then fail.
        #[arg(long)]
        flip_sign: bool,
    },
    /// Census of all 512 binary 3x3 matrices.
    Classify,
    /// Distinct pairwise sums of r(1..=n_max).
    Sidon {
        #[arg(id = "limit", value_name = "N_MAX", allow_negative_numbers = true)]
        n_max: Option<i64>,
    },
    /// gcd(r(n), r(n-1)) against its closed form, and the reduction rows.
    Gcd {
        #[arg(id = "limit", value_name = "N_MAX", allow_negative_numbers = true)]
        n_max: Option<i64>,
    },
}

/// Outcome of a command: a rendered document and an exit status.
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

fn usage(msg: impl std::fmt::Display) -> Output {
    Output { stdout: String::new(), stderr: format!("error: {msg}\n"), code: EXIT_USAGE }
}

fn render<R: Report>(report: &R, format: Format) -> Output {
    let stdout = match format {
        Format::Human => report.human(),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(report.csv_header()).expect("in-memory write");
            for row in report.csv_rows() {
                w.write_record(row).expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
        }
    };
    let code = if report.passed() { EXIT_PASS } else { EXIT_CHECK_FAILED };
    Output { stdout, stderr: String::new(), code }
}

pub fn execute(cli: &Cli) -> Output {
    match &cli.command {
        Command::Seq { id, lo, hi } => {
            let id: SequenceId = match id.parse() {
                Ok(id) => id,
                Err(e) => return usage(e),
            };
            let values = match sequences::terms(id, *lo, *hi) {
                Ok(v) => v,
                Err(e) => return usage(e),
            };
            let rows = (*lo..=*hi).zip(values).map(|(index, value)| SeqRow { index, value }).collect();
            render(&SeqReport { sequence: id.tag().into(), lo: *lo, hi: *hi, rows }, cli.format)
        }
        Command::Verify { scope, flip_sign } => {
            let n_max = cli.n_max.unwrap_or(DEFAULT_VERIFY_N_MAX);
            let m_max = cli.m_max.unwrap_or(n_max.min(DEFAULT_VERIFY_M_MAX));
            if n_max < 2 {
                return usage(format!("--n-max must be at least 2, got {n_max}"));
            }
            if m_max < 1 {
                return usage(format!("--m-max must be at least 1, got {m_max}"));
            }
            let wants = |s: Scope| *scope == s || *scope == Scope::All;
            let ids = wants(Scope::Identities).then(|| {
                if *flip_sign {
                    pell_core::identities::check_catalog_sign_flipped(n_max, m_max)
                } else {
                    checks::identities(n_max, m_max)
                }
            });
            let mats = match wants(Scope::Matrices).then(|| checks::matrices(n_max)).transpose() {
                Ok(v) => v,
                Err(e) => return usage(e),
            };
            let nt = match wants(Scope::Numtheory).then(|| checks::numtheory(n_max)).transpose() {
                Ok(v) => v,
                Err(e) => return usage(e),
            };
            render(&VerifyReport::new(scope.name(), n_max, m_max, ids, mats, nt), cli.format)
        }
        Command::Classify => {
            let census = classifier::classify();
            let violations = census.validate();
            render(&ClassifyReport { census, violations }, cli.format)
        }
        Command::Sidon { n_max } => {
            let n_max = n_max.or(cli.n_max).unwrap_or(DEFAULT_SIDON_N_MAX);
            match numtheory::sidon_check(n_max) {
                Ok(report) => render(&report, cli.format),
                Err(e) => usage(e),
            }
        }
        Command::Gcd { n_max } => {
            let n_max = n_max.or(cli.n_max).unwrap_or(DEFAULT_GCD_N_MAX);
            if n_max < 3 {
                return usage(format!("gcd needs n_max of at least 3, got {n_max}"));
            }
            match gcd_report(n_max) {
                Ok(report) => render(&report, cli.format),
                Err(e) => usage(e),
            }
        }
    }
}

fn gcd_report(n_max: i64) -> pell_core::Result<GcdReport> {
    let rows = numtheory::gcd_table(n_max)?;
    let mut reduction_checked = 0;
    let mut reduction_mismatches = Vec::new();
    for n in (2..=n_max).step_by(2) {
        for row in numtheory::gcd_reduction_rows(n, &numtheory::even_ks(n))? {
            reduction_checked += 1;
            if !row.agrees() {
                reduction_mismatches.push(row);
            }
        }
    }
    Ok(GcdReport { n_max, rows, reduction_checked, reduction_mismatches })
}

/// Parses `args` (program name first), runs the command and writes its
/// output. Returns the exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let out = execute(&cli);
    // A closed stdout (e.g. piped into `head`) is not an error.
    let _ = std::io::stdout().lock().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().lock().write_all(out.stderr.as_bytes());
    out.code
}
