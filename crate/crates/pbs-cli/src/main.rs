//! `pbs` — command-line frontend for partial barycentric subdivision.
//!
//! Subcommands expose every operation of the library with stable file
//! formats: JSON as the canonical interchange (exact rationals as `"p/q"`
//! strings, face vectors as integer arrays) and CSV for flat tables. All
//! output is deterministic for fixed inputs.
//!
//! Exit codes: `0` success, `1` validation failure (bad input data,
//! out-of-range parameters, failed verification), `2` usage error.
//!
//! The environment variable `PBS_MAX_D` (default `8`) caps every `--d`
//! parameter and the facet size of input complexes, guarding against
//! accidental factorial blowups (the transform for `d` enumerates
//! `(d+1)!/l!` permutations).

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use pbs::complex::{HVector, SimplicialComplex};
use pbs::io;
use pbs::localh;
use pbs::perm::{self, Statistic};
use pbs::spectral;
use pbs::subdivision::partial_subdivision;
use pbs::transform::{self, TransformKind};
use pbs::verify::{self, Suite};

/// Default ceiling for `--d` and input facet sizes when `PBS_MAX_D` is
/// unset.
const DEFAULT_MAX_D: usize = 8;

#[derive(Parser)]
#[command(
    name = "pbs",
    version,
    about = "Exact combinatorics of partial barycentric subdivision",
    long_about = "Exact combinatorics of the l-th partial barycentric subdivision of \
                  simplicial complexes: subdivision construction, f-/h-vector transform \
                  matrices, permutation statistics, rational eigenstructure, local \
                  h-polynomials, and a self-verification suite."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Subdivide a complex and write the resulting complex (and optionally
    /// the label dictionary).
    Subdivide {
        /// Input complex JSON: {"ground": n, "facets": [[1,2],...]}.
        #[arg(long)]
        input: PathBuf,
        /// Subdivision level l >= 1.
        #[arg(long)]
        level: usize,
        /// Output path for the subdivided complex (stdout if omitted).
        #[arg(long)]
        output: Option<PathBuf>,
        /// Optional output path for the label dictionary
        /// ({"5": {"bary": [1,2]}, ...}).
        #[arg(long)]
        dict: Option<PathBuf>,
    },
    /// Print the f-vector of a complex as a JSON integer array.
    Fvector {
        /// Input complex JSON.
        #[arg(long)]
        input: PathBuf,
        /// Output path (stdout if omitted).
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Print the h-vector of a complex as a JSON integer array.
    Hvector {
        /// Input complex JSON.
        #[arg(long)]
        input: PathBuf,
        /// Output path (stdout if omitted).
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Print a transform matrix.
    Matrix {
        /// Face-vector length parameter (matrix size d+1).
        #[arg(long)]
        d: usize,
        /// Subdivision level, 1 <= level <= d.
        #[arg(long)]
        level: usize,
        /// Which transform: the f- or the h-matrix.
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Output format.
        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
        /// Output path (stdout if omitted).
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Print the certified eigendecomposition of a transform matrix.
    Eigen {
        /// Face-vector length parameter.
        #[arg(long)]
        d: usize,
        /// Subdivision level, 1 <= level <= d.
        #[arg(long)]
        level: usize,
        /// Which transform to decompose.
        #[arg(long, value_enum, default_value_t = KindArg::H)]
        kind: KindArg,
        /// Output format (only json carries nested rationals).
        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
        /// Output path (stdout if omitted).
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Print level-statistic distribution tables over the descending-prefix
    /// classes.
    Stats {
        /// Class size: distributions over S_d^l.
        #[arg(long)]
        d: usize,
        /// Single level to tabulate; omit for the full table
        /// (columns l = d-1 down to 2).
        #[arg(long)]
        level: Option<usize>,
        /// Which statistic to count.
        #[arg(long, value_enum)]
        statistic: StatArg,
        /// Output format.
        #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
        format: FormatArg,
        /// Output path (stdout if omitted).
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Print the local h-polynomial coefficients of the subdivided simplex.
    Localh {
        /// Number of vertices of the simplex.
        #[arg(long)]
        d: usize,
        /// Subdivision level l >= 1.
        #[arg(long)]
        level: usize,
        /// Output path (stdout if omitted).
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Iterate the h-transform and print the whole trajectory.
    Iterate {
        /// Start from the h-vector of the (d-1)-simplex (1, 0, ..., 0).
        /// Mutually exclusive with --input.
        #[arg(long)]
        d: Option<usize>,
        /// Start from an h-vector read from a JSON integer array.
        /// Mutually exclusive with --d.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Subdivision level, 1 <= level <= d.
        #[arg(long)]
        level: usize,
        /// Number of subdivision steps to apply.
        #[arg(long)]
        steps: usize,
        /// Output path (stdout if omitted).
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run a verification suite and print one line per check plus the
    /// errata section.
    Verify {
        /// Which suite: sums, symmetry, monotonic, similarity, endtoend, or
        /// all.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Output path (stdout if omitted).
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    F,
    H,
}

impl From<KindArg> for TransformKind {
    fn from(kind: KindArg) -> Self {
        match kind {
            KindArg::F => TransformKind::F,
            KindArg::H => TransformKind::H,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StatArg {
    Descent,
    Excedance,
}

impl From<StatArg> for Statistic {
    fn from(stat: StatArg) -> Self {
        match stat {
            StatArg::Descent => Statistic::Descent,
            StatArg::Excedance => Statistic::Excedance,
        }
    }
}

/// A mistake in how the tool was invoked (as opposed to bad input data);
/// mapped to exit code 2.
#[derive(Debug)]
struct UsageError(String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage(message: impl Into<String>) -> anyhow::Error {
    anyhow::Error::new(UsageError(message.into()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<UsageError>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::FAILURE
            }
        }
    }
}

/// The `PBS_MAX_D` ceiling (default 8).
fn max_d() -> anyhow::Result<usize> {
    match std::env::var("PBS_MAX_D") {
        Ok(raw) => raw
            .trim()
            .parse::<usize>()
            .map_err(|_| anyhow!("PBS_MAX_D must be a nonnegative integer, got {raw:?}")),
        Err(_) => Ok(DEFAULT_MAX_D),
    }
}

fn ensure_d_within_cap(d: usize) -> anyhow::Result<()> {
    let cap = max_d()?;
    if d > cap {
        bail!("d = {d} exceeds the enumeration cap PBS_MAX_D = {cap}");
    }
    Ok(())
}

fn read_complex(path: &Path) -> anyhow::Result<SimplicialComplex> {
    let raw = fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    let complex = io::complex_from_json_str(&raw)
        .with_context(|| format!("parsing {}", path.display()))?;
    ensure_d_within_cap(complex.max_facet_size())?;
    Ok(complex)
}

fn emit(output: Option<&Path>, content: &str) -> anyhow::Result<()> {
    match output {
        Some(path) => fs::write(path, content)
            .with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn run(command: Command) -> anyhow::Result<()> {
    match command {
        Command::Subdivide { input, level, output, dict } => {
            let complex = read_complex(&input)?;
            let sd = partial_subdivision(&complex, level)?;
            emit(output.as_deref(), &io::complex_to_json_string(sd.complex()))?;
            if let Some(dict_path) = dict {
                emit(Some(&dict_path), &io::dictionary_to_json_string(sd.dictionary()))?;
            }
            Ok(())
        }
        Command::Fvector { input, output } => {
            let complex = read_complex(&input)?;
            emit(output.as_deref(), &io::integer_vector_to_json_line(complex.f_vector().entries()))
        }
        Command::Hvector { input, output } => {
            let complex = read_complex(&input)?;
            emit(output.as_deref(), &io::integer_vector_to_json_line(complex.h_vector().entries()))
        }
        Command::Matrix { d, level, kind, format, output } => {
            ensure_d_within_cap(d)?;
            let matrix = match TransformKind::from(kind) {
                TransformKind::F => transform::f_transform(d, level)?,
                TransformKind::H => transform::h_transform(d, level)?,
            };
            let rendered = match format {
                FormatArg::Json => io::to_pretty_string(&io::matrix_to_json(&matrix)),
                FormatArg::Csv => io::matrix_to_csv(&matrix),
            };
            emit(output.as_deref(), &rendered)
        }
        Command::Eigen { d, level, kind, format, output } => {
            ensure_d_within_cap(d)?;
            if format == FormatArg::Csv {
                return Err(usage(
                    "eigen output is nested (eigenvalues with vectors of rationals); \
                     only --format json is supported",
                ));
            }
            let decomposition = spectral::eigen_decompose(d, level, kind.into())?;
            emit(output.as_deref(), &io::to_pretty_string(&io::eigen_to_json(&decomposition)))
        }
        Command::Stats { d, level, statistic, format, output } => {
            ensure_d_within_cap(d)?;
            let stat = Statistic::from(statistic);
            let columns: Vec<(usize, Vec<u64>)> = match level {
                Some(l) => vec![(l, perm::distribution(d, l, stat)?)],
                None => perm::distribution_table(d, stat)?,
            };
            let rendered = match format {
                FormatArg::Csv => stats_csv(&columns)?,
                FormatArg::Json => {
                    let json_columns: Vec<serde_json::Value> = columns
                        .iter()
                        .map(|(l, counts)| json!({ "level": l, "counts": counts }))
                        .collect();
                    io::to_pretty_string(&json!({
                        "d": d,
                        "statistic": stat.to_string(),
                        "columns": json_columns,
                    }))
                }
            };
            emit(output.as_deref(), &rendered)
        }
        Command::Localh { d, level, output } => {
            ensure_d_within_cap(d)?;
            let polynomial = localh::local_h(d, level)?;
            emit(output.as_deref(), &io::integer_vector_to_json_line(polynomial.coefficients()))
        }
        Command::Iterate { d, input, level, steps, output } => {
            let start = match (d, input) {
                (Some(_), Some(_)) => {
                    return Err(usage("--d and --input are mutually exclusive"));
                }
                (None, None) => {
                    return Err(usage("one of --d or --input is required"));
                }
                (Some(d), None) => {
                    ensure_d_within_cap(d)?;
                    let mut entries = vec![pbs::rational::Integer::from(0); d + 1];
                    entries[0] = pbs::rational::Integer::from(1);
                    HVector::new(entries)?
                }
                (None, Some(path)) => {
                    let raw = fs::read_to_string(&path)
                        .with_context(|| format!("reading {}", path.display()))?;
                    let entries = io::integer_vector_from_json_str(&raw)
                        .with_context(|| format!("parsing {}", path.display()))?;
                    let h = HVector::new(entries)?;
                    ensure_d_within_cap(h.top_size())?;
                    h
                }
            };
            let trajectory = transform::iterate_h(&start, level, steps)?;
            let rendered =
                io::integer_vectors_to_json_block(trajectory.iter().map(|h| h.entries()));
            emit(output.as_deref(), &rendered)
        }
        Command::Verify { suite, output } => {
            let suite: Suite = suite.parse().map_err(|e| usage(format!("{e}")))?;
            let report = verify::run_suite(suite, max_d()?)?;
            emit(output.as_deref(), &render_verify_report(&report))?;
            if report.passed() {
                Ok(())
            } else {
                bail!("verification failed");
            }
        }
    }
}

/// CSV rendering of distribution columns: header `i,l=4,l=3,...`, one row
/// per statistic value.
fn stats_csv(columns: &[(usize, Vec<u64>)]) -> anyhow::Result<String> {
    let rows = columns.first().map(|(_, counts)| counts.len()).unwrap_or(0);
    let mut writer = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["i".to_string()];
    header.extend(columns.iter().map(|(l, _)| format!("l={l}")));
    writer.write_record(&header)?;
    for i in 0..rows {
        let mut record = vec![i.to_string()];
        record.extend(columns.iter().map(|(_, counts)| counts[i].to_string()));
        writer.write_record(&record)?;
    }
    let bytes = writer.into_inner().context("flushing CSV output")?;
    Ok(String::from_utf8(bytes).expect("CSV output is UTF-8"))
}

fn render_verify_report(report: &verify::VerifyReport) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "verification suite: {} (d up to {})\n\n",
        report.suite, report.max_d
    ));
    for check in &report.checks {
        let status = if check.passed { "PASS" } else { "FAIL" };
        out.push_str(&format!("[{status}] {} — {}\n", check.name, check.detail));
    }
    let passed = report.checks.iter().filter(|c| c.passed).count();
    out.push_str(&format!("\n{passed}/{} checks passed\n", report.checks.len()));
    out.push_str("\nerrata (documented print discrepancies, certified against witnesses):\n");
    for erratum in &report.errata {
        out.push_str(&format!(
            "  {}: printed {}, computed {}\n",
            erratum.location, erratum.printed, erratum.computed
        ));
        for witness in &erratum.witnesses {
            let status = if witness.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!(
                "    [{status}] witness: {} — {}\n",
                witness.name, witness.detail
            ));
        }
    }
    out
}
