//! Command-line front end.
//!
//! Exit status is 0 on success, 1 on a usage error and 2 when a numerical
//! stage fails. Floats in CSV output are written with 17 significant digits
//! (`{:.16e}`), so output is byte-stable for a fixed invocation.

use std::f64::consts::PI;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::geometry::{ConeFamily, TableRow, VolumeResult, DEFAULT_VOLUME_TOL};
use crate::holonomy::{run_identity_sweep, AuditReport, SweepConfig};
use crate::rmpoly::build_rm;
use crate::Error;

pub const EXIT_USAGE: u8 = 1;
pub const EXIT_NUMERICAL: u8 = 2;

/// Environment variable overriding the default `--tol`.
pub const TOL_ENV: &str = "CONEVOL_TOL";

#[derive(Debug, Parser)]
#[command(name = "conevol", version, about = "Hyperbolic cone-manifold volumes of the two-bridge knots C(2n,3)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the polynomial P_2n(x, M) term by term.
    Poly {
        #[command(flatten)]
        knot: KnotArg,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Volume of the cone-manifold with cone angle ALPHA.
    Volume {
        #[command(flatten)]
        knot: KnotArg,
        /// Cone angle in radians, in [0, pi).
        #[arg(long, default_value_t = 0.0, value_parser = parse_alpha, allow_negative_numbers = true)]
        alpha: f64,
        #[command(flatten)]
        tol: TolArg,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Volume of the k-fold cyclic covering branched over the knot.
    Covering {
        #[command(flatten)]
        knot: KnotArg,
        /// Covering degree, at least 3.
        #[arg(long, value_parser = clap::value_parser!(u32).range(3..))]
        k: u32,
        #[command(flatten)]
        tol: TolArg,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Tabulate root, log|L| and volume from alpha = 0 to the Euclidean angle.
    Table {
        #[command(flatten)]
        knot: KnotArg,
        /// Number of rows.
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(10..=1_000_000))]
        grid_steps: u64,
        #[command(flatten)]
        tol: TolArg,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Check the holonomy identities on a seeded sweep.
    Verify {
        #[command(flatten)]
        knot: KnotArg,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Debug, Args)]
pub struct KnotArg {
    /// Twist parameter of C(2n,3); any nonzero integer.
    #[arg(long, value_parser = parse_n, allow_negative_numbers = true)]
    pub n: i64,
}

#[derive(Debug, Args)]
pub struct TolArg {
    /// Absolute quadrature tolerance, in [1e-14, 1e-2].
    #[arg(long, env = TOL_ENV, default_value_t = DEFAULT_VOLUME_TOL, value_parser = parse_tol)]
    pub tol: f64,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

fn parse_n(s: &str) -> Result<i64, String> {
    let n: i64 = s.parse().map_err(|e| format!("{e}"))?;
    if n == 0 {
        return Err(Error::ZeroTwist.to_string());
    }
    Ok(n)
}

fn parse_tol(s: &str) -> Result<f64, String> {
    let t: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if (1e-14..=1e-2).contains(&t) {
        Ok(t)
    } else {
        Err(format!("tolerance {t} is outside [1e-14, 1e-2]"))
    }
}

fn parse_alpha(s: &str) -> Result<f64, String> {
    let a: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if (0.0..PI).contains(&a) {
        Ok(a)
    } else {
        Err(format!("cone angle {a} is outside [0, pi)"))
    }
}

/// One term of a polynomial dump.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct PolyTerm {
    pub x_exp: u32,
    pub m_exp: i32,
    pub coeff: i128,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct PolyDump {
    pub n: i64,
    pub degree_x: u32,
    pub terms: Vec<PolyTerm>,
}

/// `{:.16e}`: 17 significant digits with a lowercase exponent.
pub fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Numerical(String),
}

/// Exit status for a library error: bad input is a usage error, anything
/// else a numerical failure.
pub fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::ZeroTwist | Error::InvalidArgument(_) => EXIT_USAGE,
        _ => EXIT_NUMERICAL,
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if exit_code_for(&e) == EXIT_USAGE {
            Failure::Usage(e.to_string())
        } else {
            Failure::Numerical(e.to_string())
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(format!("cannot write output: {e}"))
    }
}

/// Parses the process arguments and runs the command.
pub fn run() -> ExitCode {
    run_from(std::env::args_os())
}

pub fn run_from<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match execute(&cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Numerical(msg)) => {
            eprintln!("numerical failure: {msg}");
            ExitCode::from(EXIT_NUMERICAL)
        }
    }
}

fn execute(cmd: &Command) -> Result<(), Failure> {
    match cmd {
        Command::Poly { knot, output } => {
            let dump = poly_dump(knot.n)?;
            let text = match output.format {
                Format::Csv => poly_csv(&dump),
                Format::Json => to_json(&dump)?,
            };
            emit(output, &text)
        }
        Command::Volume {
            knot,
            alpha,
            tol,
            output,
        } => {
            let r = ConeFamily::new(knot.n)?.cone_volume(*alpha, tol.tol)?;
            emit(output, &render_volume(&r, output.format)?)
        }
        Command::Covering {
            knot,
            k,
            tol,
            output,
        } => {
            let r = ConeFamily::new(knot.n)?.covering_volume(*k, tol.tol)?;
            emit(output, &render_volume(&r, output.format)?)
        }
        Command::Table {
            knot,
            grid_steps,
            tol,
            output,
        } => {
            let steps = usize::try_from(*grid_steps).map_err(|e| Failure::Usage(e.to_string()))?;
            let rows = ConeFamily::new(knot.n)?.table(steps, tol.tol)?;
            let text = match output.format {
                Format::Csv => table_csv(&rows),
                Format::Json => to_json(&rows)?,
            };
            emit(output, &text)
        }
        Command::Verify { knot, output } => {
            let report = run_identity_sweep(knot.n, &SweepConfig::default())?;
            let text = match output.format {
                Format::Csv => verify_csv(&report),
                Format::Json => to_json(&report)?,
            };
            emit(output, &text)?;
            if report.passed() {
                Ok(())
            } else {
                let failed: Vec<&str> = report
                    .checks
                    .iter()
                    .filter(|c| !c.passed())
                    .map(|c| c.name.as_str())
                    .collect();
                Err(Failure::Numerical(format!("identities failed: {}", failed.join(", "))))
            }
        }
    }
}

fn emit(output: &OutputArgs, text: &str) -> Result<(), Failure> {
    match &output.out {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path)?);
            w.write_all(text.as_bytes())?;
            w.flush()?;
        }
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
        }
    }
    Ok(())
}

fn to_json<T: Serialize>(v: &T) -> Result<String, Failure> {
    serde_json::to_string_pretty(v)
        .map(|mut s| {
            s.push('\n');
            s
        })
        .map_err(|e| Failure::Numerical(e.to_string()))
}

pub fn poly_dump(n: i64) -> Result<PolyDump, Error> {
    let rm = build_rm(n)?;
    let terms = rm
        .poly
        .terms_desc()
        .into_iter()
        .map(|(xe, me, c)| {
            i128::try_from(c)
                .map(|coeff| PolyTerm {
                    x_exp: xe,
                    m_exp: me,
                    coeff,
                })
                .map_err(|_| Error::InvalidArgument(format!("coefficients of P for n = {n} exceed 128 bits")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(PolyDump {
        n,
        degree_x: rm.degree_x(),
        terms,
    })
}

pub fn poly_csv(d: &PolyDump) -> String {
    let mut s = format!("# n={} degree_x={}\nx_exp,m_exp,coeff\n", d.n, d.degree_x);
    for t in &d.terms {
        s.push_str(&format!("{},{},{}\n", t.x_exp, t.m_exp, t.coeff));
    }
    s
}

pub const VOLUME_CSV_HEADER: &str = "n,alpha,k,volume,error_estimate,alpha0,branch_id,out_of_range";

fn render_volume(r: &VolumeResult, format: Format) -> Result<String, Failure> {
    match format {
        Format::Csv => Ok(volume_csv(r)),
        Format::Json => to_json(r),
    }
}

pub fn volume_csv(r: &VolumeResult) -> String {
    format!(
        "{VOLUME_CSV_HEADER}\n{},{},{},{},{},{},{},{}\n",
        r.n,
        fmt_f64(r.alpha),
        r.k.map(|k| k.to_string()).unwrap_or_default(),
        fmt_f64(r.volume),
        fmt_f64(r.error_estimate),
        fmt_f64(r.alpha0),
        r.branch_id,
        r.out_of_range
    )
}

pub const TABLE_CSV_HEADER: &str = "alpha,re_x,im_x,log_abs_L,volume";

pub fn table_csv(rows: &[TableRow]) -> String {
    let mut s = format!("{TABLE_CSV_HEADER}\n");
    for r in rows {
        s.push_str(&format!(
            "{},{},{},{},{}\n",
            fmt_f64(r.alpha),
            fmt_f64(r.re_x),
            fmt_f64(r.im_x),
            fmt_f64(r.log_abs_l),
            fmt_f64(r.volume)
        ));
    }
    s
}

pub fn verify_csv(report: &AuditReport) -> String {
    let mut s = format!("# n={} seed={}\nidentity,bound,threshold,worst,samples,passed\n", report.n, report.seed);
    for c in &report.checks {
        let bound = match c.bound {
            crate::holonomy::audit::Bound::AtMost => "at_most",
            crate::holonomy::audit::Bound::AtLeast => "at_least",
        };
        s.push_str(&format!(
            "{},{},{},{},{},{}\n",
            c.name,
            bound,
            fmt_f64(c.threshold),
            fmt_f64(c.worst),
            c.samples,
            c.passed()
        ));
    }
    s
}
