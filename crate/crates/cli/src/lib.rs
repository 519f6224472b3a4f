//! Library half of the `fano-hodge` binary: argument parsing, dispatch, and
//! output. [`run`] never exits the process, so it can be driven from tests.

use std::ffi::OsString;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use fano_hodge::curves::{jacobian_diamond, sym_curve_diamond};
use fano_hodge::fano_even::fano_even_diamond;
use fano_hodge::fano_odd::fano_odd_diamond;
use fano_hodge::motivic::{
    verify_bgmn_crosscheck, verify_conjecture_b, verify_hochschild, verify_lemma_k0,
};
use fano_hodge::stacky::verify_stacky_count;
use fano_hodge::suites;
use fano_hodge::{EvenFanoParams, HodgeDiamond, OddFanoParams, VerificationReport};

mod text;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "fano-hodge",
    version,
    about = "Exact Hodge diamonds and identity checks for Fano schemes of intersections of two quadrics"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Write the result to FILE instead of standard output.
    #[arg(long, value_name = "FILE", global = true)]
    output: Option<PathBuf>,

    /// Report zero elapsed time so that output is reproducible.
    #[arg(long, global = true)]
    no_timings: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a Hodge diamond.
    Diamond {
        #[arg(value_enum)]
        target: DiamondTarget,
        #[command(flatten)]
        params: Params,
    },
    /// Check one identity instance.
    Verify {
        #[arg(value_enum)]
        target: VerifyTarget,
        #[command(flatten)]
        params: Params,
    },
    /// Run one combinatorial identity suite over a range.
    Identity {
        #[arg(value_enum)]
        suite: IdentitySuite,
        #[command(flatten)]
        ranges: Ranges,
    },
    /// Run every check over the given ranges.
    Sweep {
        #[command(flatten)]
        ranges: Ranges,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum DiamondTarget {
    FanoOdd,
    FanoEven,
    Sym,
    Jac,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum VerifyTarget {
    /// E-polynomial decomposition of F_k for the hyperelliptic case.
    Odd,
    /// Euler characteristic against the exceptional-object count, stacky case.
    Even,
    /// The k = 0 identity.
    K0,
    /// The k = g-2 multiplicities against the known decomposition.
    Bgmn,
    /// Hochschild homology additivity.
    Hochschild,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum IdentitySuite {
    Gessel,
    ChuVandermonde,
    QBinomial,
    MultiplicityReduction,
    Effectivity,
}

#[derive(Args, Debug)]
struct Params {
    /// Genus of the associated curve.
    #[arg(long, allow_negative_numbers = true, value_parser = clap::value_parser!(i64).range(0..))]
    g: Option<i64>,
    /// Dimension of the linear subspaces.
    #[arg(long, allow_negative_numbers = true, value_parser = clap::value_parser!(i64).range(0..))]
    k: Option<i64>,
    /// Symmetric power.
    #[arg(long, allow_negative_numbers = true, value_parser = clap::value_parser!(i64).range(0..))]
    n: Option<i64>,
}

#[derive(Args, Debug)]
struct Ranges {
    #[arg(long, default_value_t = 12, allow_negative_numbers = true, value_parser = clap::value_parser!(i64).range(0..))]
    max_g: i64,
    #[arg(long, default_value_t = 30, allow_negative_numbers = true, value_parser = clap::value_parser!(i64).range(0..))]
    max_m: i64,
    #[arg(long, default_value_t = 60, allow_negative_numbers = true, value_parser = clap::value_parser!(i64).range(0..))]
    max_a: i64,
    #[arg(long, default_value_t = 40, allow_negative_numbers = true, value_parser = clap::value_parser!(i64).range(0..))]
    max_n: i64,
}

/// What a command produced.
enum Outcome {
    Diamond(HodgeDiamond),
    Report(VerificationReport),
    Reports(Vec<VerificationReport>),
}

impl Outcome {
    fn all_verified(&self) -> bool {
        match self {
            Outcome::Diamond(_) => true,
            Outcome::Report(r) => r.is_verified(),
            Outcome::Reports(rs) => rs.iter().all(VerificationReport::is_verified),
        }
    }

    fn exit_code(&self) -> i32 {
        if self.all_verified() {
            EXIT_OK
        } else {
            EXIT_FAILED
        }
    }

    fn clear_timings(&mut self) {
        match self {
            Outcome::Diamond(_) => {}
            Outcome::Report(r) => r.clear_timing(),
            Outcome::Reports(rs) => rs.iter_mut().for_each(VerificationReport::clear_timing),
        }
    }

    fn render(&self, format: Format, timings: bool) -> serde_json::Result<String> {
        let mut s = match (format, self) {
            (Format::Json, Outcome::Diamond(d)) => serde_json::to_string(d)?,
            (Format::Json, Outcome::Report(r)) => serde_json::to_string(r)?,
            (Format::Json, Outcome::Reports(rs)) => serde_json::to_string(rs)?,
            (Format::Text, Outcome::Diamond(d)) => d.render_text(),
            (Format::Text, Outcome::Report(r)) => text::report(r, timings),
            (Format::Text, Outcome::Reports(rs)) => text::summary(rs, timings),
        };
        if !s.ends_with('\n') {
            s.push('\n');
        }
        Ok(s)
    }
}

fn usage_error(flag: &str, msg: impl std::fmt::Display) -> clap::Error {
    Cli::command().error(
        ErrorKind::ValueValidation,
        format!("invalid value for '{flag}': {msg}"),
    )
}

fn require(value: Option<i64>, flag: &str) -> Result<i64, clap::Error> {
    value.ok_or_else(|| {
        Cli::command().error(
            ErrorKind::MissingRequiredArgument,
            format!("the argument '{flag}' is required for this target"),
        )
    })
}

fn genus_at_least_two(params: &Params) -> Result<i64, clap::Error> {
    let g = require(params.g, "--g")?;
    if g < 2 {
        return Err(usage_error("--g", format!("{g} must be at least 2")));
    }
    Ok(g)
}

fn subspace_dim(params: &Params, g: i64) -> Result<i64, clap::Error> {
    let k = require(params.k, "--k")?;
    if k > g - 2 {
        return Err(usage_error(
            "--k",
            format!("{k} must lie in 0..={} for g = {g}", g - 2),
        ));
    }
    Ok(k)
}

enum Failure {
    Usage(clap::Error),
    Library(fano_hodge::Error),
}

impl From<clap::Error> for Failure {
    fn from(e: clap::Error) -> Self {
        Failure::Usage(e)
    }
}

impl From<fano_hodge::Error> for Failure {
    fn from(e: fano_hodge::Error) -> Self {
        Failure::Library(e)
    }
}

fn diamond(target: DiamondTarget, params: &Params) -> Result<Outcome, Failure> {
    let dia = match target {
        DiamondTarget::FanoOdd => {
            let g = genus_at_least_two(params)?;
            let k = subspace_dim(params, g)?;
            fano_odd_diamond(OddFanoParams::new(g, k)?)?
        }
        DiamondTarget::FanoEven => {
            let g = genus_at_least_two(params)?;
            let k = subspace_dim(params, g)?;
            fano_even_diamond(EvenFanoParams::new(g, k)?)?
        }
        DiamondTarget::Sym => {
            sym_curve_diamond(require(params.g, "--g")?, require(params.n, "--n")?)?
        }
        DiamondTarget::Jac => jacobian_diamond(require(params.g, "--g")?)?,
    };
    Ok(Outcome::Diamond(dia))
}

fn verify(target: VerifyTarget, params: &Params) -> Result<Outcome, Failure> {
    let g = genus_at_least_two(params)?;
    let report = match target {
        VerifyTarget::Odd => verify_conjecture_b(g, subspace_dim(params, g)?)?,
        VerifyTarget::Even => verify_stacky_count(g, subspace_dim(params, g)?)?,
        VerifyTarget::K0 => verify_lemma_k0(g)?,
        VerifyTarget::Bgmn => verify_bgmn_crosscheck(g)?,
        VerifyTarget::Hochschild => verify_hochschild(g, subspace_dim(params, g)?)?,
    };
    Ok(Outcome::Report(report))
}

fn identity(suite: IdentitySuite, r: &Ranges) -> fano_hodge::Result<VerificationReport> {
    match suite {
        IdentitySuite::Gessel => suites::verify_gessel(r.max_m, r.max_a),
        IdentitySuite::ChuVandermonde => suites::verify_chu_vandermonde(r.max_n),
        IdentitySuite::QBinomial => suites::verify_q_binomial_laws(r.max_n),
        IdentitySuite::MultiplicityReduction => suites::verify_multiplicity_reduction(r.max_g),
        IdentitySuite::Effectivity => suites::verify_effectivity(r.max_g),
    }
}

#[derive(Clone, Copy)]
enum Job {
    ConjectureB(i64, i64),
    Hochschild(i64, i64),
    LemmaK0(i64),
    Bgmn(i64),
    Stacky(i64, i64),
    Suite(IdentitySuite),
}

impl Job {
    fn run(self, ranges: &Ranges) -> fano_hodge::Result<VerificationReport> {
        match self {
            Job::ConjectureB(g, k) => verify_conjecture_b(g, k),
            Job::Hochschild(g, k) => verify_hochschild(g, k),
            Job::LemmaK0(g) => verify_lemma_k0(g),
            Job::Bgmn(g) => verify_bgmn_crosscheck(g),
            Job::Stacky(g, k) => verify_stacky_count(g, k),
            Job::Suite(s) => identity(s, ranges),
        }
    }
}

fn sweep_jobs(max_g: i64) -> Vec<Job> {
    let cells = || (2..=max_g).flat_map(|g| (0..=g - 2).map(move |k| (g, k)));
    let mut jobs: Vec<Job> = cells().map(|(g, k)| Job::ConjectureB(g, k)).collect();
    jobs.extend(cells().map(|(g, k)| Job::Hochschild(g, k)));
    jobs.extend((2..=max_g).map(Job::LemmaK0));
    jobs.extend((2..=max_g).map(Job::Bgmn));
    jobs.extend(cells().map(|(g, k)| Job::Stacky(g, k)));
    jobs.extend(
        [
            IdentitySuite::QBinomial,
            IdentitySuite::MultiplicityReduction,
            IdentitySuite::Effectivity,
            IdentitySuite::Gessel,
            IdentitySuite::ChuVandermonde,
        ]
        .map(Job::Suite),
    );
    jobs
}

fn sweep(ranges: &Ranges) -> fano_hodge::Result<Outcome> {
    // jobs are listed in (identity, g, k) order and an indexed parallel
    // collect keeps that order, whatever the scheduling
    let reports = sweep_jobs(ranges.max_g)
        .into_par_iter()
        .map(|job| job.run(ranges))
        .collect::<fano_hodge::Result<Vec<_>>>()?;
    Ok(Outcome::Reports(reports))
}

fn execute(cli: &Cli) -> Result<Outcome, Failure> {
    match &cli.command {
        Command::Diamond { target, params } => diamond(*target, params),
        Command::Verify { target, params } => verify(*target, params),
        Command::Identity { suite, ranges } => Ok(Outcome::Report(identity(*suite, ranges)?)),
        Command::Sweep { ranges } => Ok(sweep(ranges)?),
    }
}

/// Writes `contents` to `path` through a temporary file in the same
/// directory, so readers never observe a partial file.
fn write_atomic(path: &Path, contents: &str) -> io::Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents.as_bytes())?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code: 0 when every check verifies, 1 when one fails or a
/// computation errors, 2 on a usage error.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(rendered.as_bytes())
            } else {
                stdout.write_all(rendered.as_bytes())
            };
            return e.exit_code();
        }
    };
    let mut outcome = match execute(&cli) {
        Ok(o) => o,
        Err(Failure::Usage(e)) => {
            let _ = write!(stderr, "{}", e.render());
            return EXIT_USAGE;
        }
        Err(Failure::Library(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            return EXIT_FAILED;
        }
    };
    if cli.no_timings {
        outcome.clear_timings();
    }
    let rendered = match outcome.render(cli.format, !cli.no_timings) {
        Ok(s) => s,
        Err(e) => {
            let _ = writeln!(stderr, "error: cannot serialize output: {e}");
            return EXIT_FAILED;
        }
    };
    let written = match &cli.output {
        Some(path) => write_atomic(path, &rendered)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => stdout
            .write_all(rendered.as_bytes())
            .map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: {e}");
        return EXIT_FAILED;
    }
    outcome.exit_code()
}
