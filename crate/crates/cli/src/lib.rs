//! Command-line frontend. Parsing and formatting only; every computation is
//! delegated to `lumbral_core`.

mod render;

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, IsTerminal, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use lumbral_core::algebra::{parse_rational, Rational};
use lumbral_core::families::{dobinski_partial_sums, fully_degenerate_bell, relative_error, Family};
use lumbral_core::triangles::TableKind;
use lumbral_core::verify::{run_full_suite, verify_with, FaultInjection, IdentityId, SuiteConfig, VerificationReport};
use lumbral_core::{Error, Lambda, PolyX, Triangle};

pub use render::TriangleDoc;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Tex,
    Table,
}

#[derive(Debug, Parser)]
#[command(name = "lumbral", version, about = "Degenerate Stirling, Bell and Dowling computations in exact arithmetic")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Deformation parameter as `p/q` or a terminating decimal; `0` selects the classical limit.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub lambda: Option<String>,
    /// Positive integer parameter of the Whitney and Dowling families.
    #[arg(long, global = true)]
    pub m: Option<u32>,
    #[arg(long = "n-max", global = true, default_value_t = 8)]
    pub n_max: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Largest accepted `--n-max`.
    #[arg(long = "n-cap", global = true, default_value_t = 64)]
    pub n_cap: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a number triangle: s1, s2, s1deg, s2deg, whitney-deg, whitney-r1, whitney-r2.
    Triangle {
        kind: String,
        /// Shift of the r-Whitney triangles.
        #[arg(long, default_value_t = 1)]
        r: u32,
    },
    /// Print one polynomial: bell, bell-partial, bell-full, dowling, dowling-deg,
    /// dowling-full, bernoulli-deg, bernoulli2-deg, polybell.
    Poly {
        family: String,
        #[arg(long)]
        n: usize,
        /// Order of the poly-Bell family.
        #[arg(long, allow_hyphen_values = true)]
        k: Option<i64>,
    },
    /// Check one identity, or `all`.
    Verify {
        identity: String,
        /// Comma-separated lambda samples replacing the defaults.
        #[arg(long = "lambda-samples", allow_hyphen_values = true)]
        lambda_samples: Option<String>,
        /// Restrict the poly-Bell orders checked.
        #[arg(long, allow_hyphen_values = true)]
        k: Option<i64>,
        /// Restrict the r-Whitney shifts checked.
        #[arg(long)]
        r: Option<u32>,
        /// Terms of the Dobinski series.
        #[arg(long, default_value_t = 400)]
        terms: usize,
        /// Add `DELTA` to entry `(N, K)` of every triangle of `KIND` before checking, as `KIND:N:K:DELTA`.
        #[arg(long = "inject-fault", allow_hyphen_values = true)]
        inject_fault: Option<String>,
    },
    /// Partial sums of the Dobinski-like series for the fully degenerate Bell polynomials.
    Dobinski {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, default_value_t = 200)]
        terms: usize,
    },
}

/// A failure carrying its exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError { code: EXIT_USAGE, message: message.into() }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::usage(e.to_string())
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::usage(format!("i/o error: {e}"))
    }
}

/// Parses arguments, runs the command and returns the process exit code.
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
    match execute(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message);
            e.code
        }
    }
}

fn execute(cli: &Cli) -> Result<i32, CliError> {
    let g = &cli.global;
    if g.n_max > g.n_cap {
        return Err(CliError::usage(format!("--n-max {} exceeds the cap of {}", g.n_max, g.n_cap)));
    }
    let color = g.out.is_none() && std::env::var_os("NO_COLOR").is_none() && io::stdout().is_terminal();
    let (text, code) = match &cli.command {
        Command::Triangle { kind, r } => (cmd_triangle(kind, *r, g)?, EXIT_OK),
        Command::Poly { family, n, k } => (cmd_poly(family, *n, *k, g)?, EXIT_OK),
        Command::Verify { identity, lambda_samples, k, r, terms, inject_fault } => {
            let opts = VerifyOptions {
                lambda_samples: lambda_samples.as_deref(),
                k: *k,
                r: *r,
                terms: *terms,
                fault: inject_fault.as_deref(),
            };
            let reports = cmd_verify(identity, &opts, g)?;
            let code = if reports.iter().all(VerificationReport::passed) { EXIT_OK } else { EXIT_VERIFY_FAILED };
            (render::reports(&reports, g.format, color), code)
        }
        Command::Dobinski { n, x, terms } => (cmd_dobinski(*n, x, *terms, g)?, EXIT_OK),
    };
    match &g.out {
        Some(path) => File::create(path)?.write_all(text.as_bytes())?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(code)
}

/// `0` maps to the classical limit.
fn parse_lambda(g: &GlobalArgs) -> Result<Option<Lambda>, CliError> {
    g.lambda.as_deref().map(|s| parse_rational(s).map(Lambda::or_classical)).transpose().map_err(Into::into)
}

fn require_lambda(g: &GlobalArgs, what: &str) -> Result<Lambda, CliError> {
    parse_lambda(g)?.ok_or_else(|| CliError::usage(format!("{what} needs --lambda")))
}

fn require_m(g: &GlobalArgs, what: &str) -> Result<u32, CliError> {
    match g.m {
        Some(0) => Err(CliError::usage("--m must be a positive integer")),
        Some(m) => Ok(m),
        None => Err(CliError::usage(format!("{what} needs --m"))),
    }
}

pub fn cmd_triangle(kind: &str, r: u32, g: &GlobalArgs) -> Result<String, CliError> {
    let table_kind: TableKind = kind.parse()?;
    let lambda = if table_kind.uses_lambda() { Some(require_lambda(g, kind)?) } else { None };
    let m = if table_kind.uses_m() { Some(require_m(g, kind)?) } else { None };
    let t: Triangle = table_kind.build(g.n_max, lambda.as_ref().unwrap_or(&Lambda::classical()), m.unwrap_or(1), r)?;
    let doc = TriangleDoc::new(
        table_kind.name(),
        m,
        table_kind.uses_r().then_some(r),
        lambda.as_ref().map(|l| l.value().clone()),
        &t,
    );
    Ok(render::triangle(&doc, &t, g.format))
}

#[derive(Debug, Serialize, Deserialize)]
pub struct PolyDoc {
    pub family: String,
    pub n: usize,
    pub lambda: Option<String>,
    pub m: Option<u32>,
    pub k: Option<i64>,
    #[serde(flatten)]
    pub poly: PolyX,
}

pub fn cmd_poly(family: &str, n: usize, k: Option<i64>, g: &GlobalArgs) -> Result<String, CliError> {
    let needs_lambda = !matches!(family, "bell" | "dowling");
    let needs_m = family.starts_with("dowling");
    let needs_k = family == "polybell";
    let lambda = if needs_lambda { Some(require_lambda(g, family)?) } else { None };
    let m = if needs_m { Some(require_m(g, family)?) } else { None };
    let k = if needs_k { Some(k.ok_or_else(|| CliError::usage("polybell needs --k"))?) } else { None };
    let l = || lambda.clone().unwrap();
    let fam = match family {
        "bell" => Family::BellClassical,
        "bell-partial" => Family::BellPartialDeg { lambda: l() },
        "bell-full" => Family::BellFullyDeg { lambda: l() },
        "dowling" => Family::DowlingClassical { m: m.unwrap() },
        "dowling-deg" => Family::DowlingDeg { m: m.unwrap(), lambda: l() },
        "dowling-full" => Family::DowlingFullyDeg { m: m.unwrap(), lambda: l() },
        "bernoulli-deg" => Family::BernoulliDeg { lambda: l() },
        "bernoulli2-deg" => Family::Bernoulli2Deg { lambda: l() },
        "polybell" => Family::PolyBellDeg { k: k.unwrap(), lambda: l() },
        other => return Err(CliError::usage(format!("unknown family `{other}`"))),
    };
    let doc = PolyDoc {
        family: family.to_string(),
        n,
        lambda: lambda.map(|l| l.value().to_string()),
        m,
        k,
        poly: fam.polynomial(n)?,
    };
    Ok(render::poly(&doc, g.format))
}

fn parse_list(s: &str) -> Result<Vec<Rational>, CliError> {
    s.split(',').map(|p| parse_rational(p).map_err(Into::into)).collect()
}

fn parse_fault(s: &str) -> Result<FaultInjection, CliError> {
    let parts: Vec<&str> = s.split(':').collect();
    let bad = || CliError::usage(format!("--inject-fault expects KIND:N:K:DELTA, got `{s}`"));
    let [kind, n, k, delta] = parts[..] else {
        return Err(bad());
    };
    Ok(FaultInjection {
        table: kind.parse()?,
        n: n.parse().map_err(|_| bad())?,
        k: k.parse().map_err(|_| bad())?,
        delta: parse_rational(delta)?,
    })
}

/// Flags of the `verify` subcommand.
#[derive(Debug, Default)]
pub struct VerifyOptions<'a> {
    pub lambda_samples: Option<&'a str>,
    pub k: Option<i64>,
    pub r: Option<u32>,
    pub terms: usize,
    pub fault: Option<&'a str>,
}

pub fn cmd_verify(identity: &str, opts: &VerifyOptions, g: &GlobalArgs) -> Result<Vec<VerificationReport>, CliError> {
    let (lambda_samples, k, r) = (opts.lambda_samples, opts.k, opts.r);
    let mut config = SuiteConfig { seed: g.seed, dobinski_terms: opts.terms, ..SuiteConfig::default() };
    config.fault = opts.fault.map(parse_fault).transpose()?;
    config.lambda_samples = match (lambda_samples, &g.lambda) {
        (Some(list), _) => Some(parse_list(list)?),
        (None, Some(single)) => Some(vec![parse_rational(single)?]),
        (None, None) => None,
    };
    if let Some(m) = g.m {
        config.m_values = vec![m];
    }
    if let Some(k) = k {
        config.k_values = vec![k];
    }
    if let Some(r) = r {
        config.r_values = vec![r];
    }
    if identity.eq_ignore_ascii_case("all") {
        Ok(run_full_suite(g.n_max, &config)?)
    } else {
        let id: IdentityId = identity.parse()?;
        Ok(vec![verify_with(id, g.n_max, &config)?])
    }
}

#[derive(Debug, Serialize)]
pub struct DobinskiTrace {
    pub n: usize,
    pub lambda: String,
    pub x: String,
    pub terms: usize,
    pub reference: f64,
    pub checkpoints: Vec<Checkpoint>,
    pub relative_error: f64,
}

#[derive(Debug, Serialize)]
pub struct Checkpoint {
    pub terms: usize,
    pub partial_sum: f64,
    pub relative_error: f64,
}

pub fn cmd_dobinski(n: usize, x: &str, terms: usize, g: &GlobalArgs) -> Result<String, CliError> {
    let lambda = require_lambda(g, "dobinski")?;
    let x = parse_rational(x)?;
    let sums = dobinski_partial_sums(n, lambda.value(), &x, terms)?;
    let reference = lumbral_core::algebra::rational::to_f64(&fully_degenerate_bell(n, &lambda).eval(&x));
    let mut marks: Vec<usize> = (1..=10).map(|i| i * terms / 10).collect();
    marks.dedup();
    let checkpoints = marks
        .into_iter()
        .map(|t| Checkpoint { terms: t, partial_sum: sums[t], relative_error: relative_error(sums[t], reference) })
        .collect();
    let trace = DobinskiTrace {
        n,
        lambda: lambda.value().to_string(),
        x: x.to_string(),
        terms,
        reference,
        checkpoints,
        relative_error: relative_error(sums[terms], reference),
    };
    Ok(render::dobinski(&trace, g.format))
}
