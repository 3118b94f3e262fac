//! Command-line front end.
//!
//! Exit codes: 0 success (and consistent, where a verdict applies), 1 usage,
//! IO or parse error, 2 pass limit exceeded, 3 success with an inconsistent
//! system. Results go to stdout; diagnostics and `--trace` go to stderr.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::buchberger::{buchberger, reduce_basis, BasisReport, BuchbergerConfig, Profile, Verdict};
use crate::division::divide_with_limit;
use crate::error::Error;
use crate::oracle::{boolean_solutions, has_all_field_equations, MAX_ENUMERATION_VARS};
use crate::ordering::{leading_term, MonomialOrder};
use crate::parser::{parse_system, render_polynomial, render_term};
use crate::spoly::s_polynomial_pairs;
use crate::{QSystemFile, Rational};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PASS_LIMIT: i32 = 2;
pub const EXIT_INCONSISTENT: i32 = 3;

pub const DEFAULT_MAX_PASSES: usize = 64;

#[derive(Debug, Parser)]
#[command(name = "primegb", version, about = "Groebner bases and solvability of polynomial systems")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    opts: GlobalOpts,
}

#[derive(Debug, Args)]
struct GlobalOpts {
    /// Monomial order: prime, lex or grlex [default: prime]
    #[arg(long, global = true)]
    order: Option<MonomialOrder>,

    /// Algorithm profile: paper or conservative
    #[arg(long, global = true, default_value = "conservative")]
    profile: Profile,

    /// Return the reduced Groebner basis (conservative profile only)
    #[arg(long, global = true)]
    reduced: bool,

    /// Ceiling on Buchberger passes
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_PASSES as u64,
          value_parser = clap::value_parser!(u64).range(1..))]
    max_passes: u64,

    /// Ceiling on division steps
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    max_steps: Option<u64>,

    /// Emit a JSON document instead of text
    #[arg(long, global = true)]
    json: bool,

    /// Log each pass to stderr
    #[arg(long, global = true)]
    trace: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute a Groebner basis and print one element per line
    Gb { file: PathBuf },
    /// Decide whether the system has a certificate of non-existence
    Solvable {
        file: PathBuf,
        /// Cross-check against Boolean brute force when every x_i^2 - x_i is present
        #[arg(long)]
        check: bool,
    },
    /// Divide the first polynomial by the remaining ones
    Divide { file: PathBuf },
    /// Print all pairwise S-polynomials
    Spoly { file: PathBuf },
    /// Print the leading term of each polynomial
    LeadingTerm { file: PathBuf },
}

#[derive(Serialize)]
struct GbJson<'a> {
    order: MonomialOrder,
    profile: Profile,
    passes: usize,
    contradiction: bool,
    verdict: Verdict,
    basis: &'a [String],
}

#[derive(Serialize)]
struct CheckJson {
    performed: bool,
    solutions: Vec<Vec<u8>>,
    agrees: Option<bool>,
}

#[derive(Serialize)]
struct SolvableJson {
    order: MonomialOrder,
    profile: Profile,
    passes: usize,
    contradiction: bool,
    verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    check: Option<CheckJson>,
}

#[derive(Serialize)]
struct DivideJson {
    order: MonomialOrder,
    quotients: Vec<String>,
    remainder: String,
}

#[derive(Serialize)]
struct SpolyJson {
    i: usize,
    j: usize,
    s: String,
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self { code: EXIT_USAGE, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::PassLimitExceeded { .. } => EXIT_PASS_LIMIT,
            _ => EXIT_USAGE,
        };
        Self { code, message: e.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Self::usage(format!("write failed: {e}"))
    }
}

/// Run the CLI on `argv` (program name first) and return the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(&cli, out, err) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn load(path: &Path) -> Result<QSystemFile, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    parse_system(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn config(opts: &GlobalOpts) -> Result<BuchbergerConfig, Failure> {
    let cfg = match opts.profile {
        Profile::PaperFaithful => {
            if opts.order.is_some_and(|o| o != MonomialOrder::Prime) {
                return Err(Failure::usage("the paper profile always uses the prime order"));
            }
            if opts.reduced {
                return Err(Failure::usage("--reduced requires the conservative profile"));
            }
            BuchbergerConfig::paper_faithful()
        }
        Profile::Conservative => BuchbergerConfig::conservative(opts.order.unwrap_or_default()),
    };
    Ok(cfg.with_max_passes(Some(opts.max_passes as usize)))
}

fn exit_for(verdict: Verdict) -> i32 {
    match verdict {
        Verdict::Consistent => EXIT_OK,
        Verdict::Inconsistent => EXIT_INCONSISTENT,
    }
}

fn write_trace(report: &BasisReport<Rational>, err: &mut dyn Write) -> std::io::Result<()> {
    writeln!(
        err,
        "buchberger: order={} profile={} reduction={} generators={}",
        report.config.order(),
        report.config.profile(),
        report.config.reduction(),
        report.generators.len()
    )?;
    for ev in &report.trace {
        writeln!(
            err,
            "pass {}: {} s-polynomials, {} distinct, {} appended, basis size {}",
            ev.pass,
            ev.s_polynomials,
            ev.distinct,
            ev.appended.len(),
            ev.basis_len
        )?;
        for f in &ev.appended {
            writeln!(err, "  + {}", render_polynomial(f))?;
        }
    }
    if report.contradiction {
        writeln!(err, "contradiction: nonzero constant in basis")?;
    }
    Ok(())
}

fn run_buchberger(
    system: &QSystemFile,
    opts: &GlobalOpts,
    err: &mut dyn Write,
) -> Result<BasisReport<Rational>, Failure> {
    let cfg = config(opts)?;
    let report = buchberger(&system.polynomials, &cfg)?;
    if opts.trace {
        write_trace(&report, err)?;
    }
    Ok(report)
}

fn to_json(value: &impl Serialize) -> String {
    serde_json::to_string_pretty(value).expect("report serializes")
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    let opts = &cli.opts;
    match &cli.command {
        Command::Gb { file } => {
            let system = load(file)?;
            let report = run_buchberger(&system, opts, err)?;
            let basis = if opts.reduced && !report.basis.is_empty() {
                reduce_basis(&report.basis, report.config.order())?
            } else {
                report.basis.clone()
            };
            let rendered: Vec<String> = basis.iter().map(render_polynomial).collect();
            if opts.json {
                let doc = GbJson {
                    order: report.config.order(),
                    profile: report.config.profile(),
                    passes: report.passes,
                    contradiction: report.contradiction,
                    verdict: report.verdict,
                    basis: &rendered,
                };
                writeln!(out, "{}", to_json(&doc))?;
            } else {
                for line in &rendered {
                    writeln!(out, "{line}")?;
                }
            }
            Ok(exit_for(report.verdict))
        }
        Command::Solvable { file, check } => {
            let system = load(file)?;
            let report = run_buchberger(&system, opts, err)?;
            let check = if *check {
                let n = system.num_vars();
                if has_all_field_equations(&system.polynomials, n) && n <= MAX_ENUMERATION_VARS {
                    let solutions = boolean_solutions(&system.polynomials, &system.ctx)?;
                    let agrees = solutions.is_empty() == (report.verdict == Verdict::Inconsistent);
                    Some(CheckJson { performed: true, solutions, agrees: Some(agrees) })
                } else {
                    Some(CheckJson { performed: false, solutions: Vec::new(), agrees: None })
                }
            } else {
                None
            };
            if opts.json {
                let doc = SolvableJson {
                    order: report.config.order(),
                    profile: report.config.profile(),
                    passes: report.passes,
                    contradiction: report.contradiction,
                    verdict: report.verdict,
                    check,
                };
                writeln!(out, "{}", to_json(&doc))?;
            } else {
                writeln!(out, "{}", report.verdict)?;
                match check {
                    Some(CheckJson { performed: true, solutions, agrees: Some(agrees) }) => writeln!(
                        out,
                        "oracle: {} boolean solution(s); agreement: {}",
                        solutions.len(),
                        if agrees { "yes" } else { "no" }
                    )?,
                    Some(_) => writeln!(out, "oracle: skipped (needs every x_i^2 - x_i and at most {MAX_ENUMERATION_VARS} variables)")?,
                    None => {}
                }
            }
            Ok(exit_for(report.verdict))
        }
        Command::Divide { file } => {
            let system = load(file)?;
            let (f, divisors) = system.polynomials.split_first().expect("system is nonempty");
            if divisors.is_empty() {
                return Err(Failure::usage("divide needs a dividend and at least one divisor"));
            }
            let ord = order_only(opts)?;
            let res = divide_with_limit(f, divisors, ord, opts.max_steps.map(|s| s as usize))?;
            let quotients: Vec<String> = res.quotients.iter().map(render_polynomial).collect();
            let remainder = render_polynomial(&res.remainder);
            if opts.json {
                writeln!(out, "{}", to_json(&DivideJson { order: ord, quotients, remainder }))?;
            } else {
                for (i, q) in quotients.iter().enumerate() {
                    writeln!(out, "q{i}: {q}")?;
                }
                writeln!(out, "r: {remainder}")?;
            }
            Ok(EXIT_OK)
        }
        Command::Spoly { file } => {
            let system = load(file)?;
            let ord = order_only(opts)?;
            let nonzero: Vec<_> = system.polynomials.iter().filter(|f| !f.is_zero()).cloned().collect();
            if nonzero.len() != system.polynomials.len() {
                return Err(Failure::usage("S-polynomials are undefined for the zero polynomial"));
            }
            let pairs = s_polynomial_pairs(&nonzero, ord, false)?;
            if opts.json {
                let doc: Vec<SpolyJson> =
                    pairs.iter().map(|((i, j), s)| SpolyJson { i: *i, j: *j, s: render_polynomial(s) }).collect();
                writeln!(out, "{}", to_json(&doc))?;
            } else {
                for ((i, j), s) in &pairs {
                    writeln!(out, "S({i},{j}): {}", render_polynomial(s))?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::LeadingTerm { file } => {
            let system = load(file)?;
            let ord = order_only(opts)?;
            let terms = system
                .polynomials
                .iter()
                .map(|f| leading_term(f, ord).map(render_term))
                .collect::<Result<Vec<_>, _>>()?;
            if opts.json {
                writeln!(out, "{}", to_json(&terms))?;
            } else {
                for t in &terms {
                    writeln!(out, "{t}")?;
                }
            }
            Ok(EXIT_OK)
        }
    }
}

/// Order for the single-step subcommands, honoring the profile's constraint.
fn order_only(opts: &GlobalOpts) -> Result<MonomialOrder, Failure> {
    Ok(config(opts)?.order())
}
