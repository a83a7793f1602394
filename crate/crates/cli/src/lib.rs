//! The `hyperlab` command line. [`run`] takes the argument list and two
//! writers and returns the exit status, so tests can drive it in-process.
//!
//! Exit status: 0 on success or a passing verification, 1 when a
//! verification fails, 2 on usage errors and rejected inputs.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};

use zeta2_hyperlab::exec::Execution;
use zeta2_hyperlab::hyper_numeric::{eval_pfq, zeta2_to_numeric};
use zeta2_hyperlab::identities::{self, Assignment, Verdict, VerificationReport};
use zeta2_hyperlab::search::{self, Classification, F32Ties, SearchSpec, Template};
use zeta2_hyperlab::thomae_group::{orbit, phi_related, t_related, x_of_f32, x_of_integral, F32Params};
use zeta2_hyperlab::zeta2_exact::{eval_3f2_exact, eval_integral_exact, is_irrational, zeta2_coefficient};
use zeta2_hyperlab::{Error, IntegralParams, PfqSpec, Rational};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

fn parse_precision(s: &str) -> Result<u32, String> {
    let p: u32 = s.parse().map_err(|_| format!("{s:?} is not a bit count"))?;
    if p < 32 {
        return Err(format!("precision must be at least 32 bits, got {p}"));
    }
    Ok(p)
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.parse().map_err(|e| format!("{e}"))
}

#[derive(Parser, Debug)]
#[command(
    name = "hyperlab",
    version,
    about = "Exact and certified evaluation of 3F2 series at 1 and Rhin-Viola integrals"
)]
struct Cli {
    /// Working precision in bits for numeric output.
    #[arg(long, global = true, env = "HYPERLAB_PRECISION", default_value = "128", value_parser = parse_precision)]
    precision: u32,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FamilyKind {
    A,
    B,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OutputFormat {
    Human,
    Records,
}

// Parsed once per process; the size spread between variants is harmless.
#[allow(clippy::large_enum_variant)]
#[derive(Subcommand, Debug)]
enum Cmd {
    /// Exact value of I(h,i,j,k,l) in Q + Q*zeta2.
    EvalIntegral { h: u32, i: u32, j: u32, k: u32, l: u32 },
    /// 3F2[a,b,c;d,e](1): exact when of integral type, certified numeric otherwise.
    #[command(name = "eval-3f2", allow_negative_numbers = true)]
    Eval3f2 {
        #[arg(value_parser = parse_rational)]
        a: Rational,
        #[arg(value_parser = parse_rational)]
        b: Rational,
        #[arg(value_parser = parse_rational)]
        c: Rational,
        #[arg(value_parser = parse_rational)]
        d: Rational,
        #[arg(value_parser = parse_rational)]
        e: Rational,
    },
    /// Thomae orbit of a series or of an integral.
    #[command(group(ArgGroup::new("source").required(true).args(["integral", "series"])))]
    Orbit {
        #[arg(long, num_args = 5, value_names = ["H", "I", "J", "K", "L"])]
        integral: Option<Vec<u32>>,
        #[arg(long, num_args = 5, value_names = ["A", "B", "C", "D", "E"], value_parser = parse_rational, allow_negative_numbers = true)]
        series: Option<Vec<Rational>>,
        /// One member per class of the trivial symmetries (the default).
        #[arg(long)]
        dedup: bool,
        /// Every distinct ordered parameter array instead.
        #[arg(long, conflicts_with = "dedup")]
        ordered: bool,
    },
    /// Whether two integral parameter sets are related by T or by Phi.
    #[command(group(ArgGroup::new("group").required(true).args(["t", "phi"])))]
    Related {
        #[arg(long)]
        t: bool,
        #[arg(long)]
        phi: bool,
        /// `h,i,j,k,l`
        p: IntegralParams,
        /// `h,i,j,k,l`
        q: IntegralParams,
    },
    /// Value, zeta2 coefficient and the irrationality criterion.
    Rationality { h: u32, i: u32, j: u32, k: u32, l: u32 },
    /// Verify a catalogue identity: `verify b12 --alpha 4 --beta 3 --gamma 4`.
    Verify {
        id: String,
        /// `--<param> <rational>` pairs, and optionally `--mode exact|numeric|auto`.
        #[arg(trailing_var_arg = true, allow_hyphen_values = true, value_name = "--PARAM VALUE")]
        params: Vec<String>,
    },
    /// List the identity catalogue.
    Catalogue,
    /// Sato's six integral relations, exactly.
    Sato,
    /// Verify a counter-example family for alpha up to a bound.
    Family {
        #[arg(value_enum, ignore_case = true)]
        which: FamilyKind,
        #[arg(long)]
        alpha_max: u32,
    },
    /// Grid search for rational-multiple relations.
    Search {
        #[arg(long)]
        template: Template,
        /// Upper bounds: one number for all coordinates or five comma-separated.
        #[arg(long)]
        max: String,
        /// Lower bounds, same shape (default 0 for integral, 1 for 3f2).
        #[arg(long)]
        min: Option<String>,
        /// Tie d = a + K (3f2 only).
        #[arg(long, value_name = "K", allow_negative_numbers = true)]
        d_offset: Option<i64>,
        /// Tie e = b + c (3f2 only).
        #[arg(long)]
        e_sum: bool,
        /// Maximum number of emitted records.
        #[arg(long)]
        budget: Option<usize>,
        /// Also report pairs of rational-valued tuples.
        #[arg(long)]
        rational: bool,
        /// Evaluate on one thread.
        #[arg(long)]
        sequential: bool,
        /// Write the records file here.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "human")]
        format: OutputFormat,
    },
}

/// Runs the command line; `args` includes the program name.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(CliError::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
        Err(CliError::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_FAIL
        }
    }
}

enum CliError {
    Usage(String),
    Lib(Error),
    Io(std::io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Io(io) => CliError::Io(io),
            other => CliError::Lib(other),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

type CliResult = Result<i32, CliError>;

fn status(all_pass: bool) -> i32 {
    if all_pass {
        EXIT_OK
    } else {
        EXIT_FAIL
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> CliResult {
    let precision = cli.precision;
    match cli.cmd {
        Cmd::EvalIntegral { h, i, j, k, l } => {
            let p = IntegralParams::new(h, i, j, k, l);
            let v = eval_integral_exact(p);
            writeln!(out, "I{p} = {v}")?;
            writeln!(out, "numeric: {}", zeta2_to_numeric(&v, precision))?;
            Ok(EXIT_OK)
        }
        Cmd::Eval3f2 { a, b, c, d, e } => {
            let f = F32Params::new([a, b, c], [d, e]);
            match eval_3f2_exact(&f) {
                Ok(v) => {
                    writeln!(out, "3F2{f} = {v}")?;
                    writeln!(out, "numeric: {}", zeta2_to_numeric(&v, precision))?;
                }
                Err(Error::Unmappable(_)) => {
                    let v = eval_pfq(&PfqSpec::from(&f), precision)?;
                    writeln!(out, "3F2{f} has no exact evaluation path")?;
                    writeln!(out, "numeric: {v}")?;
                }
                Err(e) => return Err(e.into()),
            }
            Ok(EXIT_OK)
        }
        Cmd::Orbit { integral, series, dedup: _, ordered } => {
            let (x, value) = match (integral, series) {
                (Some(v), _) => {
                    let p = IntegralParams::from_array([v[0], v[1], v[2], v[3], v[4]]);
                    (x_of_integral(p), Some(eval_integral_exact(p)))
                }
                (_, Some(v)) => {
                    let f = F32Params::new([v[0].clone(), v[1].clone(), v[2].clone()], [v[3].clone(), v[4].clone()]);
                    (x_of_f32(&f), eval_3f2_exact(&f).ok())
                }
                _ => unreachable!("clap requires one source"),
            };
            let members = orbit(&x, !ordered);
            for m in &members {
                if m.evaluable {
                    writeln!(out, "{}", m.params)?;
                } else {
                    writeln!(out, "{} (divergent)", m.params)?;
                }
            }
            if let Some(v) = value {
                writeln!(out, "value: {v}")?;
            }
            Ok(EXIT_OK)
        }
        Cmd::Related { t, phi: _, p, q } => {
            let (name, related) = if t { ("T", t_related(p, q)) } else { ("Phi", phi_related(p, q)) };
            let verdict = if related { "related" } else { "not related" };
            writeln!(out, "{p} {q} {verdict} under {name}")?;
            writeln!(out, "I{p} = {}", eval_integral_exact(p))?;
            writeln!(out, "I{q} = {}", eval_integral_exact(q))?;
            Ok(EXIT_OK)
        }
        Cmd::Rationality { h, i, j, k, l } => {
            let p = IntegralParams::new(h, i, j, k, l);
            let v = eval_integral_exact(p);
            let z = zeta2_coefficient(p);
            writeln!(out, "I{p} = {v}")?;
            writeln!(out, "zeta2 coefficient: {z}")?;
            writeln!(out, "{}", if is_irrational(p) { "irrational" } else { "rational" })?;
            if z != v.z {
                writeln!(out, "warning: closed-form coefficient disagrees with the evaluated value")?;
                return Ok(EXIT_FAIL);
            }
            Ok(EXIT_OK)
        }
        Cmd::Verify { id, params } => verify(&id, &params, precision, out),
        Cmd::Catalogue => {
            for e in identities::catalogue() {
                let example = e.example.iter().map(|(k, v)| format!("--{k} {v}")).collect::<Vec<_>>().join(" ");
                writeln!(out, "{}\t{}\t{}", e.id, e.free_params.join(","), example)?;
            }
            Ok(EXIT_OK)
        }
        Cmd::Sato => {
            let reports = identities::sato_suite();
            for r in &reports {
                writeln!(out, "{}", r.render())?;
                writeln!(out, "  I(p) = {}, I(q) = {}", r.lhs_value, r.rhs_value)?;
            }
            Ok(status(reports.iter().all(VerificationReport::passed)))
        }
        Cmd::Family { which, alpha_max } => {
            let (start, make): (u32, fn(u32) -> zeta2_hyperlab::Result<_>) = match which {
                FamilyKind::A => (1, identities::family_a),
                FamilyKind::B => (2, identities::family_b),
            };
            if alpha_max < start {
                return Err(CliError::Usage(format!("--alpha-max must be at least {start}")));
            }
            let mut ok = true;
            for alpha in start..=alpha_max {
                let r = identities::verify_family(&make(alpha)?);
                ok &= r.passed();
                writeln!(out, "{}", r.render())?;
                writeln!(out, "  I(p) = {}", r.lhs_value)?;
            }
            Ok(status(ok))
        }
        Cmd::Search { template, max, min, d_offset, e_sum, budget, rational, sequential, out: path, format } => {
            let mut spec = match template {
                Template::Integral => SearchSpec::integral(0),
                Template::F32 => SearchSpec::f32([1; 5]),
            };
            spec.hi = parse_bounds(&max)?;
            if let Some(m) = min {
                spec.lo = parse_bounds(&m)?;
            }
            spec.ties = F32Ties { d_from_a: d_offset, e_from_bc: e_sum };
            spec.pair_budget = budget;
            spec.include_rational = rational;
            spec.execution = if sequential { Execution::Sequential } else { Execution::Parallel };
            let outcome = search::grid_search(&spec)?;
            if let Some(path) = &path {
                let f = BufWriter::new(File::create(path)?);
                search::write_records(&outcome.records, f)?;
            }
            match (format, &path) {
                (OutputFormat::Records, None) => search::write_records(&outcome.records, &mut *out)?,
                _ => {
                    let count = |c| outcome.records.iter().filter(|r| r.class == c).count();
                    writeln!(
                        out,
                        "evaluated {} tuples, {} records: t_explained {}, phi_explained {}, exotic {}, rational_pair {}{}",
                        outcome.evaluated,
                        outcome.records.len(),
                        count(Classification::TExplained),
                        count(Classification::PhiExplained),
                        count(Classification::Exotic),
                        count(Classification::RationalPair),
                        if outcome.truncated { " (truncated by budget)" } else { "" }
                    )?;
                    for r in outcome.records.iter().filter(|r| r.class == Classification::Exotic) {
                        writeln!(out, "{r}")?;
                    }
                }
            }
            Ok(EXIT_OK)
        }
    }
}

fn parse_bounds(s: &str) -> Result<[i64; 5], CliError> {
    let v: Vec<i64> = s
        .split(',')
        .map(|t| t.trim().parse())
        .collect::<Result<_, _>>()
        .map_err(|_| CliError::Usage(format!("bad bounds {s:?}")))?;
    match v.len() {
        1 => Ok([v[0]; 5]),
        5 => Ok([v[0], v[1], v[2], v[3], v[4]]),
        n => Err(CliError::Usage(format!("bounds need 1 or 5 entries, got {n}"))),
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum VerifyMode {
    Auto,
    Exact,
    Numeric,
}

fn verify(id: &str, params: &[String], mut precision: u32, out: &mut dyn Write) -> CliResult {
    let mut asg = Assignment::new();
    let mut mode = VerifyMode::Auto;
    let mut it = params.iter();
    while let Some(flag) = it.next() {
        let name = flag
            .strip_prefix("--")
            .ok_or_else(|| CliError::Usage(format!("expected --<param> <value>, got {flag:?}")))?;
        let value = it.next().ok_or_else(|| CliError::Usage(format!("{flag} needs a value")))?;
        match name {
            "mode" => {
                mode = match value.as_str() {
                    "auto" => VerifyMode::Auto,
                    "exact" => VerifyMode::Exact,
                    "numeric" => VerifyMode::Numeric,
                    other => return Err(CliError::Usage(format!("unknown mode {other:?}"))),
                }
            }
            "precision" => precision = parse_precision(value).map_err(CliError::Usage)?,
            _ => {
                let q = parse_rational(value).map_err(|e| CliError::Usage(format!("--{name}: {e}")))?;
                if asg.insert(name.to_string(), q).is_some() {
                    return Err(CliError::Usage(format!("--{name} given twice")));
                }
            }
        }
    }
    let report = match mode {
        VerifyMode::Auto => identities::verify(id, &asg, precision)?,
        VerifyMode::Exact => identities::verify_exact(id, &asg)?,
        VerifyMode::Numeric => identities::verify_numeric(id, &asg, precision)?,
    };
    writeln!(out, "{}", report.render())?;
    writeln!(out, "lhs = {}", report.lhs_value)?;
    writeln!(out, "rhs = {}", report.rhs_value)?;
    let entry = identities::lookup(id)?;
    if let Some(p) = &report.prefactor {
        writeln!(out, "prefactor = {p}")?;
        if let (1, Ok(r)) = (entry.rhs.len(), p.recip()) {
            // two-term identity: lhs = p * series, so series / lhs = 1/p
            writeln!(out, "ratio rhs-series/lhs = {r}")?;
        }
    }
    Ok(status(report.verdict == Verdict::Pass))
}
