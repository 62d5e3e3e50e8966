//! Command-line front end.
//!
//! Exit codes: 0 success, 1 computation error, 2 bad arguments, 3 a
//! verification that must hold came back FAILED.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::bell::{self, dobinski_sum, TailBound, WeightConvention};
use crate::error::Error;
use crate::exactnum::{newton_coefficients, Poly, Rational};
use crate::harness::ledger::{export_ledger, summary_table};
use crate::harness::verdict::IdentityVerdict;
use crate::harness::registry::{self, default_q_samples, unexpected_failures, RunConfig};
use crate::psi::PsiSequence;
use crate::stirling::{self, Family, Triangle};

pub const EXIT_OK: i32 = 0;
pub const EXIT_COMPUTATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_VERIFY_FAILED: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "umbral-stirling", version, about = "Exact q- and ψ-extended Stirling and Bell numbers")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print a Stirling-like triangle
    Table(TableArgs),
    /// Print Bell numbers (row sums of a second-kind triangle)
    Bell(BellArgs),
    /// Truncated Dobinski-type series for one Bell number
    Dobinski(DobinskiArgs),
    /// Run identity suites and write the ledger
    Verify(VerifyArgs),
    /// Expand ψ-falling or ψ-rising products, or convert to a Newton basis
    Expand(ExpandArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Pretty,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Route {
    Recurrence,
    Basis,
    PartialFractions,
    Compositions,
    Multisets,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Switch {
    On,
    Off,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Convention {
    Times,
    Divides,
}

impl From<Convention> for WeightConvention {
    fn from(c: Convention) -> Self {
        match c {
            Convention::Times => WeightConvention::Times,
            Convention::Divides => WeightConvention::Divides,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ExpandKind {
    Falling,
    Rising,
    Newton,
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_psi(s: &str) -> Result<PsiSequence, String> {
    PsiSequence::parse_spec(s).map_err(|e| e.to_string())
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// `--psi` / `--q` pair shared by table and bell.
#[derive(Args, Debug)]
pub struct Params {
    /// ψ-sequence: classical, q:<rational> or custom:<path>
    #[arg(long, value_parser = parse_psi)]
    pub psi: Option<PsiSequence>,
    /// q parameter, as p/q or an integer
    #[arg(long, value_parser = parse_rational)]
    pub q: Option<Rational>,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    #[arg(long, value_parser = parse_family)]
    pub family: Family,
    #[command(flatten)]
    pub params: Params,
    /// Last row
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    /// Construction route for tilde2
    #[arg(long, value_enum, default_value = "recurrence")]
    pub route: Route,
    /// Render cells as decimals with this many digits
    #[arg(long)]
    pub digits: Option<usize>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct BellArgs {
    #[arg(long, value_parser = parse_family, default_value = "tilde2")]
    pub family: Family,
    #[command(flatten)]
    pub params: Params,
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct DobinskiArgs {
    #[arg(long, value_parser = parse_psi, default_value = "classical")]
    pub psi: PsiSequence,
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value = "times")]
    pub convention: Convention,
    /// Apply q^(-C(r,2)) to the weight (q-Gauss sequences only)
    #[arg(long = "q17-factor", value_enum, default_value = "off")]
    pub q17_factor: Switch,
    #[arg(long, value_parser = parse_rational, default_value = "1/1000000000000000")]
    pub tol: Rational,
    #[arg(long, default_value_t = 100)]
    pub rcap: usize,
    #[arg(long, default_value_t = 12)]
    pub digits: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Suite id; repeat for several
    #[arg(long = "suite", required_unless_present = "all", conflicts_with = "all")]
    pub suites: Vec<String>,
    #[arg(long)]
    pub all: bool,
    #[arg(long = "max-n", default_value_t = 8)]
    pub max_n: usize,
    /// q sample; repeat for several (default 1, 2, 1/2, 3/5)
    #[arg(long = "q", value_parser = parse_rational)]
    pub q_samples: Vec<Rational>,
    /// json prints the ledger, pretty the summary table
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct ExpandArgs {
    #[arg(value_enum)]
    pub kind: ExpandKind,
    #[arg(long, value_parser = parse_psi, default_value = "classical")]
    pub psi: PsiSequence,
    /// Number of factors for falling/rising
    #[arg(long, default_value_t = 0)]
    pub k: usize,
    /// Monomial coefficients, lowest first, comma separated (newton)
    #[arg(long, value_delimiter = ',', value_parser = parse_rational)]
    pub poly: Vec<Rational>,
    /// Nodes, comma separated (newton; default ψ-values 0_ψ, 1_ψ, …)
    #[arg(long, value_delimiter = ',', value_parser = parse_rational)]
    pub nodes: Vec<Rational>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

enum Failure {
    Usage(String),
    Computation(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Computation(e)
    }
}

type Outcome = std::result::Result<(String, i32), Failure>;

/// Parses `args` (including the program name) and runs the command,
/// writing results to `stdout` or `--out` and diagnostics to `stderr`.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if code == EXIT_OK { stdout.write_all(rendered.as_bytes()) } else { stderr.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    let out_path = match &cli.command {
        Command::Table(a) => a.out.clone(),
        Command::Bell(a) => a.out.clone(),
        Command::Dobinski(a) => a.out.clone(),
        Command::Verify(a) => a.out.clone(),
        Command::Expand(_) => None,
    };
    let outcome = match &cli.command {
        Command::Table(a) => cmd_table(a),
        Command::Bell(a) => cmd_bell(a),
        Command::Dobinski(a) => cmd_dobinski(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Expand(a) => cmd_expand(a),
    };
    match outcome {
        Ok((text, code)) => {
            let written = match out_path {
                Some(path) => std::fs::write(&path, &text).map_err(|e| format!("cannot write {}: {e}", path.display())),
                None => stdout.write_all(text.as_bytes()).map_err(|e| e.to_string()),
            };
            match written {
                Ok(()) => code,
                Err(msg) => {
                    let _ = writeln!(stderr, "error: {msg}");
                    EXIT_COMPUTATION
                }
            }
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Computation(e)) => {
            let _ = writeln!(stderr, "{}", json!({"error": e.to_string()}));
            EXIT_COMPUTATION
        }
    }
}

/// Resolves `--psi`/`--q` for a family: ψ families take either (`--q r`
/// meaning `q:r`, neither meaning classical); q families need `--q` (or a
/// `q:` ψ-spec) and default to `q = 1`.
enum Resolved {
    Psi(PsiSequence),
    Q(Rational),
}

fn resolve(family: Family, params: &Params) -> std::result::Result<Resolved, Failure> {
    match (&params.psi, &params.q) {
        (Some(_), Some(_)) => Err(Failure::Usage("give either --psi or --q, not both".into())),
        (psi, q) if family.is_psi_family() => Ok(Resolved::Psi(match (psi, q) {
            (Some(p), _) => p.clone(),
            (None, Some(q)) => PsiSequence::q_gauss(q.clone()),
            (None, None) => PsiSequence::classical(),
        })),
        (Some(p), None) => match p.q() {
            Some(q) => Ok(Resolved::Q(q)),
            None if p.label() == "classical" => Ok(Resolved::Q(Rational::one())),
            None => Err(Failure::Usage(format!("family {family} takes --q, not a custom ψ-sequence"))),
        },
        (None, q) => Ok(Resolved::Q(q.clone().unwrap_or_else(Rational::one))),
    }
}

fn build_table(family: Family, params: &Params, n: usize, route: Route) -> std::result::Result<Triangle, Failure> {
    let resolved = resolve(family, params)?;
    if route != Route::Recurrence && family != Family::Tilde2 {
        return Err(Failure::Usage("--route applies to tilde2 only".into()));
    }
    let table = match resolved {
        Resolved::Psi(seq) => match family {
            Family::Tilde2 => match route {
                Route::Recurrence => stirling::tilde2_by_recurrence(&seq, n)?,
                Route::Basis => stirling::tilde2_by_basis(&seq, n)?,
                Route::PartialFractions => stirling::tilde2_triangle_by_partial_fractions(&seq, n)?,
                Route::Compositions => stirling::tilde2_triangle_by_compositions(&seq, n)?,
                Route::Multisets => {
                    let mut rows = Vec::with_capacity(n + 1);
                    for row in 0..=n {
                        rows.push((0..=row).map(|k| stirling::tilde2_by_multisets(&seq, row, k)).collect::<crate::Result<Vec<_>>>()?);
                    }
                    Triangle::new(Family::Tilde2, object(seq.describe()), rows)
                }
            },
            Family::Tilde1 => stirling::tilde1(&seq, n)?,
            _ => stirling::cycle1(&seq, n)?,
        },
        Resolved::Q(q) => match family {
            Family::Carlitz2 => stirling::carlitz2(&q, n)?,
            Family::Inv2 => stirling::inv2(&q, n)?,
            _ => stirling::cigl2(&q, n)?,
        },
    };
    Ok(table)
}

fn object(v: Value) -> serde_json::Map<String, Value> {
    match v {
        Value::Object(m) => m,
        _ => serde_json::Map::new(),
    }
}

fn render_table(t: &Triangle, format: Format, digits: Option<usize>) -> String {
    let Some(d) = digits else {
        return match format {
            Format::Csv => t.to_csv(),
            Format::Json => t.to_json() + "\n",
            Format::Pretty => t.to_pretty(),
        };
    };
    let cell = |v: &Rational| v.to_decimal(d);
    match format {
        Format::Csv => {
            let mut out = String::from("n,k,value\n");
            for (n, row) in t.rows().iter().enumerate() {
                for (k, v) in row.iter().enumerate() {
                    out += &format!("{n},{k},{}\n", cell(v));
                }
            }
            out
        }
        Format::Json => {
            let rows: Vec<Vec<String>> = t.rows().iter().map(|r| r.iter().map(cell).collect()).collect();
            json!({"family": t.family(), "params": t.params(), "rows": rows}).to_string() + "\n"
        }
        Format::Pretty => {
            let mut out = String::new();
            for (n, row) in t.rows().iter().enumerate() {
                let cells: Vec<String> = row.iter().map(cell).collect();
                out += &format!("{n}: {}\n", cells.join("  "));
            }
            out
        }
    }
}

fn cmd_table(a: &TableArgs) -> Outcome {
    let t = build_table(a.family, &a.params, a.n, a.route)?;
    Ok((render_table(&t, a.format, a.digits), EXIT_OK))
}

fn cmd_bell(a: &BellArgs) -> Outcome {
    if !a.family.is_second_kind() {
        return Err(Failure::Usage(format!("Bell numbers need a second-kind family, got {}", a.family)));
    }
    let t = build_table(a.family, &a.params, a.n, Route::Recurrence)?;
    let sums: Vec<Rational> = (0..=a.n).map(|n| t.row_sum(n)).collect();
    let text = match a.format {
        Format::Csv => {
            let mut out = String::from("n,value\n");
            for (n, v) in sums.iter().enumerate() {
                out += &format!("{n},{v}\n");
            }
            out
        }
        Format::Json => {
            json!({"family": a.family, "params": t.params(), "values": sums}).to_string() + "\n"
        }
        Format::Pretty => sums.iter().enumerate().map(|(n, v)| format!("B({n}) = {v}\n")).collect(),
    };
    Ok((text, EXIT_OK))
}

fn cmd_dobinski(a: &DobinskiArgs) -> Outcome {
    if !a.tol.is_positive() {
        return Err(Failure::Usage("--tol must be positive".into()));
    }
    let q17 = a.q17_factor == Switch::On;
    let convention = WeightConvention::from(a.convention);
    let approx = dobinski_sum(&a.psi, a.n, convention, q17, &a.tol, a.rcap)?;
    let exact = bell::bell_tilde(&a.psi, a.n)?.get(a.n).clone();
    let mut report = approx.to_json(a.digits);
    report["exact"] = json!(exact.to_string());
    report["agrees"] = match bell::judge(&approx, &exact, &a.tol) {
        Some(b) => json!(b),
        None => Value::Null,
    };
    if approx.tail_bound == TailBound::Infinite {
        let message = json!({
            "error": "series did not converge within the caps",
            "partial_sum": approx.partial_sum.to_string(),
            "terms_used": approx.terms_used,
            "exact": exact.to_string(),
        });
        return Ok((message.to_string() + "\n", EXIT_COMPUTATION));
    }
    Ok((serde_json::to_string_pretty(&report).expect("json") + "\n", EXIT_OK))
}

fn cmd_verify(a: &VerifyArgs) -> Outcome {
    let ids: Vec<&str> = if a.all { registry::suite_ids() } else { a.suites.iter().map(String::as_str).collect() };
    for id in &ids {
        if let Err(e) = registry::find_suite(id) {
            return Err(Failure::Usage(e.to_string()));
        }
    }
    let q_samples = if a.q_samples.is_empty() { default_q_samples() } else { a.q_samples.clone() };
    let config = RunConfig::new(a.max_n, q_samples);
    let verdicts = registry::run_suites(&ids, &config)?;
    let code = verify_exit_code(&verdicts);
    let text = match a.format {
        Format::Pretty => summary_table(&verdicts),
        Format::Json | Format::Csv => export_ledger(&verdicts),
    };
    Ok((text, code))
}

/// 3 when a verdict expected to hold is FAILED, else 0.
pub fn verify_exit_code(verdicts: &[IdentityVerdict]) -> i32 {
    if unexpected_failures(verdicts).is_empty() {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAILED
    }
}

fn cmd_expand(a: &ExpandArgs) -> Outcome {
    let coeffs: Vec<Rational> = match a.kind {
        ExpandKind::Falling => a.psi.falling_poly(a.k)?.into_coeffs(),
        ExpandKind::Rising => a.psi.rising_poly(a.k)?.into_coeffs(),
        ExpandKind::Newton => {
            let p = Poly::from_coeffs(a.poly.clone());
            let nodes = if a.nodes.is_empty() {
                a.psi.values_below(p.degree().unwrap_or(0))?
            } else {
                a.nodes.clone()
            };
            newton_coefficients(&p, &nodes)?
        }
    };
    let text = match a.format {
        Format::Json => json!(coeffs).to_string() + "\n",
        Format::Csv => {
            let mut out = String::from("k,value\n");
            for (k, c) in coeffs.iter().enumerate() {
                out += &format!("{k},{c}\n");
            }
            out
        }
        Format::Pretty => match a.kind {
            ExpandKind::Newton => {
                coeffs.iter().enumerate().map(|(k, c)| format!("a_{k} = {c}\n")).collect()
            }
            _ => format!("{:?}\n", Poly::from_coeffs(coeffs)),
        },
    };
    Ok((text, EXIT_OK))
}
