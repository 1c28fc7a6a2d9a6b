//! `splinum`: tables, evaluation, generating-function expansion, series
//! checks and the identity suite from the command line.
//!
//! Exit codes: 0 success, 1 verification failure or non-convergence,
//! 2 usage or domain error.

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use splinum::analysis::{
    apostol_euler_series, bernstein_series_check, laplace_series_check, SeriesEvalReport, BERNSTEIN_TOL,
    LAPLACE_TOL,
};
use splinum::exact::parse_rational;
use splinum::suite::{exit_code, format_float, run_suite, Report, Status};
use splinum::{numbers, spline, Canonical, Error, GfKind, GfParams, Rational};

#[derive(Parser)]
#[command(name = "splinum", version, about = "Exact B-spline and Apostol-family arithmetic")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print rows 0..=max-n of a number family.
    Table(TableArgs),
    /// Evaluate the uniform B-spline of a given degree at a rational point.
    Eval(EvalArgs),
    /// Expand a generating function to a given order.
    Expand(ExpandArgs),
    /// Compare a truncated series with its closed form in floating point.
    Series(SeriesArgs),
    /// Run the identity suite.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Stirling2,
    Array,
    Eulerian,
    Frobenius,
    ApostolBernoulli,
    ApostolEuler,
    Geometric,
    Bspline,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long)]
    max_n: usize,
    /// Interval index for `bspline`.
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    p: i64,
    /// Column index for `array`.
    #[arg(long, default_value_t = 1)]
    c: usize,
    #[arg(long, value_enum, default_value = "csv")]
    format: TableFormat,
}

#[derive(Args)]
struct EvalArgs {
    /// Evaluate the uniform B-spline (the only evaluation target).
    #[arg(long, required = true)]
    spline: bool,
    #[arg(long)]
    degree: usize,
    #[arg(long, allow_hyphen_values = true)]
    x: String,
}

#[derive(Args)]
struct ExpandArgs {
    #[arg(long)]
    gf: String,
    /// `key=value`; keys c, d, p, n, rho, phi.
    #[arg(long = "param")]
    params: Vec<String>,
    #[arg(long)]
    order: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesIdentity {
    /// Laplace-transformed segment series; params p, omega, y.
    Laplace,
    /// Segment series against the Bernstein series; params p, omega, y.
    Bernstein,
    /// Stirling-type series for the Apostol-Euler numbers; params m, rho.
    ApostolEuler,
}

#[derive(Args)]
struct SeriesArgs {
    #[arg(long, value_enum)]
    identity: SeriesIdentity,
    /// `key=value` pairs, comma or space separated.
    #[arg(long, num_args = 1.., value_delimiter = ',')]
    params: Vec<String>,
    #[arg(long, default_value_t = 80)]
    terms: usize,
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value = "*")]
    filter: String,
    #[arg(long, default_value_t = 8)]
    max_n: usize,
    #[arg(long, value_enum, default_value = "text")]
    report: ReportFormat,
    /// Include per-check wall time (makes output nondeterministic).
    #[arg(long)]
    timing: bool,
    /// Include both sides for passing checks too.
    #[arg(long)]
    witnesses: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    ExitCode::from(run(cli, &mut io::stdout().lock()))
}

fn run(cli: Cli, out: &mut impl Write) -> u8 {
    let result = match cli.command {
        Command::Table(a) => table(&a, out).map(|()| 0),
        Command::Eval(a) => eval(&a, out).map(|()| 0),
        Command::Expand(a) => expand(&a, out).map(|()| 0),
        Command::Series(a) => series(&a, out),
        Command::Verify(a) => verify(&a, out),
    };
    result.unwrap_or_else(|e| {
        let _ = out.flush();
        eprintln!("splinum: {e}");
        match e {
            Error::Divergence(_) => 1,
            _ => 2,
        }
    })
}

fn io_err(e: impl std::fmt::Display) -> Error {
    Error::Resource(format!("write failed: {e}"))
}

fn table_rows(a: &TableArgs) -> Vec<Vec<Value>> {
    (0..=a.max_n)
        .map(|n| {
            match a.family {
                Family::Stirling2 => numbers::stirling2_table(n)[n].iter().map(Canonical::to_json).collect(),
                Family::Array => numbers::array_poly(a.c, n).coeffs().iter().map(Canonical::to_json).collect(),
                Family::Eulerian => numbers::eulerian_row(n).entries.iter().map(Canonical::to_json).collect(),
                Family::Frobenius => vec![numbers::frobenius_number(n).to_json()],
                Family::ApostolBernoulli => vec![numbers::apostol_bernoulli_number(n).to_json()],
                Family::ApostolEuler => vec![numbers::apostol_euler_number(n).to_json()],
                Family::Geometric => numbers::geometric_poly(n).coeffs().iter().map(Canonical::to_json).collect(),
                Family::Bspline => {
                    spline::bspline_segment(n, a.p).polynomial.coeffs().iter().map(Canonical::to_json).collect()
                }
            }
        })
        .collect()
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn table(a: &TableArgs, out: &mut impl Write) -> Result<(), Error> {
    let rows = table_rows(a);
    match a.format {
        TableFormat::Csv => {
            let mut w = csv::WriterBuilder::new().flexible(true).from_writer(out);
            w.write_record(["n", "values"]).map_err(io_err)?;
            for (n, row) in rows.iter().enumerate() {
                let mut rec = vec![n.to_string()];
                rec.extend(row.iter().map(scalar_text));
                w.write_record(&rec).map_err(io_err)?;
            }
            w.flush().map_err(io_err)
        }
        TableFormat::Json => {
            let v: Vec<Value> = rows
                .into_iter()
                .enumerate()
                .map(|(n, row)| {
                    let mut r = vec![json!(n)];
                    r.extend(row);
                    Value::Array(r)
                })
                .collect();
            writeln!(out, "{}", Value::Array(v)).map_err(io_err)
        }
    }
}

fn eval(a: &EvalArgs, out: &mut impl Write) -> Result<(), Error> {
    debug_assert!(a.spline);
    let x = parse_rational(&a.x)?;
    let y = spline::bspline_eval(a.degree, &x)?;
    writeln!(out, "{y}").map_err(io_err)
}

fn expand(a: &ExpandArgs, out: &mut impl Write) -> Result<(), Error> {
    let kind: GfKind = a.gf.parse()?;
    let params = GfParams::parse(a.params.iter().map(String::as_str))?;
    let e = splinum::exact::gf_expand(kind, &params, a.order)?;
    writeln!(out, "{}", e.to_json()).map_err(io_err)
}

struct SeriesParams(Vec<(String, String)>);

impl SeriesParams {
    fn parse(raw: &[String]) -> Result<Self, Error> {
        let mut pairs = Vec::new();
        for token in raw.iter().flat_map(|s| s.split_whitespace()) {
            let (k, v) = token
                .split_once('=')
                .ok_or_else(|| Error::Usage(format!("expected key=value, got {token:?}")))?;
            pairs.push((k.to_string(), v.to_string()));
        }
        Ok(Self(pairs))
    }

    fn raw(&self, key: &str) -> Option<&str> {
        self.0.iter().rev().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    fn rational(&self, key: &str) -> Result<Rational, Error> {
        let v = self.raw(key).ok_or_else(|| Error::Usage(format!("missing parameter {key}")))?;
        parse_rational(v)
    }

    fn natural(&self, key: &str) -> Result<usize, Error> {
        let v = self.raw(key).ok_or_else(|| Error::Usage(format!("missing parameter {key}")))?;
        v.parse().map_err(|_| Error::Usage(format!("{key} must be a natural number")))
    }

    fn check_keys(&self, allowed: &[&str]) -> Result<(), Error> {
        match self.0.iter().find(|(k, _)| !allowed.contains(&k.as_str())) {
            Some((k, _)) => Err(Error::Usage(format!("unknown parameter {k:?} (expected {})", allowed.join(", ")))),
            None => Ok(()),
        }
    }
}

fn series_json(r: &SeriesEvalReport) -> Value {
    json!({
        "id": r.id,
        "params": r.params,
        "terms": r.terms,
        "lhs": format_float(r.lhs),
        "rhs": format_float(r.rhs),
        "abs_error": format_float(r.abs_error),
        "last_term": format_float(r.last_term),
        "tolerance": format_float(r.tolerance),
        "converged": r.converged,
    })
}

fn series(a: &SeriesArgs, out: &mut impl Write) -> Result<u8, Error> {
    let ps = SeriesParams::parse(&a.params)?;
    let report = match a.identity {
        SeriesIdentity::Laplace | SeriesIdentity::Bernstein => {
            ps.check_keys(&["p", "omega", "y"])?;
            let p = ps.natural("p")?;
            let omega = ps.rational("omega")?;
            let y = ps.rational("y")?;
            if matches!(a.identity, SeriesIdentity::Laplace) {
                laplace_series_check(p, &omega, &y, a.terms, a.tol.unwrap_or(LAPLACE_TOL))?
            } else {
                bernstein_series_check(p, &omega, &y, a.terms, a.tol.unwrap_or(BERNSTEIN_TOL))?
            }
        }
        SeriesIdentity::ApostolEuler => {
            ps.check_keys(&["m", "rho"])?;
            let m = ps.natural("m")?;
            let rho = ps.rational("rho")?;
            apostol_euler_series(m, &rho, a.tol.unwrap_or(1e-12))?
        }
    };
    writeln!(out, "{}", series_json(&report)).map_err(io_err)?;
    Ok(if report.converged { 0 } else { 1 })
}

fn report_json(r: &Report, a: &VerifyArgs) -> Value {
    let c = &r.check;
    let mut m = serde_json::Map::new();
    m.insert("id".into(), json!(r.id));
    m.insert("params".into(), json!(c.params));
    m.insert("status".into(), json!(c.status.name()));
    let numeric = c.abs_error.is_some();
    if c.status != Status::Pass || numeric || a.witnesses {
        m.insert("lhs".into(), json!(c.lhs));
        m.insert("rhs".into(), json!(c.rhs));
    }
    if let Some(e) = c.abs_error {
        m.insert("abs_error".into(), json!(format_float(e)));
    }
    if a.timing {
        m.insert("elapsed_ms".into(), json!(format!("{:.3}", c.elapsed_ms)));
    }
    Value::Object(m)
}

fn verify(a: &VerifyArgs, out: &mut impl Write) -> Result<u8, Error> {
    let reports = run_suite(&a.filter, a.max_n)?;
    match a.report {
        ReportFormat::Json => {
            let v: Vec<Value> = reports.iter().map(|r| report_json(r, a)).collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("plain json")).map_err(io_err)?;
        }
        ReportFormat::Text => {
            let mut counts = [0usize; 3];
            for r in &reports {
                let c = &r.check;
                counts[c.status as usize] += 1;
                write!(out, "{:<14} {} [{}]", c.status.name(), r.id, c.params).map_err(io_err)?;
                if let Some(e) = c.abs_error {
                    write!(out, " abs_error={}", format_float(e)).map_err(io_err)?;
                }
                if a.timing {
                    write!(out, " {:.3}ms", c.elapsed_ms).map_err(io_err)?;
                }
                writeln!(out).map_err(io_err)?;
                if c.status == Status::Fail || a.witnesses {
                    writeln!(out, "    lhs: {}\n    rhs: {}", c.lhs, c.rhs).map_err(io_err)?;
                }
            }
            writeln!(out, "{} passed, {} failed, {} skipped", counts[0], counts[1], counts[2]).map_err(io_err)?;
        }
    }
    Ok(exit_code(&reports) as u8)
}
