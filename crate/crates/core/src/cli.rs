//! Command-line front end: sequence tables, identity verification and the
//! distinct-part-sum recurrence check.
//!
//! Exit codes: 0 success, 1 identity violation, 2 usage error.

use std::io::{self, Write};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Number, Value};

use crate::gfcatalog::{
    build_gf, verify_all_with, verify_with_budget, Budget, CatalogError, Oracle, ReportRecord,
    Variant, VariantSpec, VerificationReport, DEFAULT_ELLS, DEFAULT_KS,
};
use crate::rho::{recurrence_sides, rho_table};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "rho-partitions",
    version,
    about = "Tables and identity checks for rho partition functions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print rho_variant(n) for n = 0..=limit
    Table(TableArgs),
    /// Check one generating function against enumeration
    Verify(VerifyArgs),
    /// Check every generating function, sweeping ell and k
    VerifyAll(VerifyAllArgs),
    /// Check 2 rho_a(n) = n (rho(n) - 1) + 2 a(n/2) for even n <= limit
    Recurrence(RecurrenceArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Plain,
    Csv,
    Json,
}

#[derive(Debug, Args)]
struct VariantArgs {
    /// One of: rho, rho-lregular, rho-over, rho-over-odd, rho-over-even,
    /// rho-over-lregular, rho-kcolored, rho-cubic, rho-pod, rho-ped, rho-epsilon
    #[arg(long)]
    variant: String,
    /// ell for the regular variants (>= 2)
    #[arg(long)]
    ell: Option<u32>,
    /// k for rho-kcolored (>= 1)
    #[arg(long)]
    colors: Option<u32>,
}

impl VariantArgs {
    fn parse(&self) -> Result<Variant, CatalogError> {
        Variant::from_name(&self.variant, self.ell, self.colors)
    }
}

#[derive(Debug, Args)]
struct TableArgs {
    #[command(flatten)]
    variant: VariantArgs,
    #[arg(long, default_value_t = 40)]
    limit: usize,
    #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
    format: OutputFormat,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[command(flatten)]
    variant: VariantArgs,
    #[arg(long, default_value_t = 60)]
    limit: usize,
    /// combinator, direct-enumeration (or direct), or both
    #[arg(long, default_value = "combinator")]
    oracle: String,
    #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
    format: OutputFormat,
}

#[derive(Debug, Args)]
struct VerifyAllArgs {
    #[arg(long, default_value_t = 60)]
    limit: usize,
    /// Comma-separated ell values for the regular variants
    #[arg(long, value_delimiter = ',', default_values_t = DEFAULT_ELLS)]
    ell: Vec<u32>,
    /// Comma-separated k values for rho-kcolored
    #[arg(long, value_delimiter = ',', default_values_t = DEFAULT_KS)]
    colors: Vec<u32>,
    /// Defaults to both when the limit allows direct enumeration, else combinator
    #[arg(long)]
    oracle: Option<String>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
    format: OutputFormat,
}

#[derive(Debug, Args)]
struct RecurrenceArgs {
    #[arg(long, default_value_t = 80)]
    limit: usize,
    #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
    format: OutputFormat,
}

enum Failure {
    Usage(String),
    Io(io::Error),
}

impl From<CatalogError> for Failure {
    fn from(e: CatalogError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_USAGE
                }
            };
        }
    };
    let result = match cli.command {
        Command::Table(a) => cmd_table(&a, out),
        Command::Verify(a) => cmd_verify(&a, out),
        Command::VerifyAll(a) => cmd_verify_all(&a, out),
        Command::Recurrence(a) => cmd_recurrence(&a, out),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            let _ = writeln!(err, "run with --help for usage");
            EXIT_USAGE
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn big_json(v: &impl ToString) -> Value {
    Value::Number(Number::from_str(&v.to_string()).expect("integers are valid JSON numbers"))
}

fn params_json(v: Variant) -> Value {
    let mut params = serde_json::Map::new();
    if let Some(ell) = v.ell() {
        params.insert("ell".into(), json!(ell));
    }
    if let Some(k) = v.k() {
        params.insert("k".into(), json!(k));
    }
    Value::Object(params)
}

fn cmd_table(a: &TableArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let variant = a.variant.parse()?;
    let rows = rho_table(variant.family(), a.limit);
    match a.format {
        OutputFormat::Plain => {
            writeln!(out, "# {variant}")?;
            for r in &rows {
                writeln!(out, "{} {}", r.n, r.value)?;
            }
        }
        OutputFormat::Csv => {
            writeln!(out, "n,value")?;
            for r in &rows {
                writeln!(out, "{},{}", r.n, r.value)?;
            }
        }
        OutputFormat::Json => {
            let values: Vec<Value> = rows
                .iter()
                .map(|r| json!({ "n": r.n, "value": big_json(&r.value) }))
                .collect();
            let doc = json!({
                "variant": variant.name(),
                "params": params_json(variant),
                "values": values,
            });
            writeln!(out, "{doc}")?;
        }
    }
    Ok(EXIT_OK)
}

const REPORT_CSV_HEADER: &str = "variant,ell,k,order,oracle,mismatch_count,first_mismatch_n";

fn opt(v: Option<impl ToString>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn report_csv_row(r: &VerificationReport) -> String {
    let v = r.spec.variant();
    format!(
        "{},{},{},{},{},{},{}",
        v.name(),
        opt(v.ell()),
        opt(v.k()),
        r.spec.order(),
        r.oracle.name(),
        r.mismatches.len(),
        opt(r.mismatches.first().map(|m| m.n)),
    )
}

fn report_plain(r: &VerificationReport, out: &mut dyn Write) -> io::Result<()> {
    let status = if r.is_verified() {
        "verified"
    } else {
        "FAILED"
    };
    writeln!(
        out,
        "{} order={} oracle={}: {status} ({} mismatches, {} ms)",
        r.spec.variant(),
        r.spec.order(),
        r.oracle,
        r.mismatches.len(),
        r.elapsed.as_millis(),
    )?;
    for m in &r.mismatches {
        writeln!(out, "  n={} series={} oracle={}", m.n, m.series, m.oracle)?;
    }
    Ok(())
}

fn render_reports(
    reports: &[VerificationReport],
    format: OutputFormat,
    single: bool,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    match format {
        OutputFormat::Plain => {
            for r in reports {
                report_plain(r, out)?;
            }
            if !single {
                let failed = reports.iter().filter(|r| !r.is_verified()).count();
                writeln!(out, "{} reports, {failed} with mismatches", reports.len())?;
            }
        }
        OutputFormat::Csv => {
            writeln!(out, "{REPORT_CSV_HEADER}")?;
            for r in reports {
                writeln!(out, "{}", report_csv_row(r))?;
            }
        }
        OutputFormat::Json => {
            let records: Vec<ReportRecord> = reports.iter().map(ReportRecord::from).collect();
            let doc = if single {
                serde_json::to_string(&records[0])
            } else {
                serde_json::to_string(&records)
            }
            .map_err(io::Error::from)?;
            writeln!(out, "{doc}")?;
        }
    }
    Ok(())
}

fn exit_for(reports: &[VerificationReport]) -> i32 {
    if reports.iter().all(VerificationReport::is_verified) {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    }
}

fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let variant = a.variant.parse()?;
    let oracle: Oracle = a.oracle.parse()?;
    let spec = VariantSpec::new(variant, a.limit)?;
    let report = verify_with_budget(&spec, oracle, &Budget::default())?;
    let reports = [report];
    render_reports(&reports, a.format, true, out)?;
    Ok(exit_for(&reports))
}

fn cmd_verify_all(a: &VerifyAllArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let budget = Budget::default();
    let oracle = match &a.oracle {
        Some(name) => name.parse()?,
        None => Oracle::widest_within(a.limit, &budget)?,
    };
    let reports = verify_all_with(a.limit, &a.ell, &a.colors, oracle, &budget, &build_gf)?;
    render_reports(&reports, a.format, false, out)?;
    Ok(exit_for(&reports))
}

fn cmd_recurrence(a: &RecurrenceArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    if a.limit < 2 {
        return Err(Failure::Usage(format!(
            "--limit must be at least 2, got {}",
            a.limit
        )));
    }
    let checks: Vec<_> = (2..=a.limit)
        .step_by(2)
        .map(|n| recurrence_sides(n).expect("n is even and at least 2"))
        .collect();
    match a.format {
        OutputFormat::Plain => {
            writeln!(out, "# n rho_a 2*rho_a n*(rho-1)+2*a(n/2) holds")?;
            for c in &checks {
                writeln!(out, "{} {} {} {} {}", c.n, c.rho_a, c.lhs, c.rhs, c.holds())?;
            }
        }
        OutputFormat::Csv => {
            writeln!(out, "n,rho_a,lhs,rhs,holds")?;
            for c in &checks {
                writeln!(out, "{},{},{},{},{}", c.n, c.rho_a, c.lhs, c.rhs, c.holds())?;
            }
        }
        OutputFormat::Json => {
            let rows: Vec<Value> = checks
                .iter()
                .map(|c| {
                    json!({
                        "n": c.n,
                        "rho": big_json(&c.rho),
                        "rho_a": big_json(&c.rho_a),
                        "merca_a": big_json(&c.merca_a),
                        "lhs": big_json(&c.lhs),
                        "rhs": big_json(&c.rhs),
                        "holds": c.holds(),
                    })
                })
                .collect();
            writeln!(out, "{}", Value::Array(rows))?;
        }
    }
    Ok(if checks.iter().all(|c| c.holds()) {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    })
}
