//! Command-line front end.
//!
//! Subcommands: `count` (one census query), `table` (evaluations over a
//! degree range, CSV or JSON), `derive` (closed-form invariants over a
//! generic jet), `classify` (germ files), and `verify` (the full
//! cross-check suite). A hidden `count-p` exposes the marked-direction
//! counts for debugging.
//!
//! Exit statuses are stable: 0 success, 1 verification failure, 2 usage
//! error, 3 internal invariant violation, 4 domain error (point not on the
//! curve). Setting `CURVE_CENSUS_COLOR=0` disables ANSI colors.

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::IsTerminal;
use std::path::PathBuf;

use crate::algebra::format_rational;
use crate::counts::{Census, CountError, SingSpec};
use crate::normalform::{
    a_invariants, classify, d_invariants, generic_a_jet, generic_d_jet, parse_germ,
    render_invariant, NormalFormError,
};

/// Exit status for a successful run.
pub const EXIT_OK: i32 = 0;
/// Exit status when `verify` finds a failing check.
pub const EXIT_VERIFY_FAILED: i32 = 1;
/// Exit status for usage errors and unsupported keys.
pub const EXIT_USAGE: i32 = 2;
/// Exit status for internal invariant violations.
pub const EXIT_INTERNAL: i32 = 3;
/// Exit status for domain errors such as a point off the curve.
pub const EXIT_DOMAIN: i32 = 4;

#[derive(Parser)]
#[command(
    name = "curve-census",
    version,
    about = "Exact counts of singular plane curves",
    propagate_version = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count degree-d curves with one prescribed singularity.
    Count(CountArgs),
    /// Marked-direction counts (debugging aid).
    #[command(name = "count-p", hide = true)]
    CountP(CountPArgs),
    /// Tabulate every supported count over a degree range.
    Table(TableArgs),
    /// Derive a closed-form invariant over a generic jet.
    Derive(DeriveArgs),
    /// Classify the germ in a JSON file.
    Classify(ClassifyArgs),
    /// Run the full internal cross-check suite.
    Verify,
}

#[derive(Args)]
struct CountArgs {
    /// Singularity tag: A1..A7, D4..D7, E6, E7.
    #[arg(long)]
    sing: String,
    /// Number of generic lines the singular point must lie on.
    #[arg(long, default_value_t = 0)]
    n: u32,
    /// Evaluate the closed form at this degree.
    #[arg(long)]
    d: Option<i64>,
    /// Print the closed-form polynomial.
    #[arg(long)]
    symbolic: bool,
    /// Emit the full record as JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct CountPArgs {
    /// Singularity tag: A2..A7, D4..D7, E6, E7.
    #[arg(long)]
    sing: String,
    /// Number of generic lines through the singular point.
    #[arg(long, default_value_t = 0)]
    n: u32,
    /// Number of generic lines the marked direction must point along.
    #[arg(long, default_value_t = 0)]
    m: u32,
    /// Evaluate the closed form at this degree.
    #[arg(long)]
    d: Option<i64>,
    /// Emit the full record as JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct TableArgs {
    /// Smallest degree column.
    #[arg(long, default_value_t = 2)]
    d_min: i64,
    /// Largest degree column.
    #[arg(long, default_value_t = 10)]
    d_max: i64,
    /// Output format.
    #[arg(long, default_value = "csv", value_parser = ["csv", "json"])]
    format: String,
    /// Upper bound accepted for --d-max, to keep output sizes sane.
    #[arg(long, default_value_t = 50)]
    cap: i64,
}

#[derive(Args)]
struct DeriveArgs {
    /// Invariant family: A or D.
    series: String,
    /// Invariant index.
    k: u32,
}

#[derive(Args)]
struct ClassifyArgs {
    /// Path to a germ file.
    germ_file: PathBuf,
    /// Truncation order used before reporting the germ as unresolved.
    #[arg(long, default_value_t = 12)]
    max_order: u32,
}

/// One census answer in machine-readable form.
#[derive(Debug, Serialize, Deserialize)]
pub struct OutputRecord {
    pub singularity: String,
    pub n: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
    pub polynomial: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub evaluation: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub warning: Option<String>,
}

/// One row of the table output: a count for a fixed `(singularity, n)`,
/// evaluated at each degree column.
#[derive(Debug, Serialize, Deserialize)]
pub struct TableRow {
    pub singularity: String,
    pub n: u32,
    pub polynomial: String,
    pub values: BTreeMap<String, String>,
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<CountError> for Failure {
    fn from(err: CountError) -> Self {
        let code = match err {
            CountError::UnsupportedKey { .. } => EXIT_USAGE,
            _ => EXIT_INTERNAL,
        };
        Failure {
            code,
            message: err.to_string(),
        }
    }
}

impl From<NormalFormError> for Failure {
    fn from(err: NormalFormError) -> Self {
        let code = match err {
            NormalFormError::Parse(_) => EXIT_USAGE,
            NormalFormError::NotOnCurve { .. } => EXIT_DOMAIN,
            _ => EXIT_INTERNAL,
        };
        Failure {
            code,
            message: err.to_string(),
        }
    }
}

/// Parse `argv` and run; returns the process exit status.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return if err.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let outcome = match cli.command {
        Command::Count(args) => cmd_count(&args),
        Command::CountP(args) => cmd_count_p(&args),
        Command::Table(args) => cmd_table(&args),
        Command::Derive(args) => cmd_derive(&args),
        Command::Classify(args) => cmd_classify(&args),
        Command::Verify => return cmd_verify(),
    };
    match outcome {
        Ok(()) => EXIT_OK,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            failure.code
        }
    }
}

fn color_enabled() -> bool {
    if std::env::var("CURVE_CENSUS_COLOR").as_deref() == Ok("0") {
        return false;
    }
    std::io::stdout().is_terminal()
}

fn paint(text: &str, code: &str, enabled: bool) -> String {
    if enabled {
        format!("\x1b[{code}m{text}\x1b[0m")
    } else {
        text.to_string()
    }
}

fn validity_warning(spec: SingSpec, d: i64) -> Option<String> {
    let bound = spec.validity_bound();
    (d < bound).then(|| {
        format!(
            "d = {d} is below the validity bound {bound} for {spec}; \
             the closed form is guaranteed to count curves only for d >= {bound}"
        )
    })
}

fn print_record(record: &OutputRecord, symbolic: bool, json: bool) {
    if json {
        println!("{}", serde_json::to_string(record).expect("record serializes"));
        return;
    }
    if symbolic || record.evaluation.is_none() {
        println!("{}", record.polynomial);
    }
    if let Some(evaluation) = &record.evaluation {
        println!("{evaluation}");
    }
    if let Some(warning) = &record.warning {
        eprintln!("{}", paint(&format!("warning: {warning}"), "33", color_enabled()));
    }
}

fn cmd_count(args: &CountArgs) -> Result<(), Failure> {
    let spec = SingSpec::parse(&args.sing)?;
    let census = Census::new();
    let poly = census.n_final(spec, args.n)?;
    let record = OutputRecord {
        singularity: spec.to_string(),
        n: args.n,
        m: None,
        polynomial: poly.to_string(),
        d: args.d,
        evaluation: args.d.map(|d| format_rational(&poly.eval(d))),
        warning: args.d.and_then(|d| validity_warning(spec, d)),
    };
    print_record(&record, args.symbolic, args.json);
    Ok(())
}

fn cmd_count_p(args: &CountPArgs) -> Result<(), Failure> {
    let spec = SingSpec::parse(&args.sing)?;
    let census = Census::new();
    let poly = census.n_p(spec, args.n, args.m)?;
    let record = OutputRecord {
        singularity: spec.to_string(),
        n: args.n,
        m: Some(args.m),
        polynomial: poly.to_string(),
        d: args.d,
        evaluation: args.d.map(|d| format_rational(&poly.eval(d))),
        warning: args.d.and_then(|d| validity_warning(spec, d)),
    };
    print_record(&record, args.d.is_none(), args.json);
    Ok(())
}

fn cmd_table(args: &TableArgs) -> Result<(), Failure> {
    if args.d_min < 1 || args.d_min > args.d_max || args.d_max > args.cap {
        return Err(Failure::usage(format!(
            "bad degree range: need 1 <= d-min <= d-max <= {} (the cap), got {}..{}",
            args.cap, args.d_min, args.d_max
        )));
    }
    let census = Census::new();
    let degrees: Vec<i64> = (args.d_min..=args.d_max).collect();
    let mut rows = Vec::new();
    for spec in SingSpec::all() {
        for n in 0..=2 {
            let poly = census.n_final(spec, n)?;
            let values: BTreeMap<String, String> = degrees
                .iter()
                .map(|&d| (d.to_string(), format_rational(&poly.eval(d))))
                .collect();
            rows.push(TableRow {
                singularity: spec.to_string(),
                n,
                polynomial: poly.to_string(),
                values,
            });
        }
    }
    match args.format.as_str() {
        "json" => {
            println!("{}", serde_json::to_string_pretty(&rows).expect("rows serialize"));
        }
        _ => {
            let header: Vec<String> = ["singularity".to_string(), "n".to_string()]
                .into_iter()
                .chain(degrees.iter().map(|d| d.to_string()))
                .collect();
            println!("{}", header.join(","));
            for row in &rows {
                let cells: Vec<String> = [row.singularity.clone(), row.n.to_string()]
                    .into_iter()
                    .chain(degrees.iter().map(|d| row.values[&d.to_string()].clone()))
                    .collect();
                println!("{}", cells.join(","));
            }
        }
    }
    Ok(())
}

fn cmd_derive(args: &DeriveArgs) -> Result<(), Failure> {
    let k = args.k;
    let rendered = match args.series.as_str() {
        "A" | "a" => {
            if k < 3 {
                return Err(Failure::usage(format!(
                    "the A-series invariants start at k = 3, got k = {k}"
                )));
            }
            if k > 7 {
                eprintln!("note: k = {k} is beyond the printed closed forms");
            }
            let inv = a_invariants(&generic_a_jet(k), k).map_err(Failure::from)?;
            render_invariant(inv.a(k).expect("requested index was computed"))
        }
        "D" | "d" => {
            if k < 6 {
                return Err(Failure::usage(format!(
                    "the D-series invariants start at k = 6, got k = {k}"
                )));
            }
            if k > 8 {
                eprintln!("note: k = {k} is beyond the printed closed forms");
            }
            let inv = d_invariants(&generic_d_jet(k - 2), k).map_err(Failure::from)?;
            let value = inv.d(k).expect("requested index was computed");
            if k >= 7 {
                // Higher invariants are geometrically meaningful only where
                // the previous one vanishes; report them on that locus,
                // which here means dropping every f40 term.
                render_invariant(&value.with_var_zeroed(4, 0))
            } else {
                render_invariant(value)
            }
        }
        other => {
            return Err(Failure::usage(format!(
                "unknown invariant family {other:?}: expected A or D"
            )))
        }
    };
    println!("{rendered}");
    Ok(())
}

fn cmd_classify(args: &ClassifyArgs) -> Result<(), Failure> {
    let text = std::fs::read_to_string(&args.germ_file).map_err(|e| {
        Failure::usage(format!(
            "cannot read germ file {}: {e}",
            args.germ_file.display()
        ))
    })?;
    let (germ, point) = parse_germ(&text)?;
    let outcome = classify(&germ, (&point.0, &point.1), args.max_order)?;
    println!("{outcome}");
    Ok(())
}

fn cmd_verify() -> i32 {
    let census = Census::new();
    let report = census.verify_all();
    let color = color_enabled();
    let mut failed = 0usize;
    let total = report.checks.len();
    for check in &report.checks {
        if check.passed {
            println!("{} {}", paint("ok", "32", color), check.name);
        } else {
            failed += 1;
            println!(
                "{} {}: {}",
                paint("FAIL", "31", color),
                check.name,
                check.detail
            );
        }
    }
    if failed == 0 {
        println!("all {total} checks passed");
        EXIT_OK
    } else {
        println!("{failed} of {total} checks failed");
        EXIT_VERIFY_FAILED
    }
}
