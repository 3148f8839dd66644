//! `setopt` command-line tool.
//!
//! Reports go to stdout as JSON. Failures print a single line
//! `error: kind=<kind> message=<text>` to stderr and exit with status 1 for
//! invalid input or 2 for an internal consistency violation.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use setopt::asymptotics::{check_condition_12, default_directions, default_lambda_schedule, f_g_infty};
use setopt::crossval::{oracle_problem, oracle_random};
use setopt::diagnostics::{condition_12_verdict, default_lambda_probe, default_transfer_lambdas};
use setopt::{
    colevel, colevel_at_set, horizon_limsup, report, solve, weierstrass_report, PointCloudSet, RayOptions,
    ScalarField, SetOptError, SetValuedProblem,
};

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Lib(#[from] SetOptError),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{0}")]
    Csv(#[from] csv::Error),
    #[error("{0}")]
    Usage(String),
    /// The report was emitted but a consistency check inside it failed.
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    fn kind(&self) -> &'static str {
        match self {
            CliError::Lib(e) => e.kind(),
            CliError::Io { .. } => "io",
            CliError::Csv(_) => "csv",
            CliError::Usage(_) => "usage",
            CliError::Failed(_) => "internal",
        }
    }

    fn exit_code(&self) -> u8 {
        match self {
            CliError::Lib(e) if e.is_internal() => 2,
            CliError::Failed(_) => 2,
            _ => 1,
        }
    }
}

type CliResult<T> = Result<T, CliError>;

#[derive(Parser)]
#[command(name = "setopt", version, about = "Scalarization solver and existence diagnostics for set optimization")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Minimizers of the scalarization and the (strictly) weakly efficient sets.
    Solve { file: PathBuf },
    /// The scalar field on every grid point, as JSON and optionally CSV.
    Scalarize {
        file: PathBuf,
        /// Also write `x1..xn,psi` rows to this CSV file.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Colevel set at `λq`, or at a given set with `--set`.
    Colevel {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true, required_unless_present = "set", conflicts_with = "set")]
        lambda: Option<f64>,
        /// Points of a finite set `B`, as `y1,y2;y1,y2;...`.
        #[arg(long, allow_hyphen_values = true)]
        set: Option<String>,
    },
    /// Ray estimates of the asymptotic function, the asymptotic condition `F^{G,∞}(u) > M_F^q` and the horizon of colevel sets.
    Asymptotic(AsymptoticArgs),
    /// Hypothesis checks. Without flags, or with `--all`, the full report.
    Check(CheckArgs),
    /// Cross-validation of closed forms against brute-force oracles.
    Oracle {
        /// `random`, or a problem file.
        target: String,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        count: usize,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Writes every built-in example problem as JSON into a directory.
    Fixtures {
        #[arg(long, default_value = "fixtures")]
        out: PathBuf,
    },
}

#[derive(Args)]
struct AsymptoticArgs {
    file: PathBuf,
    /// Directions as `u1,u2;u1,u2;...`; defaults to ±e_i and the diagonals.
    #[arg(long, allow_hyphen_values = true)]
    directions: Option<String>,
    #[arg(long, default_value_t = setopt::asymptotics::DEFAULT_T_MIN)]
    t_min: f64,
    #[arg(long, default_value_t = setopt::asymptotics::DEFAULT_T_MAX)]
    t_max: f64,
    #[arg(long, default_value_t = setopt::asymptotics::DEFAULT_STEPS)]
    steps: usize,
    /// Length of the schedule `λ_n = M + 1/n` for the horizon estimate.
    #[arg(long, default_value_t = 10)]
    lambda_count: usize,
    /// Explicit strictly decreasing λ schedule, comma separated.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "lambda_count")]
    lambdas: Option<String>,
    #[arg(long)]
    radius_threshold: Option<f64>,
    /// Writes the ray traces as CSV.
    #[arg(long)]
    trace_csv: Option<PathBuf>,
}

#[derive(Args)]
struct CheckArgs {
    file: PathBuf,
    #[arg(long)]
    srgi: bool,
    #[arg(long)]
    sgicc: bool,
    #[arg(long)]
    cond12: bool,
    #[arg(long)]
    transfer: bool,
    #[arg(long)]
    all: bool,
    /// Restrict the problem to grid points with `‖x‖ <= R` first.
    #[arg(long)]
    restrict: Option<f64>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = write!(std::io::stdout().lock(), "{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let text = e.to_string();
            let head = text.split("\n\n").next().unwrap_or_default().trim_start_matches("error: ");
            return fail(&CliError::Usage(head.split_whitespace().collect::<Vec<_>>().join(" ")));
        }
    };
    match configure_threads().and_then(|()| run(cli.command)) {
        Ok(out) => {
            emit(&out);
            ExitCode::SUCCESS
        }
        Err(e) => fail(&e),
    }
}

/// Writes a report to stdout. A closed pipe is not an error for a batch tool.
fn emit(text: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn fail(e: &CliError) -> ExitCode {
    let message = e.to_string().replace('\n', " ");
    eprintln!("error: kind={} message={message}", e.kind());
    ExitCode::from(e.exit_code())
}

fn configure_threads() -> CliResult<()> {
    let Ok(raw) = std::env::var("SETOPT_THREADS") else { return Ok(()) };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| CliError::Usage(format!("SETOPT_THREADS must be a positive integer, got {raw:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::Usage(format!("cannot configure thread pool: {e}")))
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn load(path: &Path) -> CliResult<SetValuedProblem> {
    Ok(SetValuedProblem::from_json(&read(path)?)?)
}

fn parse_list(text: &str, what: &str) -> CliResult<Vec<f64>> {
    text.split(',')
        .map(|s| s.trim().parse::<f64>().map_err(|_| CliError::Usage(format!("bad number {s:?} in {what}"))))
        .collect()
}

fn parse_points(text: &str, what: &str) -> CliResult<Vec<Vec<f64>>> {
    text.split(';').filter(|s| !s.trim().is_empty()).map(|p| parse_list(p, what)).collect()
}

/// `[[1.0, 0.0], [2.0, 0.5]]`: one line, coordinates always nested.
fn point_list(pts: &[Vec<f64>]) -> String {
    let rows: Vec<String> = match report::point_arrays(pts) {
        Value::Array(rows) => rows
            .iter()
            .map(|r| match r {
                Value::Array(c) => format!("[{}]", c.iter().map(Value::to_string).collect::<Vec<_>>().join(", ")),
                other => other.to_string(),
            })
            .collect(),
        _ => unreachable!("point_arrays returns an array"),
    };
    format!("[{}]", rows.join(", "))
}

fn run(command: Command) -> CliResult<String> {
    match command {
        Command::Solve { file } => Ok(report::to_pretty(&solve(&load(&file)?)?.to_json())),
        Command::Scalarize { file, csv } => scalarize(&file, csv.as_deref()),
        Command::Colevel { file, lambda, set } => {
            let problem = load(&file)?;
            let pts = match (lambda, set) {
                (Some(l), _) => colevel(&problem, l)?,
                (None, Some(s)) => colevel_at_set(&problem, &PointCloudSet::new(parse_points(&s, "--set")?)?)?,
                (None, None) => return Err(CliError::Usage("either --lambda or --set is required".into())),
            };
            Ok(point_list(&pts))
        }
        Command::Asymptotic(args) => asymptotic(args),
        Command::Check(args) => check(args),
        Command::Oracle { target, seed, count, tol } => {
            if !(tol > 0.0) {
                return Err(CliError::Usage(format!("--tol must be positive, got {tol}")));
            }
            let summary = if target == "random" {
                oracle_random(seed, count, tol)?
            } else {
                oracle_problem(&load(Path::new(&target))?)?
            };
            let out = report::to_pretty(&summary.to_json());
            if summary.passed() {
                Ok(out)
            } else {
                emit(&out);
                Err(CliError::Failed(format!(
                    "oracle mismatch: max deviation {:e} (tolerance {:e}), {} inclusion violations",
                    summary.max_deviation, summary.tolerance, summary.inclusion_violations
                )))
            }
        }
        Command::Fixtures { out } => fixtures(&out),
    }
}

/// A CSV cell with the same rounding as the JSON reports.
fn cell(v: f64) -> String {
    report::num(v).to_string().trim_matches('"').to_string()
}

fn scalarize(file: &Path, csv_path: Option<&Path>) -> CliResult<String> {
    let problem = load(file)?;
    let field = ScalarField::compute(&problem);
    if let Some(path) = csv_path {
        let mut w = csv::Writer::from_path(path)?;
        let n = problem.grid().dim();
        let mut header: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
        header.push("psi".into());
        w.write_record(&header)?;
        for (x, v) in field.points().iter().zip(field.values()) {
            let mut row: Vec<String> = x.iter().map(|&c| cell(c)).collect();
            row.push(cell(v.0));
            w.write_record(&row)?;
        }
        w.flush().map_err(|source| CliError::Io { path: path.to_path_buf(), source })?;
    }
    Ok(report::to_pretty(&field.to_json()))
}

fn asymptotic(args: AsymptoticArgs) -> CliResult<String> {
    let problem = load(&args.file)?;
    let n = problem.grid().dim();
    let directions = match &args.directions {
        Some(text) => parse_points(text, "--directions")?,
        None => default_directions(n),
    };
    let options = RayOptions { t_min: args.t_min, t_max: args.t_max, steps: args.steps };
    let cond = check_condition_12(&problem, &directions, &options)?;
    let m = cond.m_f_q.0;
    let lambdas = match &args.lambdas {
        Some(text) => parse_list(text, "--lambdas")?,
        None => default_lambda_schedule(m, args.lambda_count.max(1)),
    };
    let horizon = horizon_limsup(&problem, &lambdas, args.radius_threshold, &options)?;

    let mut estimates = Vec::with_capacity(directions.len());
    for u in &directions {
        estimates.push(f_g_infty(&problem, &options.schedule(u.clone())?)?);
    }
    if let Some(path) = &args.trace_csv {
        let mut w = csv::Writer::from_path(path)?;
        w.write_record(["direction_index", "direction", "t", "psi", "snap_distance"])?;
        for (k, e) in estimates.iter().enumerate() {
            let dir = e.direction.iter().map(|&c| cell(c)).collect::<Vec<_>>().join(" ");
            for p in &e.liminf_trace {
                w.write_record([
                    k.to_string(),
                    dir.clone(),
                    cell(p.t),
                    cell(p.psi),
                    cell(p.snap_distance),
                ])?;
            }
        }
        w.flush().map_err(|source| CliError::Io { path: path.clone(), source })?;
    }
    Ok(report::to_pretty(&report::object([
        ("m_f_q", report::num(m)),
        ("estimates", Value::Array(estimates.iter().map(|e| e.to_json()).collect())),
        ("condition_12", cond.to_json()),
        ("horizon", horizon.to_json()),
    ])))
}

fn check(args: CheckArgs) -> CliResult<String> {
    let mut problem = load(&args.file)?;
    if let Some(r) = args.restrict {
        problem = problem.restricted_to_ball(r)?;
    }
    let none = !(args.srgi || args.sgicc || args.cond12 || args.transfer);
    if args.all || none {
        return Ok(report::to_pretty(&weierstrass_report(&problem)?.to_json()));
    }
    let m = ScalarField::compute(&problem).m_f_q().0;
    let mut checks = serde_json::Map::new();
    if args.srgi {
        checks.insert("srgi".into(), setopt::check_srgi(&problem, None)?.to_json());
    }
    if args.sgicc {
        checks.insert("sgicc".into(), setopt::check_sgicc(&problem, default_lambda_probe(m))?.to_json());
    }
    if args.cond12 {
        let dirs = default_directions(problem.grid().dim());
        checks.insert("condition_12".into(), condition_12_verdict(&problem, &dirs, &RayOptions::default())?.to_json());
    }
    if args.transfer {
        let lambdas = default_transfer_lambdas(m);
        checks.insert("transfer_closed".into(), setopt::check_transfer_closed(&problem, &lambdas)?.to_json());
    }
    Ok(report::to_pretty(&json!({ "m_f_q": report::num(m), "checks": Value::Object(checks) })))
}

fn fixtures(out: &Path) -> CliResult<String> {
    fs::create_dir_all(out).map_err(|source| CliError::Io { path: out.to_path_buf(), source })?;
    let mut written = Vec::new();
    for (stem, doc) in setopt::fixtures::all() {
        let path = out.join(format!("{stem}.json"));
        let mut text = doc.to_json_pretty();
        text.push('\n');
        fs::write(&path, text).map_err(|source| CliError::Io { path: path.clone(), source })?;
        written.push(path.display().to_string());
    }
    Ok(report::to_pretty(&json!({ "written": written })))
}
