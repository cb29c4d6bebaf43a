//! Command-line front end: evaluates quantities, runs the verification
//! suites, and emits machine-readable reports.

mod config;
mod report;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use ramanujan_core::error::Error;
use ramanujan_core::laplace::{laplace_eval_with_tol, Kernel, LaplaceRequest, LaplaceRoute};
use ramanujan_core::meijer::{g_1331, GParams131};
use ramanujan_core::result::{EvaluationResult, Method};
use ramanujan_core::suite::{
    closed_form_catalog, eval_quantity, series_value_table, summation_identity_check,
    theorem_check, EngineConfig, Family, GSumIdentity, RamanujanQuantity, Route, Theorem,
};

use report::{ConfigEcho, ReportItem, RunReport, Status};

#[derive(Parser)]
#[command(
    name = "ramanujan",
    version,
    about = "Evaluate Ramanujan's oscillatory integrals and machine-check the identities around them"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum RouteArg {
    Series,
    Quadrature,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Auto,
    Contour,
    #[value(name = "residue-series")]
    ResidueSeries,
    Limit,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
    Markdown,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Theorems,
    Identities,
    #[value(name = "closed-forms")]
    ClosedForms,
    #[value(name = "series-values")]
    SeriesValues,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum KernelArg {
    Sin,
    Cos,
    Xsin,
    Xcos,
}

impl From<KernelArg> for Kernel {
    fn from(k: KernelArg) -> Kernel {
        match k {
            KernelArg::Sin => Kernel::Sin,
            KernelArg::Cos => Kernel::Cos,
            KernelArg::Xsin => Kernel::XSin,
            KernelArg::Xcos => Kernel::XCos,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a quantity: `phi1|psi1|phi2|psi2|phi3|psi3|psi3star <n>`,
    /// `gfunc <a1> <a2> <a3> <b1> <z>`, or `laplace <kernel> <alpha> <beta>`.
    #[command(allow_negative_numbers = true)]
    Eval {
        /// Quantity name.
        quantity: String,
        /// Arguments; decimals or rationals like 2/5. Negative G parameters
        /// need the dedicated `gfunc` subcommand or a `--` separator.
        args: Vec<String>,
        /// Evaluation route for the integral quantities.
        #[arg(long, value_enum, default_value = "quadrature")]
        route: RouteArg,
        /// Absolute tolerance override.
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Run a verification suite and emit a report.
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
        /// Write the report to a file instead of stdout.
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
    /// Evaluate G^{1,3}_{3,1}(z | a1,a2,a3; b1) directly.
    #[command(allow_negative_numbers = true)]
    Gfunc {
        #[arg(allow_hyphen_values = true)]
        a1: String,
        #[arg(allow_hyphen_values = true)]
        a2: String,
        #[arg(allow_hyphen_values = true)]
        a3: String,
        #[arg(allow_hyphen_values = true)]
        b1: String,
        #[arg(allow_hyphen_values = true)]
        z: String,
        #[arg(long, value_enum, default_value = "auto")]
        method: MethodArg,
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Evaluate a Laplace transform of sin/cos(beta x^2) (optionally
    /// x-weighted).
    #[command(allow_negative_numbers = true)]
    Laplace {
        #[arg(value_enum)]
        kernel: KernelArg,
        alpha: String,
        beta: String,
        #[arg(long, value_enum, default_value = "series")]
        route: RouteArg,
        #[arg(long)]
        tol: Option<f64>,
    },
}

/// Parses a decimal or a rational `p/q`, so grid points like `2/5` stay
/// exactly representable on the command line.
fn parse_real(text: &str) -> Result<f64, String> {
    if let Some((num, den)) = text.split_once('/') {
        let p: f64 = num
            .trim()
            .parse()
            .map_err(|_| format!("bad rational numerator in '{text}'"))?;
        let q: f64 = den
            .trim()
            .parse()
            .map_err(|_| format!("bad rational denominator in '{text}'"))?;
        if q == 0.0 {
            return Err(format!("zero denominator in '{text}'"));
        }
        Ok(p / q)
    } else {
        text.trim()
            .parse()
            .map_err(|_| format!("cannot parse '{text}' as a number"))
    }
}

const EXIT_FAILURE: u8 = 1;
const EXIT_CONFIG: u8 = 2;
const EXIT_TOLERANCE: u8 = 3;

fn exit_for(err: &Error) -> u8 {
    match err {
        Error::ToleranceNotReached { .. } => EXIT_TOLERANCE,
        _ => EXIT_CONFIG,
    }
}

fn print_result(label: &str, res: &EvaluationResult, elapsed_ms: f64) {
    println!(
        "{label} = {:.15} +/- {:.2e} [{}] terms={} panels={} time={:.1}ms{}",
        res.value,
        res.abs_err_est,
        res.method.as_str(),
        res.work.terms,
        res.work.panels,
        elapsed_ms,
        if res.cancellation_warning { " (cancellation warning)" } else { "" }
    );
}

fn run_eval(
    quantity: &str,
    args: &[String],
    route: RouteArg,
    tol: Option<f64>,
    engine: &EngineConfig,
) -> Result<(), (u8, String)> {
    let mut engine = *engine;
    if let Some(t) = tol {
        engine.quad_abs_tol = t;
        engine.series_rel_tol = t;
    }
    let start = Instant::now();
    match quantity {
        "gfunc" => {
            let reals = parse_reals(args)?;
            if reals.len() != 5 {
                return Err((EXIT_CONFIG, "gfunc needs: a1 a2 a3 b1 z".to_string()));
            }
            let params = GParams131::new(reals[0], reals[1], reals[2], reals[3])
                .map_err(|e| (EXIT_CONFIG, e.to_string()))?;
            let res = g_1331(&params, reals[4], None, tol.unwrap_or(1e-12))
                .map_err(|e| (exit_for(&e), e.to_string()))?;
            print_result(
                &format!("G(a={:?}; b1={}; z={})", params.upper(), params.lower(), reals[4]),
                &res,
                start.elapsed().as_secs_f64() * 1e3,
            );
        }
        "laplace" => {
            if args.len() != 3 {
                return Err((EXIT_CONFIG, "laplace needs: <sin|cos|xsin|xcos> <alpha> <beta>".to_string()));
            }
            let kernel = match args[0].as_str() {
                "sin" => KernelArg::Sin,
                "cos" => KernelArg::Cos,
                "xsin" => KernelArg::Xsin,
                "xcos" => KernelArg::Xcos,
                other => return Err((EXIT_CONFIG, format!("unknown kernel '{other}'"))),
            };
            return run_laplace(kernel, &args[1], &args[2], route, tol);
        }
        name => {
            let reals = parse_reals(args)?;
            if reals.len() != 1 {
                return Err((EXIT_CONFIG, format!("{name} needs exactly one argument")));
            }
            let family = Family::parse(name).map_err(|e| (EXIT_CONFIG, e.to_string()))?;
            let q = RamanujanQuantity::new(family, reals[0])
                .map_err(|e| (EXIT_CONFIG, e.to_string()))?;
            let route = match route {
                RouteArg::Series => Route::Series,
                RouteArg::Quadrature => Route::Quadrature,
            };
            let res = eval_quantity(&q, route, &engine)
                .map_err(|e| (exit_for(&e), e.to_string()))?;
            print_result(
                &format!("{}({})", family.as_str(), args[0]),
                &res,
                start.elapsed().as_secs_f64() * 1e3,
            );
        }
    }
    Ok(())
}

fn parse_reals(args: &[String]) -> Result<Vec<f64>, (u8, String)> {
    args.iter()
        .map(|a| parse_real(a))
        .collect::<Result<_, _>>()
        .map_err(|e| (EXIT_CONFIG, e))
}

fn run_gfunc(
    params: &[String; 4],
    z: &str,
    method: MethodArg,
    tol: Option<f64>,
) -> Result<(), (u8, String)> {
    let vals: Vec<f64> = params
        .iter()
        .map(|a| parse_real(a))
        .collect::<Result<_, _>>()
        .map_err(|e| (EXIT_CONFIG, e))?;
    let z = parse_real(z).map_err(|e| (EXIT_CONFIG, e))?;
    let p = GParams131::new(vals[0], vals[1], vals[2], vals[3])
        .map_err(|e| (EXIT_CONFIG, e.to_string()))?;
    let method = match method {
        MethodArg::Auto => None,
        MethodArg::Contour => Some(Method::Contour),
        MethodArg::ResidueSeries => Some(Method::ResidueSeries),
        MethodArg::Limit => Some(Method::Limit),
    };
    let start = Instant::now();
    let res = g_1331(&p, z, method, tol.unwrap_or(1e-12))
        .map_err(|e| (exit_for(&e), e.to_string()))?;
    print_result(
        &format!("G(a={:?}; b1={}; z={z})", p.upper(), p.lower()),
        &res,
        start.elapsed().as_secs_f64() * 1e3,
    );
    Ok(())
}

fn run_laplace(
    kernel: KernelArg,
    alpha: &str,
    beta: &str,
    route: RouteArg,
    tol: Option<f64>,
) -> Result<(), (u8, String)> {
    let alpha = parse_real(alpha).map_err(|e| (EXIT_CONFIG, e))?;
    let beta = parse_real(beta).map_err(|e| (EXIT_CONFIG, e))?;
    let req = LaplaceRequest::new(kernel.into(), alpha, beta)
        .map_err(|e| (EXIT_CONFIG, e.to_string()))?;
    let route = match route {
        RouteArg::Series => LaplaceRoute::GFunction,
        RouteArg::Quadrature => LaplaceRoute::Quadrature,
    };
    let start = Instant::now();
    let res = laplace_eval_with_tol(&req, route, tol.unwrap_or(1e-12))
        .map_err(|e| (exit_for(&e), e.to_string()))?;
    print_result(
        &format!("L[{}](alpha={alpha}, beta={beta})", req.kernel.as_str()),
        &res,
        start.elapsed().as_secs_f64() * 1e3,
    );
    Ok(())
}

const THEOREM_GRID: [f64; 5] = [1.0 / 3.0, 0.5, 1.0, 2.0, 5.0];
const IDENTITY_GRID: [f64; 3] = [0.5, 1.0, 2.0];

fn suite_theorems(engine: &EngineConfig) -> Result<Vec<ReportItem>, Error> {
    let mut items = Vec::new();
    for theorem in Theorem::all() {
        for &n in &THEOREM_GRID {
            let start = Instant::now();
            let r = theorem_check(theorem, n, Route::Quadrature, engine)?;
            items.push(ReportItem {
                id: r.id,
                n,
                lhs: r.lhs,
                rhs: r.rhs,
                abs_residual: r.abs_residual,
                rel_residual: r.rel_residual,
                status: if r.pass { Status::Pass } else { Status::Fail },
                method_lhs: r.method_lhs.as_str().to_string(),
                method_rhs: r.method_rhs.as_str().to_string(),
                terms: r.work.terms,
                panels: r.work.panels,
                printed_text: None,
                printed_value: None,
                time_ms: start.elapsed().as_secs_f64() * 1e3,
            });
        }
    }
    Ok(items)
}

fn suite_identities(engine: &EngineConfig) -> Result<Vec<ReportItem>, Error> {
    let mut items = Vec::new();
    for id in GSumIdentity::all() {
        for &n in &IDENTITY_GRID {
            let start = Instant::now();
            let r = summation_identity_check(id, n, engine)?;
            items.push(ReportItem {
                id: r.id,
                n,
                lhs: r.lhs,
                rhs: r.rhs,
                abs_residual: r.abs_residual,
                rel_residual: r.rel_residual,
                status: if r.pass { Status::Pass } else { Status::Fail },
                method_lhs: r.method_lhs.as_str().to_string(),
                method_rhs: r.method_rhs.as_str().to_string(),
                terms: r.work.terms,
                panels: r.work.panels,
                printed_text: None,
                printed_value: None,
                time_ms: start.elapsed().as_secs_f64() * 1e3,
            });
        }
    }
    Ok(items)
}

fn suite_closed_forms(engine: &EngineConfig) -> Result<Vec<ReportItem>, Error> {
    let start_all = Instant::now();
    let entries = closed_form_catalog(engine)?;
    let per_item = start_all.elapsed().as_secs_f64() * 1e3 / entries.len() as f64;
    Ok(entries
        .into_iter()
        .map(|e| {
            let abs = (e.quadrature - e.exact_value).abs();
            ReportItem {
                id: e.id,
                n: e.quantity.arg,
                lhs: e.quadrature,
                rhs: e.exact_value,
                abs_residual: abs,
                rel_residual: abs / e.exact_value.abs().max(1.0),
                status: if e.quadrature_matches && e.routes_agree {
                    Status::Pass
                } else {
                    Status::Fail
                },
                method_lhs: "quadrature".to_string(),
                method_rhs: "closed-form".to_string(),
                terms: e.work.terms,
                panels: e.work.panels,
                printed_text: Some(e.exact.text.to_string()),
                printed_value: Some(e.exact_value),
                time_ms: per_item,
            }
        })
        .collect())
}

fn suite_series_values(engine: &EngineConfig) -> Result<Vec<ReportItem>, Error> {
    let start_all = Instant::now();
    let entries = series_value_table(engine)?;
    let per_item = start_all.elapsed().as_secs_f64() * 1e3 / entries.len() as f64;
    Ok(entries
        .into_iter()
        .map(|e| {
            let abs = (e.computed_sum - e.oracle_value).abs();
            // the oracle chain adjudicates; printed-value disagreement with
            // agreeing routes is flagged, not failed
            let status = if !e.routes_agree {
                Status::Fail
            } else if e.matches_printed {
                Status::Pass
            } else {
                Status::Flagged
            };
            ReportItem {
                id: e.id,
                n: e.quantity.arg,
                lhs: e.computed_sum,
                rhs: e.oracle_value,
                abs_residual: abs,
                rel_residual: abs / e.oracle_value.abs().max(1.0),
                status,
                method_lhs: "series".to_string(),
                method_rhs: "quadrature".to_string(),
                terms: e.work.terms,
                panels: e.work.panels,
                printed_text: Some(e.printed.text.to_string()),
                printed_value: Some(e.printed_value),
                time_ms: per_item,
            }
        })
        .collect())
}

fn run_verify(
    suite: SuiteArg,
    format: FormatArg,
    out: Option<std::path::PathBuf>,
    engine: &EngineConfig,
    source: &str,
) -> Result<u8, (u8, String)> {
    let run = |suite: SuiteArg| -> Result<Vec<ReportItem>, Error> {
        match suite {
            SuiteArg::Theorems => suite_theorems(engine),
            SuiteArg::Identities => suite_identities(engine),
            SuiteArg::ClosedForms => suite_closed_forms(engine),
            SuiteArg::SeriesValues => suite_series_values(engine),
            SuiteArg::All => {
                let mut items = suite_closed_forms(engine)?;
                items.extend(suite_theorems(engine)?);
                items.extend(suite_identities(engine)?);
                items.extend(suite_series_values(engine)?);
                Ok(items)
            }
        }
    };
    let suite_name = match suite {
        SuiteArg::Theorems => "theorems",
        SuiteArg::Identities => "identities",
        SuiteArg::ClosedForms => "closed-forms",
        SuiteArg::SeriesValues => "series-values",
        SuiteArg::All => "all",
    };
    let items = run(suite).map_err(|e| (exit_for(&e), e.to_string()))?;
    let report = RunReport::new(suite_name, ConfigEcho::new(source, engine), items);
    let rendered = match format {
        FormatArg::Json => report.to_json(),
        FormatArg::Csv => report.to_csv(),
        FormatArg::Markdown => report.to_markdown(),
    };
    match out {
        Some(path) => std::fs::write(&path, rendered)
            .map_err(|e| (EXIT_CONFIG, format!("cannot write {}: {e}", path.display())))?,
        None => println!("{rendered}"),
    }
    eprintln!(
        "{suite_name}: {} pass, {} fail, {} flagged",
        report.summary.pass, report.summary.fail, report.summary.flagged
    );
    Ok(if report.any_failure() { EXIT_FAILURE } else { 0 })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = match config::load() {
        Ok(cfg) => cfg,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(EXIT_CONFIG);
        }
    };
    let outcome = match &cli.command {
        Command::Eval { quantity, args, route, tol } => {
            run_eval(quantity, args, *route, *tol, &cfg.engine).map(|()| 0)
        }
        Command::Verify { suite, format, out } => {
            run_verify(*suite, *format, out.clone(), &cfg.engine, &cfg.source)
        }
        Command::Gfunc { a1, a2, a3, b1, z, method, tol } => run_gfunc(
            &[a1.clone(), a2.clone(), a3.clone(), b1.clone()],
            z,
            *method,
            *tol,
        )
        .map(|()| 0),
        Command::Laplace { kernel, alpha, beta, route, tol } => {
            run_laplace(*kernel, alpha, beta, *route, *tol).map(|()| 0)
        }
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err((code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
