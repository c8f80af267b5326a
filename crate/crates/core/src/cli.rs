//! Command implementations and report serialization for the `qraabe` binary.
//!
//! Every command returns a [`CommandOutput`] with the text to print and the
//! process exit code: 0 when everything passed, 1 when an identity failed,
//! and 2 for usage or domain errors (the `Err` path).

use crate::error::{Error, Result};
use crate::qgamma::{key_identity_residual, log_c_q, log_gamma_q};
use crate::quadrature::Method;
use crate::special::{
    dilog, log_qpoch_inf, qpoch_finite, qpoch_inf, zeta2, SeriesConfig, ValueWithError,
};
use crate::theta::{
    log_theta1_imag, log_theta4_imag, theta1_series_imag_modulus, theta4_series_imag,
};
use crate::verify::{
    classical_raabe, rhs_lemma_dilog_shift, rhs_lemma_zeta, rhs_q_raabe_sub, rhs_q_raabe_super,
    rhs_q_raabe_super_alt, rhs_q_raabe_super_special, rhs_theta, sweep, verify, IdentityReport,
    TheoremId, VerifyOptions,
};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::str::FromStr;

pub const SCHEMA_VERSION: u32 = 1;
pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

const CSV_HEADER: [&str; 8] = ["theorem", "q", "t", "lhs", "rhs", "residual", "tol", "pass"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Table,
    Csv,
    Json,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "table" => Ok(OutputFormat::Table),
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(Error::Usage(format!(
                "unknown format `{other}` (expected table, csv or json)"
            ))),
        }
    }
}

/// Settings shared by all subcommands.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub series: SeriesConfig,
    /// Pass threshold; per-theorem default when `None`.
    pub tol: Option<f64>,
    pub quad_tol: Option<f64>,
    pub method: Method,
    pub format: OutputFormat,
    pub out: Option<PathBuf>,
    /// Significant digits for `eval`.
    pub digits: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            series: SeriesConfig::default(),
            tol: None,
            quad_tol: None,
            method: Method::Auto,
            format: OutputFormat::Table,
            out: None,
            digits: 15,
        }
    }
}

impl RunConfig {
    fn verify_options(&self) -> VerifyOptions {
        VerifyOptions {
            series: self.series,
            method: self.method,
            quad_tol: self.quad_tol,
            ..VerifyOptions::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CommandOutput {
    pub stdout: String,
    pub stderr: String,
    pub exit_code: i32,
}

/// Format with `digits` significant digits in a form that parses back.
pub fn format_sig(v: f64, digits: usize) -> String {
    let digits = digits.max(1);
    if !v.is_finite() {
        return v.to_string();
    }
    if v == 0.0 {
        return "0".into();
    }
    let exp = v.abs().log10().floor() as i32;
    if (-5..15).contains(&exp) {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        let s = format!("{v:.decimals$}");
        if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s
        }
    } else {
        format!("{v:.*e}", digits - 1)
    }
}

/// Round-trip safe serialization of one number (17 significant digits).
fn format_exact(v: f64) -> String {
    format!("{v:.16e}")
}

/// Parse a grid spec: a comma list `a,b,c` or an inclusive range `start:stop:count`.
pub fn parse_grid(spec: &str) -> Result<Vec<f64>> {
    let spec = spec.trim();
    if spec.is_empty() {
        return Err(Error::Usage("empty grid".into()));
    }
    let num = |s: &str| {
        s.trim()
            .parse::<f64>()
            .map_err(|_| Error::Usage(format!("cannot parse `{s}` as a number in grid `{spec}`")))
    };
    if spec.contains(':') {
        let parts: Vec<&str> = spec.split(':').collect();
        if parts.len() != 3 {
            return Err(Error::Usage(format!(
                "range `{spec}` must be start:stop:count"
            )));
        }
        let start = num(parts[0])?;
        let stop = num(parts[1])?;
        let count: usize = parts[2].trim().parse().map_err(|_| {
            Error::Usage(format!(
                "range count `{}` is not a positive integer",
                parts[2]
            ))
        })?;
        if count == 0 {
            return Err(Error::Usage(format!("range `{spec}` has zero points")));
        }
        if count == 1 {
            return Ok(vec![start]);
        }
        let step = (stop - start) / (count - 1) as f64;
        return Ok((0..count)
            .map(|i| {
                if i == count - 1 {
                    stop
                } else {
                    start + i as f64 * step
                }
            })
            .collect());
    }
    spec.split(',').map(num).collect()
}

/// Parse `key=value` arguments into numbers.
pub fn parse_kv_args(args: &[String]) -> Result<BTreeMap<String, f64>> {
    args.iter()
        .map(|arg| {
            let (k, v) = arg.split_once('=').ok_or_else(|| {
                Error::Usage(format!("argument `{arg}` must look like key=value"))
            })?;
            let value = v
                .parse::<f64>()
                .map_err(|_| Error::Usage(format!("cannot parse `{v}` as a number for `{k}`")))?;
            Ok((k.trim().to_string(), value))
        })
        .collect()
}

/// Names accepted by [`cmd_eval`] with their required arguments.
pub const EVAL_FUNCTIONS: &[(&str, &[&str])] = &[
    ("dilog", &["z"]),
    ("zeta2", &[]),
    ("qpoch-finite", &["a", "q", "n"]),
    ("qpoch-inf", &["a", "q"]),
    ("log-qpoch-inf", &["a", "q"]),
    ("log-gamma-q", &["x", "q"]),
    ("log-theta4", &["x", "q"]),
    ("theta4-series", &["x", "q"]),
    ("log-theta1", &["x", "q"]),
    ("theta1-modulus", &["x", "q"]),
    ("c-q", &["q"]),
    ("key-identity", &["x", "q"]),
    ("rhs-q-raabe-sub", &["q", "t"]),
    ("rhs-q-raabe-super", &["q", "t"]),
    ("rhs-q-raabe-super-alt", &["q", "t"]),
    ("rhs-q-raabe-super-special", &["q"]),
    ("rhs-theta", &["q"]),
    ("rhs-lemma-zeta", &["q"]),
    ("rhs-lemma-dilog-shift", &["q", "t"]),
    ("rhs-classical", &["t"]),
];

/// Evaluate a single function. Closed forms carry no error bound.
pub fn eval_function(
    function: &str,
    args: &BTreeMap<String, f64>,
    cfg: &SeriesConfig,
) -> Result<(f64, Option<f64>)> {
    let required = EVAL_FUNCTIONS
        .iter()
        .find(|(name, _)| *name == function)
        .map(|(_, req)| *req)
        .ok_or_else(|| {
            let names: Vec<_> = EVAL_FUNCTIONS.iter().map(|(n, _)| *n).collect();
            Error::Usage(format!(
                "unknown function `{function}` (expected one of {})",
                names.join(", ")
            ))
        })?;
    for key in required {
        if !args.contains_key(*key) {
            return Err(Error::Usage(format!(
                "{function} requires argument {key}=<value>"
            )));
        }
    }
    let a = |k: &str| args[k];
    let bounded = |v: ValueWithError| (v.value, Some(v.abs_err_bound));
    let plain = |v: f64| (v, None);
    Ok(match function {
        "dilog" => bounded(dilog(a("z"), cfg)?),
        "zeta2" => (zeta2(), Some(0.0)),
        "qpoch-finite" => {
            let n = a("n");
            if !(n >= 0.0 && n.fract() == 0.0) {
                return Err(Error::Domain(format!(
                    "qpoch-finite requires integer n >= 0, got {n}"
                )));
            }
            (qpoch_finite(a("a"), a("q"), n as usize), Some(0.0))
        }
        "qpoch-inf" => bounded(qpoch_inf(a("a"), a("q"), cfg)?),
        "log-qpoch-inf" => bounded(log_qpoch_inf(a("a"), a("q"), cfg)?),
        "log-gamma-q" => bounded(log_gamma_q(a("x"), a("q"), cfg)?),
        "log-theta4" => bounded(log_theta4_imag(a("x"), a("q"), cfg)?),
        "theta4-series" => bounded(theta4_series_imag(a("x"), a("q"), cfg)?),
        "log-theta1" => bounded(log_theta1_imag(a("x"), a("q"), cfg)?),
        "theta1-modulus" => bounded(theta1_series_imag_modulus(a("x"), a("q"), cfg)?),
        "c-q" => bounded(log_c_q(a("q"), cfg)?),
        "key-identity" => plain(key_identity_residual(a("x"), a("q"), cfg)?),
        "rhs-q-raabe-sub" => plain(rhs_q_raabe_sub(a("q"), a("t"), cfg)?),
        "rhs-q-raabe-super" => plain(rhs_q_raabe_super(a("q"), a("t"), cfg)?),
        "rhs-q-raabe-super-alt" => plain(rhs_q_raabe_super_alt(a("q"), a("t"), cfg)?),
        "rhs-q-raabe-super-special" => plain(rhs_q_raabe_super_special(a("q"), cfg)?),
        "rhs-theta" => plain(rhs_theta(a("q"), cfg)?),
        "rhs-lemma-zeta" => plain(rhs_lemma_zeta(a("q"))?),
        "rhs-lemma-dilog-shift" => plain(rhs_lemma_dilog_shift(a("q"), a("t"), cfg)?),
        "rhs-classical" => plain(classical_raabe(a("t"))),
        _ => unreachable!("checked against EVAL_FUNCTIONS"),
    })
}

pub fn cmd_eval(function: &str, args: &[String], run: &RunConfig) -> Result<CommandOutput> {
    let parsed = parse_kv_args(args)?;
    let (value, bound) = eval_function(function, &parsed, &run.series)?;
    let arg_text = parsed
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(" ");
    let stdout = match run.format {
        OutputFormat::Table => {
            let bound_text = bound.map_or("n/a".to_string(), |b| format_sig(b, 3));
            format!(
                "{function}({arg_text}) = {}\nabs_err_bound = {bound_text}\n",
                format_sig(value, run.digits)
            )
        }
        OutputFormat::Csv => format!(
            "function,args,value,abs_err_bound\n{function},{arg_text},{},{}\n",
            format_exact(value),
            bound.map_or(String::new(), format_exact)
        ),
        OutputFormat::Json => {
            let obj = serde_json::json!({
                "schema_version": SCHEMA_VERSION,
                "function": function,
                "args": parsed,
                "value": value,
                "abs_err_bound": bound,
            });
            to_json(&obj)
        }
    };
    Ok(CommandOutput {
        stdout,
        stderr: String::new(),
        exit_code: EXIT_PASS,
    })
}

pub fn cmd_verify(
    theorem: TheoremId,
    q: f64,
    t: Option<f64>,
    run: &RunConfig,
) -> Result<CommandOutput> {
    if theorem.uses_t() && t.is_none() {
        return Err(Error::Usage(format!("{theorem} requires --t")));
    }
    let tol = run.tol.unwrap_or(theorem.default_tol());
    let report = verify(theorem, q, t.unwrap_or(0.0), tol, &run.verify_options())?;
    let stdout = render_reports(&[report], run)?;
    Ok(CommandOutput {
        stdout,
        stderr: String::new(),
        exit_code: if report.pass { EXIT_PASS } else { EXIT_FAIL },
    })
}

pub fn cmd_sweep(
    theorem: TheoremId,
    q_spec: &str,
    t_spec: Option<&str>,
    run: &RunConfig,
) -> Result<CommandOutput> {
    let q_grid = parse_grid(q_spec)?;
    let t_grid = match t_spec {
        Some(spec) => parse_grid(spec)?,
        None if theorem.uses_t() => {
            return Err(Error::Usage(format!(
                "sweep of {theorem} requires --t <grid>"
            )));
        }
        None => Vec::new(),
    };
    let tol = run.tol.unwrap_or(theorem.default_tol());
    let outcome = sweep(theorem, &q_grid, &t_grid, tol, &run.verify_options())?;
    let body = render_reports(&outcome.reports, run)?;
    let mut stderr = String::new();
    for (i, e) in &outcome.errors {
        let r = &outcome.reports[*i];
        let _ = writeln!(stderr, "row {i} (q={}, t={}): {e}", r.q, r.t);
    }
    let summary = format!(
        "{theorem}: {}/{} passed\n",
        outcome.passed(),
        outcome.reports.len()
    );
    let stdout = match &run.out {
        Some(path) => {
            std::fs::write(path, body)
                .map_err(|e| Error::Usage(format!("cannot write {}: {e}", path.display())))?;
            summary
        }
        // Keep machine-readable stdout parseable.
        None if run.format == OutputFormat::Table => body + &summary,
        None => {
            stderr.push_str(&summary);
            body
        }
    };
    Ok(CommandOutput {
        stdout,
        stderr,
        exit_code: if outcome.all_pass() {
            EXIT_PASS
        } else {
            EXIT_FAIL
        },
    })
}

/// One row of the q → 1 table.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LimitRow {
    pub q: f64,
    pub integral: f64,
    pub target: f64,
    pub gap: f64,
}

pub fn limit_rows(q_grid: &[f64], t: f64, run: &RunConfig) -> Result<Vec<LimitRow>> {
    let tol = run.tol.unwrap_or(TheoremId::ClassicalLimit.default_tol());
    q_grid
        .iter()
        .map(|&q| {
            let r = verify(TheoremId::ClassicalLimit, q, t, tol, &run.verify_options())?;
            Ok(LimitRow {
                q,
                integral: r.lhs,
                target: r.rhs,
                gap: r.residual,
            })
        })
        .collect()
}

pub fn cmd_limits(q_spec: &str, t: Option<f64>, run: &RunConfig) -> Result<CommandOutput> {
    let q_grid = parse_grid(q_spec)?;
    let t = t.unwrap_or(0.0);
    let rows = limit_rows(&q_grid, t, run)?;
    let stdout = match run.format {
        OutputFormat::Table => {
            let mut s = format!(
                "{:>14} {:>20} {:>20} {:>20}\n",
                "q", "integral", "target", "gap"
            );
            for r in &rows {
                let _ = writeln!(
                    s,
                    "{:>14} {:>20} {:>20} {:>20}",
                    format_sig(r.q, 12),
                    format_sig(r.integral, 12),
                    format_sig(r.target, 12),
                    format_sig(r.gap, 12)
                );
            }
            s
        }
        OutputFormat::Csv => {
            let mut s = format!("# schema_version={SCHEMA_VERSION}\nq,t,integral,target,gap\n");
            for r in &rows {
                let _ = writeln!(
                    s,
                    "{},{},{},{},{}",
                    format_exact(r.q),
                    format_exact(t),
                    format_exact(r.integral),
                    format_exact(r.target),
                    format_exact(r.gap)
                );
            }
            s
        }
        OutputFormat::Json => to_json(&serde_json::json!({
            "schema_version": SCHEMA_VERSION,
            "t": t,
            "rows": rows,
        })),
    };
    let stdout = match &run.out {
        Some(path) => {
            std::fs::write(path, &stdout)
                .map_err(|e| Error::Usage(format!("cannot write {}: {e}", path.display())))?;
            format!("wrote {} rows to {}\n", rows.len(), path.display())
        }
        None => stdout,
    };
    Ok(CommandOutput {
        stdout,
        stderr: String::new(),
        exit_code: EXIT_PASS,
    })
}

fn render_reports(reports: &[IdentityReport], run: &RunConfig) -> Result<String> {
    Ok(match run.format {
        OutputFormat::Table => reports_table(reports),
        OutputFormat::Csv => reports_to_csv(reports)?,
        OutputFormat::Json => reports_to_json(reports, run),
    })
}

pub fn reports_table(reports: &[IdentityReport]) -> String {
    let mut s = format!(
        "{:<22} {:>10} {:>8} {:>19} {:>19} {:>19} {:>9} {:>5}\n",
        "theorem", "q", "t", "lhs", "rhs", "residual", "tol", "pass"
    );
    for r in reports {
        let _ = writeln!(
            s,
            "{:<22} {:>10} {:>8} {:>19} {:>19} {:>19} {:>9} {:>5}",
            r.theorem.name(),
            format_sig(r.q, 12),
            format_sig(r.t, 12),
            format_sig(r.lhs, 12),
            format_sig(r.rhs, 12),
            format_sig(r.residual, 3),
            format_sig(r.tol, 3),
            if r.pass { "PASS" } else { "FAIL" }
        );
    }
    s
}

/// CSV with a `# schema_version=N` comment line followed by the header
/// `theorem,q,t,lhs,rhs,residual,tol,pass`.
pub fn reports_to_csv(reports: &[IdentityReport]) -> Result<String> {
    let mut wtr = csv::Writer::from_writer(Vec::new());
    let io_err = |e: csv::Error| Error::Usage(format!("csv: {e}"));
    wtr.write_record(CSV_HEADER).map_err(io_err)?;
    for r in reports {
        wtr.write_record([
            r.theorem.name().to_string(),
            format_exact(r.q),
            format_exact(r.t),
            format_exact(r.lhs),
            format_exact(r.rhs),
            format_exact(r.residual),
            format_exact(r.tol),
            r.pass.to_string(),
        ])
        .map_err(io_err)?;
    }
    let body = wtr
        .into_inner()
        .map_err(|e| Error::Usage(format!("csv: {e}")))?;
    Ok(format!(
        "# schema_version={SCHEMA_VERSION}\n{}",
        String::from_utf8(body).expect("csv output is utf-8")
    ))
}

pub fn reports_from_csv(text: &str) -> Result<Vec<IdentityReport>> {
    let bad = |msg: String| Error::Usage(format!("malformed report csv: {msg}"));
    let mut rdr = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .from_reader(text.as_bytes());
    let header = rdr.headers().map_err(|e| bad(e.to_string()))?;
    if header.iter().ne(CSV_HEADER) {
        return Err(bad(format!("unexpected header {header:?}")));
    }
    rdr.records()
        .map(|rec| {
            let rec = rec.map_err(|e| bad(e.to_string()))?;
            let num = |i: usize| {
                rec[i]
                    .parse::<f64>()
                    .map_err(|_| bad(format!("field {} = `{}`", CSV_HEADER[i], &rec[i])))
            };
            Ok(IdentityReport {
                theorem: rec[0].parse()?,
                q: num(1)?,
                t: num(2)?,
                lhs: num(3)?,
                rhs: num(4)?,
                residual: num(5)?,
                tol: num(6)?,
                pass: rec[7]
                    .parse()
                    .map_err(|_| bad(format!("pass = `{}`", &rec[7])))?,
            })
        })
        .collect()
}

#[derive(Serialize)]
struct JsonReport {
    theorem: &'static str,
    q: f64,
    t: f64,
    lhs: f64,
    rhs: f64,
    residual: f64,
    tol: f64,
    pass: bool,
}

#[derive(Serialize)]
struct ConfigEcho {
    eps: f64,
    max_terms: usize,
    quadrature: String,
    quad_tol: Option<f64>,
    tol: Option<f64>,
}

pub fn reports_to_json(reports: &[IdentityReport], run: &RunConfig) -> String {
    let rows: Vec<JsonReport> = reports
        .iter()
        .map(|r| JsonReport {
            theorem: r.theorem.name(),
            q: r.q,
            t: r.t,
            lhs: r.lhs,
            rhs: r.rhs,
            residual: r.residual,
            tol: r.tol,
            pass: r.pass,
        })
        .collect();
    to_json(&serde_json::json!({
        "schema_version": SCHEMA_VERSION,
        "config": ConfigEcho {
            eps: run.series.eps,
            max_terms: run.series.max_terms,
            quadrature: run.method.to_string(),
            quad_tol: run.quad_tol,
            tol: run.tol,
        },
        "reports": rows,
    }))
}

fn to_json(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values always serialize");
    s.push('\n');
    s
}
