//! Command-line front end.
//!
//! Options come from flags, then a flat config file, then defaults. Exit
//! codes: 0 success, 1 verification failure, 2 usage error, 3 non-convergence.

mod config;
mod output;

pub use config::{load_config, parse_config, KEYS};
pub use output::{
    fmt_mantissa, read_values_csv, write_serde_csv, write_table_csv, write_values_csv, TableRecord, ValueRecord,
    ZeroRecord, VALUE_HEADER,
};

use crate::error::{Error, Result};
use crate::families::{
    build_error_table, exact_value, predict_zero, region_value, ErrorTable, FamilyKind, FamilySpec, Region, ZeroEdge,
};
use crate::langer::ModelCase;
use crate::recurrence::{eval_orthonormal_at, polynomial_zeros};
use crate::verify::{format_line, run_suite, CriterionResult};
use clap::Parser;
use serde::Serialize;
use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NONCONVERGENCE: i32 = 3;

/// Raw command-line flags. Every value is kept as text so flags and config
/// entries share one parser.
#[derive(Parser, Debug, Default)]
#[command(name = "turnpoint", version, about = "Turning-point asymptotics of orthogonal polynomial families")]
pub struct Cli {
    /// Flat key = value file; keys are the long flag names.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// hermite, meixner-pollaczek, laguerre, meixner, cont-dual-hahn or wilson.
    #[arg(long)]
    pub family: Option<String>,
    /// Family parameters as k=v pairs, comma separated.
    #[arg(long)]
    pub params: Option<String>,
    /// eval, asym, zeros, table or verify.
    #[arg(long)]
    pub command: Option<String>,
    /// Degrees, comma separated.
    #[arg(long = "N", allow_hyphen_values = true)]
    pub n: Option<String>,
    /// Evaluation points, comma separated.
    #[arg(long, allow_hyphen_values = true)]
    pub y: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub y_min: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub y_max: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub y_count: Option<String>,
    /// outer, airy-plus, airy-minus, band or saturated.
    #[arg(long)]
    pub region: Option<String>,
    /// Output file; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// csv or json.
    #[arg(long)]
    pub format: Option<String>,
    /// Quadrature tolerance of the asymptotic evaluators.
    #[arg(long, allow_hyphen_values = true)]
    pub tol: Option<String>,
    /// Criterion id substrings for verify, comma separated.
    #[arg(long)]
    pub only: Option<String>,
    /// Same as --format json.
    #[arg(long)]
    pub json: bool,
    /// eval: evaluate the normalized polynomial at lambda_N y instead of p_N(y).
    #[arg(long)]
    pub scaled: bool,
    /// zeros: how many zeros per edge.
    #[arg(long, allow_hyphen_values = true)]
    pub zeros: Option<String>,
    /// table: lower end of the accepted slope window.
    #[arg(long, allow_hyphen_values = true)]
    pub slope_min: Option<String>,
    /// table: upper end of the accepted slope window.
    #[arg(long, allow_hyphen_values = true)]
    pub slope_max: Option<String>,
}

impl Cli {
    /// Flag values keyed like the config file.
    fn entries(&self) -> BTreeMap<String, String> {
        let mut m = BTreeMap::new();
        let mut put = |k: &str, v: &Option<String>| {
            if let Some(v) = v {
                m.insert(k.to_string(), v.clone());
            }
        };
        put("family", &self.family);
        put("params", &self.params);
        put("command", &self.command);
        put("N", &self.n);
        put("y", &self.y);
        put("y-min", &self.y_min);
        put("y-max", &self.y_max);
        put("y-count", &self.y_count);
        put("region", &self.region);
        put("format", &self.format);
        put("tol", &self.tol);
        put("only", &self.only);
        put("zeros", &self.zeros);
        put("slope-min", &self.slope_min);
        put("slope-max", &self.slope_max);
        put("out", &self.out.as_ref().map(|p| p.display().to_string()));
        if self.json {
            m.insert("json".into(), "true".into());
        }
        if self.scaled {
            m.insert("scaled".into(), "true".into());
        }
        m
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    Eval,
    Asym,
    Zeros,
    Table,
    Verify,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

/// Fully resolved options of one run.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub command: Command,
    pub family: FamilyKind,
    pub ns: Vec<usize>,
    pub ys: Vec<f64>,
    pub region: Region,
    pub out: Option<PathBuf>,
    pub format: Format,
    pub tol: Option<f64>,
    pub only: Option<String>,
    pub scaled: bool,
    pub zero_count: usize,
    pub slope_window: (f64, f64),
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            command: Command::Verify,
            family: FamilyKind::Hermite,
            ns: vec![50, 100, 200, 400],
            ys: vec![1.5],
            region: Region::Outer,
            out: None,
            format: Format::Csv,
            tol: None,
            only: None,
            scaled: false,
            zero_count: 3,
            slope_window: (-1.4, -0.7),
        }
    }
}

fn usage(flag: &str, msg: impl std::fmt::Display) -> Error {
    Error::Usage(format!("--{flag}: {msg}"))
}

fn parse_f64(flag: &str, v: &str) -> Result<f64> {
    let x: f64 = v.trim().parse().map_err(|_| usage(flag, format!("'{v}' is not a number")))?;
    if x.is_finite() {
        Ok(x)
    } else {
        Err(usage(flag, format!("'{v}' is not finite")))
    }
}

fn parse_usize(flag: &str, v: &str) -> Result<usize> {
    v.trim().parse().map_err(|_| usage(flag, format!("'{v}' is not a non-negative integer")))
}

fn parse_list<T>(flag: &str, v: &str, item: fn(&str, &str) -> Result<T>) -> Result<Vec<T>> {
    let parts: Vec<&str> = v.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    if parts.is_empty() {
        return Err(usage(flag, "empty list"));
    }
    parts.into_iter().map(|p| item(flag, p)).collect()
}

/// Family from its name and `k=v` parameters, defaults filling the rest.
pub fn parse_family(name: &str, params: Option<&str>) -> Result<FamilyKind> {
    let key = name.trim().to_ascii_lowercase().replace('_', "-");
    let mut kind = match key.as_str() {
        "hermite" => FamilyKind::Hermite,
        "meixner-pollaczek" | "mp" => FamilyKind::defaults()[1],
        "laguerre" => FamilyKind::defaults()[2],
        "meixner" => FamilyKind::defaults()[3],
        "cont-dual-hahn" | "continuous-dual-hahn" | "cdh" => FamilyKind::defaults()[4],
        "wilson" => FamilyKind::defaults()[5],
        _ => {
            return Err(usage(
                "family",
                format!("unknown family '{name}' (expected hermite, meixner-pollaczek, laguerre, meixner, cont-dual-hahn or wilson)"),
            ))
        }
    };
    let Some(params) = params else { return Ok(kind) };
    for pair in params.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (k, v) = pair.split_once('=').ok_or_else(|| usage("params", format!("expected k=v, got '{pair}'")))?;
        let (k, x) = (k.trim(), parse_f64("params", v)?);
        let slot = match (&mut kind, k) {
            (FamilyKind::MeixnerPollaczek { delta, .. }, "delta") => delta,
            (FamilyKind::MeixnerPollaczek { eta, .. }, "eta") => eta,
            (FamilyKind::Laguerre { alpha }, "alpha") => alpha,
            (FamilyKind::Meixner { c, .. }, "c") => c,
            (FamilyKind::Meixner { beta, .. }, "beta") => beta,
            (FamilyKind::ContDualHahn { a, .. } | FamilyKind::Wilson { a, .. }, "a") => a,
            (FamilyKind::ContDualHahn { b, .. } | FamilyKind::Wilson { b, .. }, "b") => b,
            (FamilyKind::ContDualHahn { c, .. } | FamilyKind::Wilson { c, .. }, "c") => c,
            (FamilyKind::Wilson { d, .. }, "d") => d,
            (kind, _) => {
                return Err(usage("params", format!("unknown parameter '{k}' for {}", kind.name())));
            }
        };
        *slot = x;
    }
    Ok(kind)
}

impl RunConfig {
    /// Resolves options with precedence flags over config file over defaults.
    pub fn resolve(cli: &Cli) -> Result<Self> {
        let mut map = match &cli.config {
            Some(p) => load_config(p)?,
            None => BTreeMap::new(),
        };
        map.extend(cli.entries());
        Self::from_entries(&map)
    }

    /// Builds a config from `key -> value` entries spelled like the flags.
    pub fn from_entries(map: &BTreeMap<String, String>) -> Result<Self> {
        let get = |k: &str| map.get(k).map(String::as_str);
        let mut cfg = RunConfig::default();
        if let Some(v) = get("command") {
            cfg.command = match v.trim() {
                "eval" => Command::Eval,
                "asym" => Command::Asym,
                "zeros" => Command::Zeros,
                "table" => Command::Table,
                "verify" => Command::Verify,
                _ => return Err(usage("command", format!("unknown command '{v}' (expected eval, asym, zeros, table or verify)"))),
            };
        }
        let name = get("family").unwrap_or("hermite");
        cfg.family = parse_family(name, get("params"))?;
        if let Some(v) = get("N") {
            cfg.ns = parse_list("N", v, parse_usize)?;
        }
        let triple = [get("y-min"), get("y-max"), get("y-count")];
        match (get("y"), triple) {
            (Some(_), t) if t.iter().any(Option::is_some) => {
                return Err(usage("y", "give either --y or --y-min/--y-max/--y-count, not both"));
            }
            (Some(v), _) => cfg.ys = parse_list("y", v, parse_f64)?,
            (None, [None, None, None]) => {}
            (None, [Some(lo), Some(hi), Some(k)]) => {
                let (lo, hi, k) = (parse_f64("y-min", lo)?, parse_f64("y-max", hi)?, parse_usize("y-count", k)?);
                if k == 0 {
                    return Err(usage("y-count", "the grid is empty"));
                }
                if k > 1 && hi < lo {
                    return Err(usage("y-max", format!("{hi} is below --y-min {lo}")));
                }
                cfg.ys = if k == 1 {
                    vec![lo]
                } else {
                    (0..k).map(|i| lo + (hi - lo) * i as f64 / (k - 1) as f64).collect()
                };
            }
            (None, _) => return Err(usage("y-min", "--y-min, --y-max and --y-count go together")),
        }
        if let Some(v) = get("region") {
            cfg.region = v.trim().parse().map_err(|e: Error| usage("region", e))?;
        }
        cfg.out = get("out").map(PathBuf::from);
        if let Some(v) = get("format") {
            cfg.format = match v.trim() {
                "csv" => Format::Csv,
                "json" => Format::Json,
                _ => return Err(usage("format", format!("unknown format '{v}' (expected csv or json)"))),
            };
        }
        if get("json").map(|v| config::parse_bool("json", v)).transpose()? == Some(true) {
            cfg.format = Format::Json;
        }
        cfg.scaled = get("scaled").map(|v| config::parse_bool("scaled", v)).transpose()?.unwrap_or(false);
        if let Some(v) = get("tol") {
            let t = parse_f64("tol", v)?;
            if !(t > 0.0 && t < 1.0) {
                return Err(usage("tol", format!("{t} is outside (0, 1)")));
            }
            cfg.tol = Some(t);
        }
        cfg.only = get("only").map(str::to_string);
        if let Some(v) = get("zeros") {
            cfg.zero_count = parse_usize("zeros", v)?;
        }
        if let Some(v) = get("slope-min") {
            cfg.slope_window.0 = parse_f64("slope-min", v)?;
        }
        if let Some(v) = get("slope-max") {
            cfg.slope_window.1 = parse_f64("slope-max", v)?;
        }
        if cfg.slope_window.0 > cfg.slope_window.1 {
            return Err(usage("slope-min", "the slope window is empty"));
        }
        Ok(cfg)
    }

    /// The family with the requested tolerance; domain errors name `--params`.
    pub fn spec(&self) -> Result<FamilySpec> {
        let spec = FamilySpec::new(self.family).map_err(|e| match e {
            Error::Domain(m) => usage("params", m),
            e => e,
        })?;
        match self.tol {
            Some(t) => spec.with_tolerance(t).map_err(|e| usage("tol", e)),
            None => Ok(spec),
        }
    }

    fn check_region(&self, spec: &FamilySpec) -> Result<()> {
        let case3 = spec.model.case() == ModelCase::Case3;
        if matches!(self.region, Region::Band | Region::Saturated) && !case3 {
            return Err(usage("region", format!("{} has no {} region", spec.name(), region_name(self.region))));
        }
        Ok(())
    }
}

fn region_name(r: Region) -> &'static str {
    match r {
        Region::Outer => "outer",
        Region::AiryPlus => "airy-plus",
        Region::AiryMinus => "airy-minus",
        Region::Band => "band",
        Region::Saturated => "saturated",
    }
}

/// Evaluation points that are not meaningful for a region are usage errors.
fn point_error(e: Error) -> Error {
    match e {
        Error::Domain(m) => usage("y", m),
        e => e,
    }
}

fn write_json<W: Write, T: Serialize + ?Sized>(mut out: W, v: &T) -> Result<()> {
    serde_json::to_writer_pretty(&mut out, v)?;
    writeln!(out)?;
    Ok(())
}

/// `p_N(y)` from the recurrence, or the normalized value at `lambda_N y` with `scaled`.
pub fn cmd_eval(cfg: &RunConfig, out: &mut dyn Write) -> Result<i32> {
    let spec = cfg.spec()?;
    let coeffs = spec.coefficients();
    let mut rows = Vec::with_capacity(cfg.ns.len() * cfg.ys.len());
    for &n in &cfg.ns {
        for &y in &cfg.ys {
            let v = if cfg.scaled { exact_value(&spec, n, y)? } else { eval_orthonormal_at(&coeffs, n, y)? };
            rows.push(ValueRecord::new(spec.name(), n, y, v));
        }
    }
    match cfg.format {
        Format::Csv => write_values_csv(out, &rows)?,
        Format::Json => write_json(out, &rows)?,
    }
    Ok(EXIT_OK)
}

/// The region's asymptotic value at scaled `y`.
pub fn cmd_asym(cfg: &RunConfig, out: &mut dyn Write) -> Result<i32> {
    let spec = cfg.spec()?;
    cfg.check_region(&spec)?;
    let mut rows = Vec::with_capacity(cfg.ns.len() * cfg.ys.len());
    for &n in &cfg.ns {
        for &y in &cfg.ys {
            let v = region_value(&spec, cfg.region, n, y).map_err(point_error)?;
            rows.push(ValueRecord::new(spec.name(), n, y, v));
        }
    }
    match cfg.format {
        Format::Csv => write_values_csv(out, &rows)?,
        Format::Json => write_json(out, &rows)?,
    }
    Ok(EXIT_OK)
}

/// Predicted zeros at every edge the family supports, next to the zeros of the recurrence.
pub fn cmd_zeros(cfg: &RunConfig, out: &mut dyn Write) -> Result<i32> {
    let spec = cfg.spec()?;
    let coeffs = spec.coefficients();
    let mut edges = vec![ZeroEdge::Upper];
    match spec.model.case() {
        ModelCase::Case1 | ModelCase::Case1a => edges.push(ZeroEdge::Lower),
        ModelCase::Case3 if matches!(spec.kind, FamilyKind::Meixner { .. }) => edges.push(ZeroEdge::Saturated),
        _ => {}
    }
    let mut rows = Vec::new();
    for &n in &cfg.ns {
        if n == 0 {
            return Err(usage("N", "zeros need N >= 1"));
        }
        let z: Vec<f64> = polynomial_zeros(&coeffs, n)?.into_iter().map(|x| x / spec.lambda_n(n)).collect();
        for &edge in &edges {
            for k in 1..=cfg.zero_count.min(n) {
                let predicted = predict_zero(&spec, n, k, edge)?;
                let exact = match edge {
                    ZeroEdge::Upper => z[n - k],
                    ZeroEdge::Lower => z[k - 1],
                    ZeroEdge::Saturated => *z
                        .iter()
                        .min_by(|a, b| (*a - predicted).abs().total_cmp(&(*b - predicted).abs()))
                        .expect("N >= 1"),
                };
                let edge = match edge {
                    ZeroEdge::Upper => "upper",
                    ZeroEdge::Lower => "lower",
                    ZeroEdge::Saturated => "saturated",
                };
                rows.push(ZeroRecord {
                    family: spec.name().to_string(),
                    n,
                    edge: edge.to_string(),
                    k,
                    predicted,
                    exact,
                    abs_err: (predicted - exact).abs(),
                });
            }
        }
    }
    match cfg.format {
        Format::Csv => write_serde_csv(out, &rows)?,
        Format::Json => write_json(out, &rows)?,
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct TableReport<'a> {
    table: &'a ErrorTable,
    slope_window: (f64, f64),
    pass: bool,
}

/// Error table for one region; exits 0 iff the fitted slope lies in the window.
pub fn cmd_table(cfg: &RunConfig, out: &mut dyn Write, log: &mut dyn Write) -> Result<i32> {
    let spec = cfg.spec()?;
    cfg.check_region(&spec)?;
    let table = build_error_table(&spec, &cfg.ns, &cfg.ys, cfg.region).map_err(point_error)?;
    let (lo, hi) = cfg.slope_window;
    let pass = table.slope >= lo && table.slope <= hi;
    match cfg.format {
        Format::Csv => {
            let rows: Vec<TableRecord> = table
                .rows
                .iter()
                .map(|r| TableRecord {
                    family: table.family.clone(),
                    region: region_name(table.region).to_string(),
                    n: r.n,
                    y: r.y,
                    exact_mantissa: r.exact.mantissa(),
                    exact_exp2: r.exact.exponent(),
                    exact_sign: r.exact.sign(),
                    asym_mantissa: r.asym.mantissa(),
                    asym_exp2: r.asym.exponent(),
                    asym_sign: r.asym.sign(),
                    rel_dev: r.rel_dev,
                })
                .collect();
            write_table_csv(out, &rows)?;
        }
        Format::Json => write_json(out, &TableReport { table: &table, slope_window: cfg.slope_window, pass })?,
    }
    writeln!(
        log,
        "slope {:.4} (stderr {:.2e}) window [{lo}, {hi}], max N*rel_dev {:.4e}: {}",
        table.slope,
        table.slope_stderr,
        table.max_scaled_dev,
        if pass { "PASS" } else { "FAIL" }
    )?;
    Ok(if pass { EXIT_OK } else { EXIT_FAIL })
}

/// Runs the verification suite, one line or record per criterion.
pub fn cmd_verify(cfg: &RunConfig, out: &mut dyn Write) -> Result<i32> {
    let results: Vec<CriterionResult> = run_suite(cfg.only.as_deref());
    if results.is_empty() {
        return Err(usage("only", format!("no criterion matches '{}'", cfg.only.as_deref().unwrap_or(""))));
    }
    match cfg.format {
        Format::Json => write_json(&mut *out, &results)?,
        Format::Csv => {
            for r in &results {
                writeln!(out, "{}", format_line(r))?;
            }
        }
    }
    Ok(if results.iter().any(|r| r.non_convergence) {
        EXIT_NONCONVERGENCE
    } else if results.iter().all(|r| r.pass) {
        EXIT_OK
    } else {
        EXIT_FAIL
    })
}

/// Exit code for an error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NonConvergence { .. } | Error::Conditioning(_) => EXIT_NONCONVERGENCE,
        Error::Usage(_) | Error::Domain(_) | Error::Unsupported(_) | Error::Io(_) => EXIT_USAGE,
    }
}

/// Runs one resolved configuration, writing results to `--out` or `stdout`.
pub fn execute(cfg: &RunConfig, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32> {
    let mut file;
    let out: &mut dyn Write = match &cfg.out {
        Some(p) => {
            file = std::io::BufWriter::new(
                std::fs::File::create(p).map_err(|e| usage("out", format!("cannot create {}: {e}", p.display())))?,
            );
            &mut file
        }
        None => stdout,
    };
    let code = match cfg.command {
        Command::Eval => cmd_eval(cfg, out)?,
        Command::Asym => cmd_asym(cfg, out)?,
        Command::Zeros => cmd_zeros(cfg, out)?,
        Command::Table => cmd_table(cfg, out, stderr)?,
        Command::Verify => cmd_verify(cfg, out)?,
    };
    out.flush()?;
    Ok(code)
}

/// Parses `args` (program name first), runs, and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(stderr, "{e}");
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match RunConfig::resolve(&cli).and_then(|cfg| execute(&cfg, stdout, stderr)) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}
