//! Command-line front end. Every subcommand validates its arguments, computes
//! the whole result in memory, then writes it in one piece: to stdout, or to
//! `--out` through a temporary file renamed into place.
//!
//! Exit codes: 0 success, 2 usage error, 3 computational (or I/O) error.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::coefficients::{classical_coefficients, coefficients_with, CoeffOptions, MethodId};
use crate::error::Error;
use crate::phaselag::phase_lag;
use crate::schrodinger::{
    bench, h_ladder, solve_phase_shift_with, OmegaConvention, RadialScatteringProblem,
    RESONANCE_ENERGIES,
};
use crate::stability::{scan_region_with, GridSpec};

pub const VERSION_LINE: &str = concat!("oscint ", env!("CARGO_PKG_VERSION"));

/// Environment variable overriding the closed-form precision floor (bits).
pub const PRECISION_ENV: &str = "OSCINT_PRECISION_BITS";

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_COMPUTE: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "oscint",
    version,
    about = "Phase-fitted 14-step integrators: coefficients, phase lag, stability, scattering benchmark"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dump method coefficients at one or more fitted frequencies.
    Coeffs(CoeffsArgs),
    /// Tabulate the phase lag over a range of s.
    Phaselag(PhaselagArgs),
    /// Classify stability over an (s, v) grid.
    Stability(StabilityArgs),
    /// One scattering phase-shift computation.
    Solve(SolveArgs),
    /// Sweep energies x methods x step sizes.
    Bench(BenchArgs),
}

#[derive(Args, Debug)]
struct Output {
    /// Output file; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Defaults to JSON for `coeffs`, CSV elsewhere.
    #[arg(long, value_enum)]
    format: Option<Format>,
}

impl Output {
    fn format_or(&self, default: Format) -> Format {
        self.format.unwrap_or(default)
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Convention {
    Paper,
    Physical,
}

impl From<Convention> for OmegaConvention {
    fn from(c: Convention) -> Self {
        match c {
            Convention::Paper => OmegaConvention::Paper,
            Convention::Physical => OmegaConvention::Physical,
        }
    }
}

#[derive(Args, Debug)]
struct CoeffsArgs {
    #[arg(long)]
    method: String,
    /// Comma-separated fitted frequencies; ignored by the classical method.
    #[arg(long, value_delimiter = ',')]
    v: Vec<f64>,
    #[command(flatten)]
    output: Output,
}

#[derive(Args, Debug)]
struct PhaselagArgs {
    /// Comma-separated methods, or `all`.
    #[arg(long, alias = "method", default_value = "all")]
    methods: String,
    /// Fitted frequency.
    #[arg(long, default_value_t = 1.0)]
    v: f64,
    #[arg(long, default_value_t = 0.01)]
    smin: f64,
    #[arg(long, default_value_t = 3.0)]
    smax: f64,
    #[arg(long, default_value_t = 300)]
    n: usize,
    #[command(flatten)]
    output: Output,
}

#[derive(Args, Debug)]
struct StabilityArgs {
    #[arg(long)]
    method: String,
    /// Grid size as `NSxNV`.
    #[arg(long, default_value = "400x400")]
    grid: String,
    #[arg(long, default_value_t = 0.0)]
    smin: f64,
    #[arg(long, default_value_t = 10.0)]
    smax: f64,
    #[arg(long, default_value_t = 0.0)]
    vmin: f64,
    #[arg(long, default_value_t = 10.0)]
    vmax: f64,
    #[command(flatten)]
    output: Output,
}

#[derive(Args, Debug)]
struct SolveArgs {
    #[arg(long)]
    method: String,
    #[arg(long = "E")]
    energy: f64,
    #[arg(long)]
    h: f64,
    #[arg(long, value_enum, default_value_t = Convention::Paper)]
    convention: Convention,
    #[command(flatten)]
    output: Output,
}

#[derive(Args, Debug)]
struct BenchArgs {
    /// Comma-separated energies.
    #[arg(long, value_delimiter = ',')]
    energies: Vec<f64>,
    /// Comma-separated methods, or `all`.
    #[arg(long, default_value = "all")]
    methods: String,
    /// Number of rungs of the ladder h_k = 15 / (250 * 2^k).
    #[arg(long = "h-ladder", default_value_t = 8)]
    h_ladder: usize,
    #[arg(long, value_enum, default_value_t = Convention::Paper)]
    convention: Convention,
    #[command(flatten)]
    output: Output,
}

enum Failure {
    Usage(String),
    Compute(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidInput(_) | Error::InvalidFrequency { .. } => {
                Failure::Usage(e.to_string())
            }
            other => Failure::Compute(other.to_string()),
        }
    }
}

fn usage<T>(msg: impl Into<String>) -> Result<T, Failure> {
    Err(Failure::Usage(msg.into()))
}

fn parse_method(s: &str) -> Result<MethodId, Failure> {
    s.parse::<MethodId>()
        .map_err(|e| Failure::Usage(e.to_string()))
}

fn parse_methods(s: &str) -> Result<Vec<MethodId>, Failure> {
    if s.trim().eq_ignore_ascii_case("all") {
        return Ok(MethodId::ALL.to_vec());
    }
    s.split(',').map(parse_method).collect()
}

fn parse_grid(s: &str) -> Result<(usize, usize), Failure> {
    let (a, b) = s
        .split_once(['x', 'X'])
        .ok_or_else(|| Failure::Usage(format!("grid '{s}' is not of the form NSxNV")))?;
    let n_s = a
        .trim()
        .parse::<usize>()
        .map_err(|e| Failure::Usage(e.to_string()))?;
    let n_v = b
        .trim()
        .parse::<usize>()
        .map_err(|e| Failure::Usage(e.to_string()))?;
    if n_s < 2 || n_v < 2 {
        return usage("grid sizes must be at least 2");
    }
    Ok((n_s, n_v))
}

fn finite(name: &str, x: f64) -> Result<f64, Failure> {
    if x.is_finite() {
        Ok(x)
    } else {
        usage(format!("--{name} must be finite"))
    }
}

fn options_from_env() -> Result<CoeffOptions, Failure> {
    let mut opts = CoeffOptions::default();
    if let Ok(s) = std::env::var(PRECISION_ENV) {
        let bits = s
            .trim()
            .parse::<usize>()
            .map_err(|_| Failure::Usage(format!("{PRECISION_ENV}='{s}' is not a bit count")))?;
        if !(64..=opts.precision_cap).contains(&bits) {
            return usage(format!(
                "{PRECISION_ENV} must lie in [64, {}]",
                opts.precision_cap
            ));
        }
        opts.precision_floor = bits;
    }
    Ok(opts)
}

/// Write `bytes` to `path` through a sibling temporary file.
fn write_atomic(path: &Path, bytes: &[u8]) -> std::io::Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d.to_path_buf(),
        _ => PathBuf::from("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(bytes)?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

struct Table {
    columns: Vec<&'static str>,
    rows: Vec<Vec<String>>,
}

impl Table {
    fn csv(&self) -> String {
        let mut s = format!("# {VERSION_LINE}\n{}\n", self.columns.join(","));
        for r in &self.rows {
            s.push_str(&r.join(","));
            s.push('\n');
        }
        s
    }

    fn json(&self) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = self
            .rows
            .iter()
            .map(|r| {
                let obj: serde_json::Map<String, serde_json::Value> = self
                    .columns
                    .iter()
                    .zip(r)
                    .map(|(c, v)| {
                        let val = v
                            .parse::<f64>()
                            .ok()
                            .filter(|x| x.is_finite())
                            .map(|x| json!(x))
                            .unwrap_or_else(|| json!(v));
                        (c.to_string(), val)
                    })
                    .collect();
                serde_json::Value::Object(obj)
            })
            .collect();
        json!({ "version": VERSION_LINE, "columns": self.columns, "rows": rows })
    }

    fn render(&self, f: Format) -> String {
        match f {
            Format::Csv => self.csv(),
            Format::Json => pretty(&self.json()),
        }
    }
}

fn pretty(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn num(x: f64) -> String {
    format!("{x:e}")
}

fn cmd_coeffs(a: &CoeffsArgs, opts: &CoeffOptions) -> Result<String, Failure> {
    let method = parse_method(&a.method)?;
    let vs = if a.v.is_empty() {
        if method == MethodId::Classical {
            vec![0.0]
        } else {
            return usage("--v is required for phase-fitted methods");
        }
    } else {
        a.v.clone()
    };
    for v in &vs {
        finite("v", *v)?;
        if method != MethodId::Classical && !(*v > 0.0 && *v <= opts.v_max) {
            return usage(format!(
                "--v {v}: fitted frequency must lie in (0, {}]",
                opts.v_max
            ));
        }
    }
    let sets = vs
        .iter()
        .map(|v| coefficients_with(method, *v, opts))
        .collect::<crate::error::Result<Vec<_>>>()?;
    Ok(match a.output.format_or(Format::Json) {
        Format::Json => {
            let mut entries = Vec::new();
            for set in &sets {
                let mut e = serde_json::to_value(set).expect("serializable");
                if method == MethodId::Classical {
                    let exact = classical_coefficients();
                    e["b_exact"] = serde_json::to_value(&exact).expect("serializable")["b"].clone();
                }
                entries.push(e);
            }
            pretty(&json!({ "version": VERSION_LINE, "coefficients": entries }))
        }
        Format::Csv => {
            let mut rows = Vec::new();
            for set in &sets {
                for j in 0..15 {
                    rows.push(vec![
                        set.method.slug().to_string(),
                        num(set.v),
                        j.to_string(),
                        num(set.a[j]),
                        num(set.b[j]),
                        set.precision_bits_used.to_string(),
                    ]);
                }
            }
            Table {
                columns: vec!["method", "v", "j", "a", "b", "precision_bits"],
                rows,
            }
            .csv()
        }
    })
}

fn cmd_phaselag(a: &PhaselagArgs, opts: &CoeffOptions) -> Result<String, Failure> {
    let methods = parse_methods(&a.methods)?;
    finite("v", a.v)?;
    finite("smin", a.smin)?;
    finite("smax", a.smax)?;
    if a.n < 2 || a.smax < a.smin {
        return usage("need --n >= 2 and --smax >= --smin");
    }
    if !(a.v > 0.0 && a.v <= opts.v_max) {
        return usage(format!("--v must lie in (0, {}]", opts.v_max));
    }
    let mut rows = Vec::new();
    for m in methods {
        let c = coefficients_with(m, a.v, opts)?;
        for i in 0..a.n {
            let s = a.smin + (a.smax - a.smin) * i as f64 / (a.n - 1) as f64;
            let pl = phase_lag(&c, s).map(num).unwrap_or_else(|_| "nan".into());
            rows.push(vec![m.slug().to_string(), num(a.v), num(s), pl]);
        }
    }
    Ok(Table {
        columns: vec!["method", "v", "s", "phase_lag"],
        rows,
    }
    .render(a.output.format_or(Format::Csv)))
}

fn cmd_stability(a: &StabilityArgs, opts: &CoeffOptions) -> Result<String, Failure> {
    let method = parse_method(&a.method)?;
    let (n_s, n_v) = parse_grid(&a.grid)?;
    for (n, x) in [
        ("smin", a.smin),
        ("smax", a.smax),
        ("vmin", a.vmin),
        ("vmax", a.vmax),
    ] {
        finite(n, x)?;
    }
    if a.smax < a.smin || a.vmax < a.vmin || a.vmin < 0.0 {
        return usage("grid bounds must be ordered and v non-negative");
    }
    let spec = GridSpec {
        s_min: a.smin,
        s_max: a.smax,
        v_min: a.vmin,
        v_max: a.vmax,
        n_s,
        n_v,
    };
    let grid = scan_region_with(method, spec, opts)?;
    for (s, v, e) in &grid.failures {
        eprintln!("warning: ({s}, {v}) marked unstable: {e}");
    }
    let mut rows = Vec::with_capacity(n_s * n_v);
    for i in 0..n_s {
        for j in 0..n_v {
            rows.push(vec![
                num(spec.s_at(i)),
                num(spec.v_at(j)),
                u8::from(grid.get(i, j)).to_string(),
            ]);
        }
    }
    Ok(Table {
        columns: vec!["s", "v", "stable"],
        rows,
    }
    .render(a.output.format_or(Format::Csv)))
}

const BENCH_COLUMNS: [&str; 9] = [
    "E",
    "method",
    "h",
    "steps",
    "rhs_evals",
    "tan_delta",
    "delta",
    "digits",
    "omega_convention",
];

fn cmd_solve(a: &SolveArgs, opts: &CoeffOptions) -> Result<String, Failure> {
    let method = parse_method(&a.method)?;
    finite("E", a.energy)?;
    finite("h", a.h)?;
    if !(a.energy > 0.0 && a.h > 0.0) {
        return usage("--E and --h must be positive");
    }
    let mut prob = RadialScatteringProblem::benchmark(a.energy, a.h);
    prob.omega_convention = a.convention.into();
    let r = solve_phase_shift_with(&prob, method, opts, std::f64::consts::FRAC_PI_2)?;
    Ok(Table {
        columns: BENCH_COLUMNS.to_vec(),
        rows: vec![vec![
            num(a.energy),
            method.slug().to_string(),
            num(a.h),
            r.steps.to_string(),
            r.rhs_evals.to_string(),
            num(r.tan_delta),
            num(r.delta),
            format!("{:.4}", r.digits),
            prob.omega_convention.name().to_string(),
        ]],
    }
    .render(a.output.format_or(Format::Csv)))
}

fn cmd_bench(a: &BenchArgs, opts: &CoeffOptions) -> Result<String, Failure> {
    let methods = parse_methods(&a.methods)?;
    let energies = if a.energies.is_empty() {
        RESONANCE_ENERGIES.to_vec()
    } else {
        a.energies.clone()
    };
    for e in &energies {
        if !(finite("energies", *e)? > 0.0) {
            return usage("energies must be positive");
        }
    }
    if a.h_ladder == 0 || a.h_ladder > 12 {
        return usage("--h-ladder must lie in 1..=12");
    }
    let rows = bench(
        &energies,
        &methods,
        &h_ladder(a.h_ladder),
        a.convention.into(),
        opts,
    )?;
    Ok(Table {
        columns: BENCH_COLUMNS.to_vec(),
        rows: rows
            .iter()
            .map(|r| {
                vec![
                    num(r.energy),
                    r.method.slug().to_string(),
                    num(r.h),
                    r.steps.to_string(),
                    r.rhs_evals.to_string(),
                    num(r.tan_delta),
                    num(r.delta),
                    format!("{:.4}", r.digits),
                    r.omega_convention.name().to_string(),
                ]
            })
            .collect(),
    }
    .render(a.output.format_or(Format::Csv)))
}

/// Run with explicit arguments (the first is the program name) and sinks.
pub fn run_with<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let result = options_from_env().and_then(|opts| {
        let (text, out) = match &cli.cmd {
            Command::Coeffs(a) => (cmd_coeffs(a, &opts)?, &a.output.out),
            Command::Phaselag(a) => (cmd_phaselag(a, &opts)?, &a.output.out),
            Command::Stability(a) => (cmd_stability(a, &opts)?, &a.output.out),
            Command::Solve(a) => (cmd_solve(a, &opts)?, &a.output.out),
            Command::Bench(a) => (cmd_bench(a, &opts)?, &a.output.out),
        };
        match out {
            Some(p) => write_atomic(p, text.as_bytes())
                .map_err(|e| Failure::Compute(format!("writing {}: {e}", p.display()))),
            None => stdout
                .write_all(text.as_bytes())
                .map_err(|e| Failure::Compute(e.to_string())),
        }
    });
    match result {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(m)) => {
            let _ = writeln!(stderr, "error: {m}");
            EXIT_USAGE
        }
        Err(Failure::Compute(m)) => {
            let _ = writeln!(stderr, "error: {m}");
            EXIT_COMPUTE
        }
    }
}

/// Run with the process arguments and standard streams.
pub fn run() -> i32 {
    let mut out = std::io::stdout().lock();
    let mut err = std::io::stderr().lock();
    run_with(std::env::args_os(), &mut out, &mut err)
}
