//! `fracpde solve|rates|verify`: configuration, execution and output.
//!
//! A run is described by an optional JSON file that command-line flags
//! override:
//!
//! ```json
//! {
//!   "problem": "sub.sinx",
//!   "orders": { "alpha": 0.35, "beta": 0.05 },
//!   "grid": { "M": 30, "N": 40 },
//!   "refinement": { "axis": "temporal", "levels": [5, 10, 20, 40] },
//!   "output": { "format": "csv", "path": "table.csv", "plot": "table.svg" }
//! }
//! ```
//!
//! For `rates`, `grid.M` (temporal) or `grid.N` (spatial) is held fixed and
//! the other count runs through `refinement.levels`, which must double at
//! every step.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or configuration
//! error, 3 numerical failure.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::analysis::{self, Axis, RateTable};
use crate::error::Error;
use crate::grid::Grid;
use crate::plot;
use crate::problems::{self, NamedProblem};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_NUMERICAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "fracpde",
    version,
    about = "Compact schemes for time-fractional PDEs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve one problem on one grid and write the final-time field.
    Solve(Overrides),
    /// Run a refinement study and write a convergence table.
    Rates(Overrides),
    /// Run the numerical certificates and report pass/fail per item.
    Verify(Overrides),
}

#[derive(Debug, Clone, Default, clap::Args)]
pub struct Overrides {
    /// JSON configuration file.
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long)]
    pub problem: Option<String>,
    #[arg(long)]
    pub alpha: Option<f64>,
    #[arg(long)]
    pub beta: Option<f64>,
    /// Spatial intervals.
    #[arg(long = "M")]
    pub m: Option<usize>,
    /// Time steps.
    #[arg(long = "N")]
    pub n: Option<usize>,
    /// Refinement direction for `rates`.
    #[arg(long, value_enum)]
    pub axis: Option<AxisArg>,
    /// Comma-separated subdivision counts for `rates`, e.g. `5,10,20`.
    #[arg(long, value_delimiter = ',')]
    pub levels: Option<Vec<usize>>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub plot: Option<PathBuf>,
    /// Seed for the random stability perturbations of `verify`.
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AxisArg {
    Temporal,
    Spatial,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

/// On-disk configuration; every field is optional so flags can fill gaps.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub problem: Option<String>,
    #[serde(default)]
    pub orders: Orders,
    #[serde(default)]
    pub grid: GridSpec,
    #[serde(default)]
    pub refinement: Refinement,
    #[serde(default)]
    pub output: OutputSpec,
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Orders {
    pub alpha: Option<f64>,
    pub beta: Option<f64>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridSpec {
    #[serde(rename = "M")]
    pub m: Option<usize>,
    #[serde(rename = "N")]
    pub n: Option<usize>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Refinement {
    pub axis: Option<AxisArg>,
    pub levels: Option<Vec<usize>>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputSpec {
    pub format: Option<Format>,
    pub path: Option<PathBuf>,
    pub plot: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandKind {
    Solve,
    Rates,
    Verify,
}

/// A fully resolved and validated run.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: CommandKind,
    pub problem_id: String,
    pub alpha: f64,
    pub beta: Option<f64>,
    pub m: usize,
    pub n: usize,
    pub axis: AxisArg,
    pub levels: Vec<usize>,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub plot: Option<PathBuf>,
    pub seed: u64,
}

pub const DEFAULT_SEED: u64 = 20140101;

#[derive(Debug)]
enum Failure {
    Config(String),
    Numerical(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotDominant { .. } => Failure::Numerical(e.to_string()),
            other => Failure::Config(other.to_string()),
        }
    }
}

fn read_config(path: &Path) -> Result<ConfigFile, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Config(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| Failure::Config(format!("invalid config {}: {e}", path.display())))
}

impl RunConfig {
    pub fn resolve(command: CommandKind, flags: &Overrides) -> Result<Self, String> {
        Self::resolve_inner(command, flags).map_err(|f| match f {
            Failure::Config(s) | Failure::Numerical(s) => s,
        })
    }

    fn resolve_inner(command: CommandKind, flags: &Overrides) -> Result<Self, Failure> {
        let file = match &flags.config {
            Some(p) => read_config(p)?,
            None => ConfigFile::default(),
        };
        let problem_id = flags.problem.clone().or(file.problem).unwrap_or_default();
        let alpha = flags.alpha.or(file.orders.alpha);
        let beta = flags.beta.or(file.orders.beta);
        let m = flags.m.or(file.grid.m);
        let n = flags.n.or(file.grid.n);
        let axis = flags.axis.or(file.refinement.axis);
        let levels = flags.levels.clone().or(file.refinement.levels);
        let cfg = Self {
            command,
            problem_id,
            alpha: alpha.unwrap_or(0.5),
            beta,
            m: m.unwrap_or(0),
            n: n.unwrap_or(0),
            axis: axis.unwrap_or(AxisArg::Temporal),
            levels: levels.unwrap_or_default(),
            format: flags.format.or(file.output.format).unwrap_or_default(),
            out: flags.out.clone().or(file.output.path),
            plot: flags.plot.clone().or(file.output.plot),
            seed: flags.seed.or(file.seed).unwrap_or(DEFAULT_SEED),
        };
        if command == CommandKind::Verify {
            return Ok(cfg);
        }

        let bad = |msg: String| Err(Failure::Config(msg));
        if cfg.problem_id.is_empty() {
            return bad(format!(
                "--problem is required; one of {}",
                problems::PROBLEM_IDS.join(", ")
            ));
        }
        if alpha.is_none() {
            return bad("--alpha is required".into());
        }
        for (name, v) in [("alpha", Some(cfg.alpha)), ("beta", cfg.beta)] {
            if let Some(v) = v {
                if !(v > 0.0 && v < 1.0) {
                    return bad(format!("{name} = {v} must lie in (0, 1)"));
                }
            }
        }
        match command {
            CommandKind::Solve => {
                if m.is_none() || n.is_none() {
                    return bad("solve needs both --M and --N".into());
                }
            }
            CommandKind::Rates => {
                let fixed = match cfg.axis {
                    AxisArg::Temporal => m,
                    AxisArg::Spatial => n,
                };
                if fixed.is_none() {
                    return bad(match cfg.axis {
                        AxisArg::Temporal => "temporal rates need a fixed --M".into(),
                        AxisArg::Spatial => "spatial rates need a fixed --N".into(),
                    });
                }
                if cfg.levels.len() < 2 {
                    return bad("rates need at least two --levels".into());
                }
                for w in cfg.levels.windows(2) {
                    if w[1] != 2 * w[0] {
                        return bad(format!(
                            "levels must double at each step: {} then {}",
                            w[0], w[1]
                        ));
                    }
                }
            }
            CommandKind::Verify => unreachable!(),
        }
        Ok(cfg)
    }

    fn problem(&self) -> Result<NamedProblem, Failure> {
        Ok(problems::lookup(&self.problem_id, self.alpha, self.beta)?)
    }
}

fn sci(v: f64) -> String {
    format!("{v:.6e}")
}

fn rate_cell(r: Option<f64>) -> String {
    r.map_or_else(|| "*".to_string(), |v| format!("{v:.4}"))
}

/// CSV with columns `step,e_inf,rate_inf,e_l2,rate_l2`; missing rates are `*`.
pub fn rate_table_csv(table: &RateTable) -> String {
    let mut s = String::from("step,e_inf,rate_inf,e_l2,rate_l2\n");
    for r in &table.rows {
        let _ = writeln!(
            s,
            "{},{},{},{},{}",
            sci(r.step),
            sci(r.e_inf),
            rate_cell(r.rate_inf),
            sci(r.e_l2),
            rate_cell(r.rate_l2)
        );
    }
    s
}

fn emit(cfg: &RunConfig, body: &str, stdout: &mut dyn Write) -> Result<(), Failure> {
    match &cfg.out {
        Some(path) => std::fs::write(path, body)
            .map_err(|e| Failure::Config(format!("cannot write {}: {e}", path.display()))),
        None => stdout
            .write_all(body.as_bytes())
            .map_err(|e| Failure::Config(format!("cannot write output: {e}"))),
    }
}

fn write_plot(path: &Path, svg: &str) -> Result<(), Failure> {
    std::fs::write(path, svg)
        .map_err(|e| Failure::Config(format!("cannot write plot {}: {e}", path.display())))
}

#[derive(Serialize)]
struct SolveOutput<'a> {
    problem: &'a str,
    alpha: f64,
    beta: Option<f64>,
    grid: Grid,
    x: Vec<f64>,
    u: &'a [f64],
    exact: Option<Vec<f64>>,
    error: Option<analysis::ErrorReport>,
}

fn run_solve(cfg: &RunConfig, stdout: &mut dyn Write) -> Result<i32, Failure> {
    let problem = cfg.problem()?;
    let grid = Grid::unit(cfg.m, cfg.n)?;
    let history = problem.solve(&grid)?;
    let t_final = grid.final_time();
    let exact = problem.exact().map(|u| {
        grid.nodes()
            .iter()
            .map(|&x| u(x, t_final))
            .collect::<Vec<_>>()
    });
    let report = problem
        .exact()
        .map(|u| analysis::error_report_exact(&history, u));
    let u = history.final_level().as_slice();

    let body = match cfg.format {
        Format::Json => {
            let out = SolveOutput {
                problem: problem.id,
                alpha: cfg.alpha,
                beta: cfg.beta,
                grid,
                x: grid.nodes(),
                u,
                exact: exact.clone(),
                error: report,
            };
            serde_json::to_string_pretty(&out).expect("plain data serializes") + "\n"
        }
        Format::Csv => {
            let mut s = String::new();
            match &exact {
                Some(ex) => {
                    s.push_str("x,u,exact\n");
                    for (i, x) in grid.nodes().iter().enumerate() {
                        let _ = writeln!(s, "{},{},{}", sci(*x), sci(u[i]), sci(ex[i]));
                    }
                }
                None => {
                    s.push_str("x,u\n");
                    for (i, x) in grid.nodes().iter().enumerate() {
                        let _ = writeln!(s, "{},{}", sci(*x), sci(u[i]));
                    }
                }
            }
            s
        }
    };
    emit(cfg, &body, stdout)?;
    if cfg.out.is_some() || cfg.format == Format::Json {
        if let Some(r) = report {
            let _ = writeln!(stdout, "e_inf={} e_l2={}", sci(r.e_inf), sci(r.e_l2));
        }
    }
    if let Some(path) = &cfg.plot {
        let title = format!("{} on M={}, N={}", problem.id, grid.m(), grid.n());
        write_plot(path, &plot::heatmap_svg(&history, &title))?;
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct RatesOutput<'a> {
    problem: &'a str,
    alpha: f64,
    beta: Option<f64>,
    fixed: usize,
    table: &'a RateTable,
}

fn run_rates(cfg: &RunConfig, stdout: &mut dyn Write) -> Result<i32, Failure> {
    let problem = cfg.problem()?;
    let (table, fixed, guide) = match cfg.axis {
        AxisArg::Temporal => (
            analysis::temporal_rate_study(&problem, cfg.m, &cfg.levels)?,
            cfg.m,
            2.0,
        ),
        AxisArg::Spatial => (
            analysis::spatial_rate_study(&problem, cfg.n, &cfg.levels)?,
            cfg.n,
            4.0,
        ),
    };
    let body = match cfg.format {
        Format::Csv => rate_table_csv(&table),
        Format::Json => {
            let out = RatesOutput {
                problem: problem.id,
                alpha: cfg.alpha,
                beta: cfg.beta,
                fixed,
                table: &table,
            };
            serde_json::to_string_pretty(&out).expect("plain data serializes") + "\n"
        }
    };
    emit(cfg, &body, stdout)?;
    if let Some(path) = &cfg.plot {
        let axis = match table.axis {
            Axis::Temporal => "temporal",
            Axis::Spatial => "spatial",
        };
        let title = format!("{} {axis} convergence", problem.id);
        write_plot(path, &plot::rate_plot_svg(&table, guide, &title))?;
    }
    Ok(EXIT_OK)
}

fn run_verify(cfg: &RunConfig, stdout: &mut dyn Write) -> Result<i32, Failure> {
    let items = analysis::verification_suite(cfg.seed)?;
    for item in &items {
        let tag = if item.pass { "PASS" } else { "FAIL" };
        let _ = writeln!(stdout, "{tag} {}: {}", item.name, item.detail);
    }
    if let Some(path) = &cfg.out {
        let body = match cfg.format {
            Format::Json => {
                serde_json::to_string_pretty(&items).expect("plain data serializes") + "\n"
            }
            Format::Csv => {
                let mut s = String::from("name,pass,detail\n");
                for i in &items {
                    let _ = writeln!(
                        s,
                        "\"{}\",{},\"{}\"",
                        i.name,
                        i.pass,
                        i.detail.replace('"', "'")
                    );
                }
                s
            }
        };
        std::fs::write(path, body)
            .map_err(|e| Failure::Config(format!("cannot write {}: {e}", path.display())))?;
    }
    let all = items.iter().all(|i| i.pass);
    Ok(if all { EXIT_OK } else { EXIT_VERIFY_FAILED })
}

/// Executes a resolved configuration and returns the process exit code.
pub fn run(cfg: &RunConfig, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let result = match cfg.command {
        CommandKind::Solve => run_solve(cfg, stdout),
        CommandKind::Rates => run_rates(cfg, stdout),
        CommandKind::Verify => run_verify(cfg, stdout),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Config(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_CONFIG
        }
        Err(Failure::Numerical(msg)) => {
            let _ = writeln!(stderr, "numerical failure: {msg}");
            EXIT_NUMERICAL
        }
    }
}

/// Parses `args` (program name first), resolves the configuration and runs it.
pub fn main_with_args<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_CONFIG } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(stderr, "{rendered}");
            } else {
                let _ = write!(stdout, "{rendered}");
            }
            return code;
        }
    };
    let (kind, flags) = match &cli.command {
        Command::Solve(f) => (CommandKind::Solve, f),
        Command::Rates(f) => (CommandKind::Rates, f),
        Command::Verify(f) => (CommandKind::Verify, f),
    };
    match RunConfig::resolve_inner(kind, flags) {
        Ok(cfg) => run(&cfg, stdout, stderr),
        Err(Failure::Config(msg)) | Err(Failure::Numerical(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_CONFIG
        }
    }
}
