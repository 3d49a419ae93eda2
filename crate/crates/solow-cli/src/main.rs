//! `solow` — emit capital-accumulation trajectories, series-vs-oracle
//! comparisons, parameter sweeps, and equilibrium reports as CSV or JSON.
//!
//! Numeric output uses the shortest round-trip representation with '.'
//! decimal separators and '\n' line endings, so identical invocations
//! produce byte-identical files.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use solow_svim::{
    equilibria, gamma, mittag_leffler, solve_caputo, solve_classical, svim_caputo, EvalPolicy,
    SeriesSolution, SolowParams, Trajectory, MAX_ORDER,
};

/// Validity-window tolerance reported by `solve`: the window inside which
/// the truncation is trusted to roughly single precision.
const VALIDITY_TOL: f64 = 1e-6;

/// Relative-error cells are left blank below this oracle magnitude.
const REL_ERR_FLOOR: f64 = 1e-14;

#[derive(Parser)]
#[command(
    name = "solow",
    version,
    about = "Series solver for the Solow-Swan capital-accumulation equation, classical and Caputo-fractional"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sample the series solution on a uniform time grid.
    Solve(SolveArgs),
    /// Series against the numerical oracle (RK4 for alpha = 1, fractional
    /// predictor-corrector otherwise) with error columns.
    Compare(CompareArgs),
    /// Family of series solutions over one varied parameter.
    Sweep(SweepArgs),
    /// Equilibria of the model and their stability.
    Equilibria(EquilibriaArgs),
    /// Evaluate the special functions directly.
    #[command(subcommand)]
    Special(SpecialCommand),
}

#[derive(Args)]
struct ModelArgs {
    /// Production scaling parameter (1/time).
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    p: f64,
    /// Depreciation-like scaling parameter (1/time).
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    q: f64,
    /// Production exponent.
    #[arg(long, default_value_t = 0.5, allow_hyphen_values = true)]
    mu: f64,
    /// Caputo derivative order in (0, 1]; 1 is the classical model.
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    alpha: f64,
    /// Initial capital per unit labour.
    #[arg(long, default_value_t = 0.5, allow_hyphen_values = true)]
    k0: f64,
}

#[derive(Args)]
struct GridArgs {
    /// Series truncation order N.
    #[arg(long, default_value_t = 10)]
    order: usize,
    /// End of the time range [0, t-end].
    #[arg(long = "t-end", default_value_t = 1.0, allow_hyphen_values = true)]
    t_end: f64,
    /// Number of grid points (including both endpoints).
    #[arg(long, default_value_t = 101)]
    steps: usize,
}

#[derive(Args)]
struct OutputArgs {
    /// Output file; defaults to <subcommand>.<format> in the current
    /// directory (or in $SOLOW_OUTPUT_DIR when set).
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    model: ModelArgs,
    #[command(flatten)]
    grid: GridArgs,
    /// Print the assembled series to stdout before writing the file.
    #[arg(long)]
    dump_series: bool,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct CompareArgs {
    #[command(flatten)]
    model: ModelArgs,
    #[command(flatten)]
    grid: GridArgs,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SweepParam {
    P,
    Q,
    Mu,
    Alpha,
}

impl SweepParam {
    fn name(&self) -> &'static str {
        match self {
            SweepParam::P => "p",
            SweepParam::Q => "q",
            SweepParam::Mu => "mu",
            SweepParam::Alpha => "alpha",
        }
    }
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    model: ModelArgs,
    #[command(flatten)]
    grid: GridArgs,
    /// Parameter to vary.
    #[arg(long, value_enum)]
    vary: SweepParam,
    /// First swept value.
    #[arg(long, allow_hyphen_values = true)]
    from: f64,
    /// Last swept value.
    #[arg(long, allow_hyphen_values = true)]
    to: f64,
    /// Number of swept values.
    #[arg(long, default_value_t = 5)]
    count: usize,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct EquilibriaArgs {
    #[command(flatten)]
    model: ModelArgs,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Subcommand)]
enum SpecialCommand {
    /// Print Γ(x) with 15 significant digits.
    Gamma { x: f64 },
    /// Print the Mittag-Leffler value E_alpha(z) with 15 significant digits.
    Ml {
        #[arg(long)]
        alpha: f64,
        #[arg(long, allow_hyphen_values = true)]
        z: f64,
        /// Relative truncation tolerance of the series; the default is
        /// tight enough to fill all printed digits.
        #[arg(long, default_value_t = 1e-15)]
        tol: f64,
        /// Cap on summed terms.
        #[arg(long = "max-terms", default_value_t = 200)]
        max_terms: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

impl Format {
    fn extension(&self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Json => "json",
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::FAILURE
        }
    }
}

fn run(command: Command) -> Result<(), String> {
    match command {
        Command::Solve(args) => cmd_solve(args),
        Command::Compare(args) => cmd_compare(args),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Equilibria(args) => cmd_equilibria(args),
        Command::Special(cmd) => cmd_special(cmd),
    }
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

fn validated_params(m: &ModelArgs) -> Result<SolowParams, String> {
    for (flag, v) in [("--p", m.p), ("--q", m.q), ("--mu", m.mu), ("--k0", m.k0)] {
        if !(v.is_finite() && v > 0.0) {
            return Err(format!("{flag} must be positive and finite (got {v})"));
        }
    }
    if !(m.alpha.is_finite() && m.alpha > 0.0 && m.alpha <= 1.0) {
        return Err(format!("--alpha must lie in (0, 1] (got {})", m.alpha));
    }
    SolowParams::new(m.p, m.q, m.mu, m.alpha, m.k0).map_err(|e| e.to_string())
}

fn validated_grid(g: &GridArgs) -> Result<(), String> {
    if !(g.t_end.is_finite() && g.t_end > 0.0) {
        return Err(format!("--t-end must be positive (got {})", g.t_end));
    }
    if g.steps < 2 {
        return Err(format!("--steps must be at least 2 (got {})", g.steps));
    }
    if g.order == 0 || g.order > MAX_ORDER {
        return Err(format!(
            "--order must lie in 1..={MAX_ORDER} (got {})",
            g.order
        ));
    }
    Ok(())
}

fn time_grid(t_end: f64, steps: usize) -> Vec<f64> {
    (0..steps)
        .map(|i| t_end * i as f64 / (steps - 1) as f64)
        .collect()
}

// ---------------------------------------------------------------------------
// Output plumbing
// ---------------------------------------------------------------------------

fn resolve_output(out: &OutputArgs, subcommand: &str) -> PathBuf {
    match &out.output {
        Some(path) => path.clone(),
        None => {
            let dir = std::env::var_os("SOLOW_OUTPUT_DIR")
                .map(PathBuf::from)
                .unwrap_or_else(|| PathBuf::from("."));
            dir.join(format!("{subcommand}.{}", out.format.extension()))
        }
    }
}

/// Shortest round-trip float rendering; NaN prints lowercase.
fn fmt_f(v: f64) -> String {
    if v.is_nan() {
        "nan".to_string()
    } else {
        format!("{v}")
    }
}

fn write_file(path: &PathBuf, contents: &str) -> Result<(), String> {
    std::fs::write(path, contents)
        .map_err(|e| format!("cannot write {}: {e}", path.display()))
}

fn to_json<T: Serialize>(doc: &T) -> Result<String, String> {
    serde_json::to_string_pretty(doc)
        .map(|mut s| {
            s.push('\n');
            s
        })
        .map_err(|e| format!("JSON encoding failed: {e}"))
}

/// Round to 15 significant digits, then render shortest; magnitudes
/// outside [1e-4, 1e15) switch to scientific notation.
fn fmt_sig15(v: f64) -> String {
    let rounded: f64 = format!("{v:.14e}").parse().expect("round-trip");
    let mag = rounded.abs();
    if mag != 0.0 && (mag < 1e-4 || mag >= 1e15) {
        format!("{rounded:e}")
    } else {
        fmt_f(rounded)
    }
}

// ---------------------------------------------------------------------------
// solve
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct SolveRow {
    t: f64,
    k_series: f64,
}

#[derive(Serialize)]
struct SolveDoc {
    rows: Vec<SolveRow>,
    /// None when the window is unbounded or unavailable; see the criterion.
    validity_t_max: Option<f64>,
    validity_criterion: String,
}

fn solution_for(params: &SolowParams, order: usize) -> Result<SeriesSolution, String> {
    svim_caputo(params, order).map_err(|e| e.to_string())
}

fn validity_tag(sol: &SeriesSolution) -> (f64, String) {
    match sol.validity_window(VALIDITY_TOL) {
        Ok(w) => (w.t_max, w.criterion.as_str().to_string()),
        Err(_) => (f64::NAN, "unavailable".to_string()),
    }
}

fn cmd_solve(args: SolveArgs) -> Result<(), String> {
    let params = validated_params(&args.model)?;
    validated_grid(&args.grid)?;
    let sol = solution_for(&params, args.grid.order)?;
    if args.dump_series {
        println!("{}", sol.combined().render());
    }
    let (t_max, criterion) = validity_tag(&sol);
    let mut rows = Vec::with_capacity(args.grid.steps);
    for t in time_grid(args.grid.t_end, args.grid.steps) {
        let k = sol.evaluate(t).map_err(|e| e.to_string())?;
        rows.push(SolveRow { t, k_series: k });
    }
    let path = resolve_output(&args.out, "solve");
    let contents = match args.out.format {
        Format::Csv => {
            let mut s = String::from("t,k_series\n");
            for row in &rows {
                s.push_str(&format!("{},{}\n", fmt_f(row.t), fmt_f(row.k_series)));
            }
            s.push_str(&format!("# validity_t_max={}\n", fmt_f(t_max)));
            s
        }
        Format::Json => to_json(&SolveDoc {
            rows,
            validity_t_max: t_max.is_finite().then_some(t_max),
            validity_criterion: criterion,
        })?,
    };
    write_file(&path, &contents)
}

// ---------------------------------------------------------------------------
// compare
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct CompareRow {
    t: f64,
    k_series: f64,
    k_oracle: f64,
    abs_err: f64,
    rel_err: Option<f64>,
}

/// Oracle trajectory refined so its grid contains the output grid.
fn oracle_trajectory(
    params: &SolowParams,
    t_end: f64,
    steps: usize,
) -> Result<(Trajectory, usize), String> {
    let segments = steps - 1;
    let refine = (1024usize).div_ceil(segments).max(1);
    let h = t_end / (refine * segments) as f64;
    let traj = if params.alpha() == 1.0 {
        solve_classical(params, t_end, h)
    } else {
        solve_caputo(params, t_end, h)
    }
    .map_err(|e| e.to_string())?;
    Ok((traj, refine))
}

fn cmd_compare(args: CompareArgs) -> Result<(), String> {
    let params = validated_params(&args.model)?;
    validated_grid(&args.grid)?;
    let sol = solution_for(&params, args.grid.order)?;
    let (traj, refine) = oracle_trajectory(&params, args.grid.t_end, args.grid.steps)?;
    let mut rows = Vec::with_capacity(args.grid.steps);
    for i in 0..args.grid.steps {
        let (t, k_oracle) = traj.samples()[i * refine];
        let k_series = sol.evaluate(t).map_err(|e| e.to_string())?;
        let abs_err = (k_series - k_oracle).abs();
        let rel_err = (k_oracle.abs() >= REL_ERR_FLOOR).then(|| abs_err / k_oracle.abs());
        rows.push(CompareRow {
            t,
            k_series,
            k_oracle,
            abs_err,
            rel_err,
        });
    }
    let path = resolve_output(&args.out, "compare");
    let contents = match args.out.format {
        Format::Csv => {
            let mut s = String::from("t,k_series,k_oracle,abs_err,rel_err\n");
            for row in &rows {
                s.push_str(&format!(
                    "{},{},{},{},{}\n",
                    fmt_f(row.t),
                    fmt_f(row.k_series),
                    fmt_f(row.k_oracle),
                    fmt_f(row.abs_err),
                    row.rel_err.map(fmt_f).unwrap_or_default()
                ));
            }
            s
        }
        Format::Json => to_json(&serde_json::json!({ "rows": rows }))?,
    };
    write_file(&path, &contents)
}

// ---------------------------------------------------------------------------
// sweep
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct SweepRow {
    sweep_param: &'static str,
    sweep_value: f64,
    t: f64,
    k: f64,
}

fn sweep_values(from: f64, to: f64, count: usize) -> Vec<f64> {
    if count == 1 {
        return vec![from];
    }
    (0..count)
        .map(|i| from + (to - from) * i as f64 / (count - 1) as f64)
        .collect()
}

fn cmd_sweep(args: SweepArgs) -> Result<(), String> {
    validated_grid(&args.grid)?;
    if args.count < 1 {
        return Err(format!("--count must be at least 1 (got {})", args.count));
    }
    if !(args.from.is_finite() && args.to.is_finite()) {
        return Err("--from and --to must be finite".to_string());
    }
    if args.from > args.to {
        return Err(format!(
            "--from ({}) must not exceed --to ({})",
            args.from, args.to
        ));
    }
    let grid = time_grid(args.grid.t_end, args.grid.steps);
    let mut rows = Vec::with_capacity(args.count * grid.len());
    for value in sweep_values(args.from, args.to, args.count) {
        let mut model = ModelArgs {
            p: args.model.p,
            q: args.model.q,
            mu: args.model.mu,
            alpha: args.model.alpha,
            k0: args.model.k0,
        };
        match args.vary {
            SweepParam::P => model.p = value,
            SweepParam::Q => model.q = value,
            SweepParam::Mu => model.mu = value,
            SweepParam::Alpha => model.alpha = value,
        }
        let params = validated_params(&model).map_err(|e| {
            format!("swept value {value} for --vary {}: {e}", args.vary.name())
        })?;
        let sol = solution_for(&params, args.grid.order)?;
        for &t in &grid {
            let k = sol.evaluate(t).map_err(|e| e.to_string())?;
            rows.push(SweepRow {
                sweep_param: args.vary.name(),
                sweep_value: value,
                t,
                k,
            });
        }
    }
    let path = resolve_output(&args.out, "sweep");
    let contents = match args.out.format {
        Format::Csv => {
            let mut s = String::from("sweep_param,sweep_value,t,k\n");
            for row in &rows {
                s.push_str(&format!(
                    "{},{},{},{}\n",
                    row.sweep_param,
                    fmt_f(row.sweep_value),
                    fmt_f(row.t),
                    fmt_f(row.k)
                ));
            }
            s
        }
        Format::Json => to_json(&serde_json::json!({ "rows": rows }))?,
    };
    write_file(&path, &contents)
}

// ---------------------------------------------------------------------------
// equilibria
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct EquilibriumRow {
    /// None for the undefined nontrivial point at mu = 1.
    k: Option<f64>,
    classification: &'static str,
    inflexion: bool,
}

fn cmd_equilibria(args: EquilibriaArgs) -> Result<(), String> {
    let params = validated_params(&args.model)?;
    let report = equilibria(&params);
    let rows: Vec<EquilibriumRow> = report
        .points()
        .iter()
        .map(|pt| EquilibriumRow {
            k: (!pt.k.is_nan()).then_some(pt.k),
            classification: pt.classification.as_str(),
            inflexion: pt.inflexion_marker,
        })
        .collect();
    let path = resolve_output(&args.out, "equilibria");
    let contents = match args.out.format {
        Format::Csv => {
            let mut s = String::from("k,classification,inflexion\n");
            for row in &rows {
                s.push_str(&format!(
                    "{},{},{}\n",
                    row.k.map(fmt_f).unwrap_or_else(|| "nan".to_string()),
                    row.classification,
                    row.inflexion
                ));
            }
            s
        }
        Format::Json => to_json(&serde_json::json!({ "points": rows }))?,
    };
    write_file(&path, &contents)
}

// ---------------------------------------------------------------------------
// special
// ---------------------------------------------------------------------------

fn cmd_special(cmd: SpecialCommand) -> Result<(), String> {
    match cmd {
        SpecialCommand::Gamma { x } => {
            let value = gamma(x).map_err(|e| e.to_string())?;
            println!("{}", fmt_sig15(value));
        }
        SpecialCommand::Ml {
            alpha,
            z,
            tol,
            max_terms,
        } => {
            let policy = EvalPolicy::new(tol, max_terms).map_err(|e| e.to_string())?;
            let value = mittag_leffler(alpha, z, &policy).map_err(|e| e.to_string())?;
            println!("{}", fmt_sig15(value));
        }
    }
    Ok(())
}
