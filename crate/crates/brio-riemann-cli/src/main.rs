//! Command-line front end: solve, sample, sweep, verify, and
//! finite-volume workflows with machine-readable output.

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use brio_riemann::bump::{make_bump, BumpTestFn};
use brio_riemann::fv::{self, Grid, RunSummary};
use brio_riemann::solver::sample;
use brio_riemann::sweep::{self, Schedule, SweepMode};
use brio_riemann::weak::weak_residual;
use brio_riemann::{solve, Error, FluxParams, RiemannSolution, SampleResult, State, SCHEMA};

#[derive(Parser)]
#[command(
    name = "brio-riemann",
    version,
    about = "Exact Riemann solutions, flux-parameter limit sweeps, weak-form checks, and finite-volume runs"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Solve a Riemann problem exactly and emit the solution as JSON.
    Solve(SolveArgs),
    /// Sample a solution on a range of xi = x/t and emit CSV.
    Sample(SampleArgs),
    /// Sweep eps1 = eps2 -> 0 on a geometric schedule.
    SweepBoth(SweepArgs),
    /// Sweep eps1 -> 0 with eps2 fixed.
    SweepEps1(SweepEps1Args),
    /// Verify the weak form of the exact solution with random bumps.
    Verify(VerifyArgs),
    /// Run the finite-volume scheme and compare against the exact solution.
    Fv(FvArgs),
}

#[derive(Args, Clone)]
struct DataArgs {
    /// Left velocity.
    #[arg(long, allow_hyphen_values = true)]
    ul: f64,
    /// Left density.
    #[arg(long, allow_hyphen_values = true)]
    vl: f64,
    /// Right velocity.
    #[arg(long, allow_hyphen_values = true)]
    ur: f64,
    /// Right density.
    #[arg(long, allow_hyphen_values = true)]
    vr: f64,
    /// First flux coefficient.
    #[arg(long, allow_hyphen_values = true)]
    eps1: f64,
    /// Second flux coefficient.
    #[arg(long, allow_hyphen_values = true)]
    eps2: f64,
}

impl DataArgs {
    fn states(&self) -> (State, State, FluxParams) {
        (
            State::new(self.ul, self.vl),
            State::new(self.ur, self.vr),
            FluxParams { eps1: self.eps1, eps2: self.eps2 },
        )
    }
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    data: DataArgs,
    /// Root-finding tolerance (also via BRIO_RIEMANN_TOL).
    #[arg(long)]
    tol: Option<f64>,
    /// Output file (stdout when omitted).
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct SampleArgs {
    /// Read the solution from a solve JSON file instead of solving.
    #[arg(long, conflicts_with_all = ["ul", "vl", "ur", "vr", "eps1", "eps2"])]
    from_json: Option<String>,
    #[arg(long, required_unless_present = "from_json", allow_hyphen_values = true)]
    ul: Option<f64>,
    #[arg(long, required_unless_present = "from_json", allow_hyphen_values = true)]
    vl: Option<f64>,
    #[arg(long, required_unless_present = "from_json", allow_hyphen_values = true)]
    ur: Option<f64>,
    #[arg(long, required_unless_present = "from_json", allow_hyphen_values = true)]
    vr: Option<f64>,
    #[arg(long, required_unless_present = "from_json", allow_hyphen_values = true)]
    eps1: Option<f64>,
    #[arg(long, required_unless_present = "from_json", allow_hyphen_values = true)]
    eps2: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    xi_min: f64,
    #[arg(long, allow_hyphen_values = true)]
    xi_max: f64,
    /// Number of sample points.
    #[arg(long, default_value_t = 201)]
    num: usize,
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct ScheduleArgs {
    /// Largest schedule value.
    #[arg(long, default_value_t = 1e-1)]
    start: f64,
    /// Geometric ratio in (0, 1).
    #[arg(long, default_value_t = 0.25)]
    ratio: f64,
    /// Number of schedule points.
    #[arg(long, default_value_t = 20)]
    count: usize,
    /// Smallest admitted value.
    #[arg(long, default_value_t = Schedule::DEFAULT_FLOOR)]
    floor: f64,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long, allow_hyphen_values = true)]
    ul: f64,
    #[arg(long, allow_hyphen_values = true)]
    vl: f64,
    #[arg(long, allow_hyphen_values = true)]
    ur: f64,
    #[arg(long, allow_hyphen_values = true)]
    vr: f64,
    #[command(flatten)]
    schedule: ScheduleArgs,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct SweepEps1Args {
    #[arg(long, allow_hyphen_values = true)]
    ul: f64,
    #[arg(long, allow_hyphen_values = true)]
    vl: f64,
    #[arg(long, allow_hyphen_values = true)]
    ur: f64,
    #[arg(long, allow_hyphen_values = true)]
    vr: f64,
    /// Fixed second coefficient.
    #[arg(long, allow_hyphen_values = true)]
    eps2: f64,
    #[command(flatten)]
    schedule: ScheduleArgs,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    data: DataArgs,
    /// Number of random bump placements.
    #[arg(long, default_value_t = 10)]
    bumps: usize,
    /// Seed for the bump placement.
    #[arg(long, default_value_t = 7)]
    seed: u64,
    /// Quadrature tolerance.
    #[arg(long, default_value_t = 1e-10)]
    quad_tol: f64,
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct FvArgs {
    #[command(flatten)]
    data: DataArgs,
    #[arg(long, default_value_t = -2.0, allow_hyphen_values = true)]
    x_min: f64,
    #[arg(long, default_value_t = 2.0)]
    x_max: f64,
    #[arg(long, default_value_t = 400)]
    n_cells: usize,
    #[arg(long, default_value_t = 0.45)]
    cfl: f64,
    #[arg(long, default_value_t = 0.4)]
    t_end: f64,
    /// Where to write the cell snapshot CSV.
    #[arg(long)]
    snapshot: Option<String>,
    /// Where to write the JSON run summary (stdout when omitted).
    #[arg(long)]
    out: Option<String>,
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

fn default_tol(flag: Option<f64>) -> f64 {
    flag.or_else(|| {
        std::env::var("BRIO_RIEMANN_TOL")
            .ok()
            .and_then(|s| s.parse::<f64>().ok())
    })
    .unwrap_or(brio_riemann::state::ABS_TOL)
}

fn emit(out: &Option<String>, content: &str) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, content),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(content.as_bytes())
        }
    }
}

/// Solution JSON with the schema tag and degenerate-parameter notes.
fn solution_json(sol: &RiemannSolution) -> serde_json::Value {
    let mut notes: Vec<String> = Vec::new();
    if sol.params.eps1 > 0.0 && sol.params.eps2 == 0.0 {
        notes.push("eps2 = 0 is a degenerate-parameter extension with straight wave curves".into());
    }
    serde_json::json!({
        "schema": SCHEMA,
        "solution": sol,
        "speeds": sol.speeds(),
        "notes": notes,
    })
}

fn sample_csv(sol: &RiemannSolution, xi_min: f64, xi_max: f64, num: usize) -> String {
    let mut rows: Vec<(f64, String)> = Vec::with_capacity(num + 1);
    let n = num.max(2);
    for k in 0..n {
        let xi = xi_min + (xi_max - xi_min) * k as f64 / (n - 1) as f64;
        let row = match sample(sol, xi) {
            SampleResult::State(s) => format!("{},{},{},0", xi, s.u, s.v),
            SampleResult::Delta { u_delta, strength_rate, .. } => {
                format!("{},{},0,{}", xi, u_delta, strength_rate)
            }
        };
        rows.push((xi, row));
    }
    // A delta inside the window is reported even when the grid misses it.
    if let Some(d) = sol.delta() {
        if d.sigma > xi_min && d.sigma < xi_max {
            let grid_hits = rows.iter().any(|(xi, _)| *xi == d.sigma);
            if !grid_hits {
                rows.push((
                    d.sigma,
                    format!("{},{},0,{}", d.sigma, d.u_delta, d.strength_rate),
                ));
                rows.sort_by(|a, b| a.0.partial_cmp(&b.0).expect("finite xi"));
            }
        }
    }
    let mut out = String::from("xi,u,v,delta_strength_rate\n");
    for (_, row) in rows {
        out.push_str(&row);
        out.push('\n');
    }
    out
}

fn random_bumps(sol: &RiemannSolution, count: usize, seed: u64) -> Vec<BumpTestFn> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (lo, hi) = match (sol.min_speed(), sol.max_speed()) {
        (Some(a), Some(b)) => (a, b),
        _ => (-1.0, 1.0),
    };
    let span = (hi - lo).max(1.0);
    let mut bumps = Vec::with_capacity(count);
    for _ in 0..count {
        let t0 = rng.gen_range(0.5..1.2);
        let rt = rng.gen_range(0.1..0.4_f64).min(0.9 * t0);
        let x0 = rng.gen_range((lo - 0.5 * span)..(hi + 0.5 * span)) * t0;
        let rx = rng.gen_range(0.3..1.0) * span.max(0.5);
        bumps.push(make_bump((x0, t0), (rx, rt)).expect("t0 - rt > 0 by construction"));
    }
    bumps
}

fn run() -> Result<(), Error> {
    let cli = Cli::parse();
    let io_err = |e: std::io::Error| Error::InvalidInput(format!("write failed: {e}"));
    match cli.cmd {
        Cmd::Solve(args) => {
            let (l, r, p) = args.data.states();
            let sol = solve(l, r, p, default_tol(args.tol))?;
            let json = serde_json::to_string_pretty(&solution_json(&sol))
                .expect("solutions serialize");
            emit(&args.out, &(json + "\n")).map_err(io_err)?;
        }
        Cmd::Sample(args) => {
            let sol = match &args.from_json {
                Some(path) => {
                    let raw = std::fs::read_to_string(path)
                        .map_err(|e| Error::InvalidInput(format!("cannot read {path}: {e}")))?;
                    let value: serde_json::Value = serde_json::from_str(&raw)
                        .map_err(|e| Error::InvalidInput(format!("bad JSON in {path}: {e}")))?;
                    serde_json::from_value::<RiemannSolution>(value["solution"].clone())
                        .map_err(|e| Error::InvalidInput(format!("bad solution in {path}: {e}")))?
                }
                None => {
                    let l = State::new(args.ul.unwrap(), args.vl.unwrap());
                    let r = State::new(args.ur.unwrap(), args.vr.unwrap());
                    let p = FluxParams { eps1: args.eps1.unwrap(), eps2: args.eps2.unwrap() };
                    solve(l, r, p, default_tol(args.tol))?
                }
            };
            if args.xi_min >= args.xi_max || args.xi_min.is_nan() || args.xi_max.is_nan() {
                return Err(Error::InvalidInput(format!(
                    "need xi_min < xi_max, got {} and {}",
                    args.xi_min, args.xi_max
                )));
            }
            let csv = sample_csv(&sol, args.xi_min, args.xi_max, args.num);
            emit(&args.out, &csv).map_err(io_err)?;
        }
        Cmd::SweepBoth(args) => {
            let left = State::new(args.ul, args.vl);
            let right = State::new(args.ur, args.vr);
            let sch = Schedule::new(
                args.schedule.start,
                args.schedule.ratio,
                args.schedule.count,
                args.schedule.floor,
                SweepMode::BothEqual,
            )?;
            let records = sweep::sweep_both(left, right, &sch)?;
            match args.format {
                Format::Csv => emit(&args.out, &sweep::records_to_csv(&records)).map_err(io_err)?,
                Format::Json => {
                    let report = sweep::build_report(left, right, sch.mode, records);
                    let json =
                        serde_json::to_string_pretty(&report).expect("reports serialize");
                    emit(&args.out, &(json + "\n")).map_err(io_err)?;
                }
            }
        }
        Cmd::SweepEps1(args) => {
            let left = State::new(args.ul, args.vl);
            let right = State::new(args.ur, args.vr);
            let sch = Schedule::new(
                args.schedule.start,
                args.schedule.ratio,
                args.schedule.count,
                args.schedule.floor,
                SweepMode::Eps1Only { eps2: args.eps2 },
            )?;
            let records = sweep::sweep_eps1(left, right, args.eps2, &sch)?;
            match args.format {
                Format::Csv => emit(&args.out, &sweep::records_to_csv(&records)).map_err(io_err)?,
                Format::Json => {
                    let report = sweep::build_report(left, right, sch.mode, records);
                    let json =
                        serde_json::to_string_pretty(&report).expect("reports serialize");
                    emit(&args.out, &(json + "\n")).map_err(io_err)?;
                }
            }
        }
        Cmd::Verify(args) => {
            let (l, r, p) = args.data.states();
            let sol = solve(l, r, p, default_tol(args.tol))?;
            let bumps = random_bumps(&sol, args.bumps, args.seed);
            let report = weak_residual(&sol, p.system(), &bumps, args.quad_tol)?;
            let json = serde_json::json!({
                "schema": SCHEMA,
                "system": p.system(),
                "quad_tol": args.quad_tol,
                "bumps": bumps,
                "report": report,
            });
            let text = serde_json::to_string_pretty(&json).expect("reports serialize");
            emit(&args.out, &(text + "\n")).map_err(io_err)?;
        }
        Cmd::Fv(args) => {
            let (l, r, p) = args.data.states();
            let grid = Grid::new(args.x_min, args.x_max, args.n_cells, args.cfl, args.t_end)?;
            let field = fv::lax_friedrichs_run(l, r, p, grid)?;
            let exact = solve(l, r, p, default_tol(args.tol))?;
            let l1 = if exact.has_delta() {
                None
            } else {
                Some(fv::l1_error(&field, &exact, field.time)?)
            };
            if let Some(path) = &args.snapshot {
                std::fs::write(path, fv::field_to_csv(&field)).map_err(io_err)?;
            }
            let summary = RunSummary::of(&field, l1);
            let json = serde_json::json!({
                "schema": SCHEMA,
                "grid": grid,
                "summary": summary,
            });
            let text = serde_json::to_string_pretty(&json).expect("summaries serialize");
            emit(&args.out, &(text + "\n")).map_err(io_err)?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
