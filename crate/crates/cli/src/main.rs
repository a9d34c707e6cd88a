// Copyright 2026 dimerss contributors
// SPDX-License-Identifier: Apache-2.0

//! `dimerss`: steady states, parameter sweeps, robustness curves and Monte
//! Carlo checks for two driven, decaying, exchange-coupled qubits.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use dimerss_core::density::DensityParams;
use dimerss_core::entanglement::concurrence;
use dimerss_core::liouvillian::build_liouvillian;
use dimerss_core::robustness::snr_curve;
use dimerss_core::steady_state::solve_steady;
use dimerss_core::stochastic::{run_ensemble, TrajectoryConfig};
use dimerss_core::sweep::{
    cross_validate, error_row_csv, fmt_f64, run_sweep, steady_state_point, Outputs, Range,
    SweepConfig, CSV_HEADER,
};
use dimerss_core::{DriveMode, Error, ModelParams};

/// Largest accepted closed-form vs numeric distance in `validate`.
const VALIDATE_TOL: f64 = 1e-9;
/// Floor of the `traj` acceptance band.
const TRAJ_ABS_TOL: f64 = 0.03;

#[derive(Parser, Debug)]
#[command(name = "dimerss", version, about)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Noise mode; `both` runs each mode in turn (not for `steady`)
    #[arg(long, global = true, value_enum, default_value_t = ModeArg::Common)]
    mode: ModeArg,
    /// Exchange coupling J
    #[arg(
        long,
        global = true,
        default_value_t = 2.0,
        allow_negative_numbers = true
    )]
    j: f64,
    /// Drive amplitude α
    #[arg(
        long,
        global = true,
        default_value_t = 1.0,
        allow_negative_numbers = true
    )]
    alpha: f64,
    /// Noise strength η
    #[arg(
        long,
        global = true,
        default_value_t = 0.0,
        allow_negative_numbers = true
    )]
    eta: f64,
    /// Decay rate γ
    #[arg(
        long,
        global = true,
        default_value_t = 1.0,
        allow_negative_numbers = true
    )]
    gamma: f64,
    /// Output file (default: stdout)
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Random seed
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    /// Monte Carlo time step
    #[arg(long, global = true, default_value_t = 0.005)]
    dt: f64,
    /// Monte Carlo final time
    #[arg(long = "t-end", global = true, default_value_t = 40.0)]
    t_end: f64,
    /// Number of Monte Carlo trajectories
    #[arg(long = "n-traj", global = true, default_value_t = 2000)]
    n_traj: usize,
    /// Worker threads (default: all cores)
    #[arg(long, global = true, env = "DIMERSS_THREADS")]
    threads: Option<usize>,
    /// Also solve numerically and report the closed-form vs numeric distance
    #[arg(long = "cross-check", global = true)]
    cross_check: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Steady state at one point: the 4×4 density matrix and its parameters
    Steady,
    /// (α, η) grid to CSV
    Sweep(GridArgs),
    /// Noise-induced entanglement gain Δ over an (α, η) grid to CSV
    Delta(GridArgs),
    /// Signal-to-noise ratio for a list of couplings to CSV
    Snr {
        /// Comma-separated couplings
        #[arg(
            long = "j-list",
            value_delimiter = ',',
            default_value = "0.5,1,1.5,2,3,4"
        )]
        j_list: Vec<f64>,
    },
    /// Closed-form vs numeric steady states at random points
    Validate {
        #[arg(long, default_value_t = 500)]
        samples: usize,
    },
    /// Monte Carlo ensemble of the fluctuating drive vs the steady state
    Traj,
}

#[derive(Args, Debug)]
struct GridArgs {
    /// α grid as MIN,MAX,COUNT
    #[arg(long = "alpha-range", default_value = "0,3,50", value_parser = parse_range)]
    alpha_range: Range,
    /// η grid as MIN,MAX,COUNT
    #[arg(long = "eta-range", default_value = "0,0.5,50", value_parser = parse_range)]
    eta_range: Range,
    /// Comma-separated subset of concurrence,delta,purity,populations
    #[arg(long, value_parser = parse_outputs)]
    outputs: Option<Outputs>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Common,
    Independent,
    Both,
}

impl ModeArg {
    fn modes(self) -> Vec<DriveMode> {
        match self {
            ModeArg::Common => vec![DriveMode::Common],
            ModeArg::Independent => vec![DriveMode::Independent],
            ModeArg::Both => DriveMode::ALL.to_vec(),
        }
    }
}

fn parse_range(s: &str) -> Result<Range, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(format!("expected MIN,MAX,COUNT, got '{s}'"));
    }
    let min = parts[0].parse::<f64>().map_err(|e| e.to_string())?;
    let max = parts[1].parse::<f64>().map_err(|e| e.to_string())?;
    let count = parts[2].parse::<usize>().map_err(|e| e.to_string())?;
    Range::new(min, max, count).map_err(|e| e.to_string())
}

fn parse_outputs(s: &str) -> Result<Outputs, String> {
    Outputs::parse(s).map_err(|e| e.to_string())
}

/// How a run ended, mapped onto the process exit code.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Numerical(String),
    Mismatch(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Numerical(_) => 2,
            Failure::Mismatch(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Numerical(m) | Failure::Mismatch(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidParams(_) => Failure::Usage(e.to_string()),
            other => Failure::Numerical(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Numerical(format!("i/o error: {e}"))
    }
}

type Outcome = Result<(), Failure>;

fn single_mode(g: &Global) -> Result<DriveMode, Failure> {
    match g.mode.modes().as_slice() {
        [m] => Ok(*m),
        _ => Err(Failure::Usage("this command needs a single --mode".into())),
    }
}

fn fmt_complex(z: dimerss_core::qops::C64) -> String {
    let sign = if z.im < 0.0 { '-' } else { '+' };
    format!("{}{}{}i", fmt_f64(z.re), sign, fmt_f64(z.im.abs()))
}

fn cmd_steady(g: &Global, w: &mut dyn Write) -> Outcome {
    let mode = single_mode(g)?;
    let p = ModelParams::with_gamma(g.alpha, g.eta, g.j, g.gamma, mode)?;
    let rho = steady_state_point(&p)?;
    writeln!(
        w,
        "# mode={mode} j={} alpha={} eta={} gamma={}",
        g.j, g.alpha, g.eta, g.gamma
    )?;
    writeln!(w, "rho")?;
    let m = rho.matrix();
    for i in 0..4 {
        let row: Vec<String> = (0..4).map(|k| fmt_complex(m[(i, k)])).collect();
        writeln!(w, "{}", row.join(" "))?;
    }
    writeln!(w, "params")?;
    for (name, v) in DensityParams::NAMES.iter().zip(rho.params().to_array()) {
        writeln!(w, "{name}={}", fmt_f64(v))?;
    }
    writeln!(w, "concurrence={}", fmt_f64(concurrence(&rho)?.c))?;
    if g.cross_check {
        let numeric = solve_steady(&build_liouvillian(&p))?;
        writeln!(w, "residual={}", fmt_f64(numeric.rho.distance(&rho)))?;
    }
    Ok(())
}

fn cmd_grid(g: &Global, args: &GridArgs, delta_only: bool, w: &mut dyn Write) -> Outcome {
    let outputs = match (delta_only, args.outputs) {
        (true, _) => Outputs::parse("delta")?,
        (false, Some(o)) => o,
        (false, None) => Outputs::all(),
    };
    writeln!(w, "{CSV_HEADER}")?;
    let mut failed = 0usize;
    for mode in g.mode.modes() {
        let cfg = SweepConfig {
            alpha_range: args.alpha_range,
            eta_range: args.eta_range,
            gamma: g.gamma,
            outputs,
            cross_check: g.cross_check,
            ..SweepConfig::new(mode, g.j)
        };
        for row in run_sweep(&cfg)? {
            match row {
                Ok(r) => writeln!(w, "{}", r.to_csv())?,
                Err(e) => {
                    log::error!("alpha={} eta={}: {}", e.alpha, e.eta, e.error);
                    writeln!(w, "{}", error_row_csv(&cfg, &e))?;
                    failed += 1;
                }
            }
        }
    }
    if failed > 0 {
        return Err(Failure::Numerical(format!("{failed} grid point(s) failed")));
    }
    Ok(())
}

fn cmd_snr(g: &Global, j_list: &[f64], w: &mut dyn Write) -> Outcome {
    writeln!(w, "mode,j,alpha_star,c_star,eta_star,snr")?;
    let mut failed = 0usize;
    for mode in g.mode.modes() {
        for (j, point) in snr_curve(j_list, mode) {
            match point {
                Ok(p) => writeln!(
                    w,
                    "{mode},{},{},{},{},{}",
                    fmt_f64(j),
                    fmt_f64(p.alpha_star),
                    fmt_f64(p.c_star),
                    fmt_f64(p.eta_star),
                    fmt_f64(p.snr)
                )?,
                Err(e) => {
                    log::error!("mode={mode} j={j}: {e}");
                    writeln!(w, "{mode},{},NaN,NaN,NaN,NaN", fmt_f64(j))?;
                    failed += 1;
                }
            }
        }
    }
    if failed > 0 {
        return Err(Failure::Numerical(format!("{failed} coupling(s) failed")));
    }
    Ok(())
}

fn cmd_validate(g: &Global, samples: usize, w: &mut dyn Write) -> Outcome {
    writeln!(w, "mode,samples,max_error,worst_alpha,worst_eta,worst_j")?;
    let mut worst = 0.0f64;
    for mode in g.mode.modes() {
        let r = cross_validate(mode, samples, g.seed)?;
        let (a, e, j) = r.worst_point;
        writeln!(
            w,
            "{mode},{samples},{},{},{},{}",
            fmt_f64(r.max_error),
            fmt_f64(a),
            fmt_f64(e),
            fmt_f64(j)
        )?;
        worst = worst.max(r.max_error);
    }
    if worst >= VALIDATE_TOL {
        return Err(Failure::Mismatch(format!(
            "max error {worst:e} exceeds {VALIDATE_TOL:e}"
        )));
    }
    Ok(())
}

fn cmd_traj(g: &Global, w: &mut dyn Write) -> Outcome {
    writeln!(
        w,
        "mode,j,gamma,alpha,eta,dt,t_end,n_traj,seed,distance,stderr,frobenius_stderr,tolerance,max_trace_defect,max_hermiticity_defect"
    )?;
    let mut mismatches = Vec::new();
    for mode in g.mode.modes() {
        let p = ModelParams::with_gamma(g.alpha, g.eta, g.j, g.gamma, mode)?;
        let cfg = TrajectoryConfig::new(p, g.dt, g.t_end, g.n_traj, g.seed);
        let ens = run_ensemble(&cfg)?;
        let target = steady_state_point(&p)?;
        let distance = ens.rho_mean.distance(&target);
        let tolerance = (3.0 * ens.stderr).max(TRAJ_ABS_TOL);
        writeln!(
            w,
            "{mode},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
            fmt_f64(g.j),
            fmt_f64(g.gamma),
            fmt_f64(g.alpha),
            fmt_f64(g.eta),
            fmt_f64(g.dt),
            fmt_f64(g.t_end),
            g.n_traj,
            g.seed,
            fmt_f64(distance),
            fmt_f64(ens.stderr),
            fmt_f64(ens.frobenius_stderr),
            fmt_f64(tolerance),
            fmt_f64(ens.max_trace_defect),
            fmt_f64(ens.max_hermiticity_defect)
        )?;
        if distance > tolerance {
            mismatches.push(format!("{mode}: distance {distance:e} > {tolerance:e}"));
        }
    }
    if !mismatches.is_empty() {
        return Err(Failure::Mismatch(mismatches.join("; ")));
    }
    Ok(())
}

fn run(cli: &Cli) -> Outcome {
    let g = &cli.global;
    let sink: Box<dyn Write> = match &g.out {
        Some(path) => Box::new(
            File::create(path)
                .map_err(|e| Failure::Usage(format!("cannot open {}: {e}", path.display())))?,
        ),
        None => Box::new(io::stdout().lock()),
    };
    let mut w = BufWriter::new(sink);
    let result = match &cli.command {
        Command::Steady => cmd_steady(g, &mut w),
        Command::Sweep(args) => cmd_grid(g, args, false, &mut w),
        Command::Delta(args) => cmd_grid(g, args, true, &mut w),
        Command::Snr { j_list } => cmd_snr(g, j_list, &mut w),
        Command::Validate { samples } => cmd_validate(g, *samples, &mut w),
        Command::Traj => cmd_traj(g, &mut w),
    };
    w.flush()?;
    result
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(n) = cli.global.threads {
        if n == 0 {
            eprintln!("error: --threads must be at least 1");
            return ExitCode::from(1);
        }
        pool = pool.num_threads(n);
    }
    let pool = match pool.build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: cannot start worker pool: {e}");
            return ExitCode::from(2);
        }
    };
    match pool.install(|| run(&cli)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
