use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use dunkl_fp::analytic::{
    centrifugal_solution, eval_descriptor, generate_figure, generate_table1, generate_table2, oscillator_solution,
    table1_csv, table2_csv, EigenDescriptor, Figure, FigureOptions,
};
use dunkl_fp::domain::ParityFunction;
use dunkl_fp::numeric::{build_sector_operator, decay_rate, evolve, lowest_eigenpairs, Trajectory};
use dunkl_fp::render::format_sig;
use dunkl_fp::Parity;

mod config;
mod suites;

use config::{Problem, RunConfig};
use suites::{Fault, Suite};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("config error: {0}")]
    Config(String),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Library(#[from] dunkl_fp::Error),
    #[error("verification failed: {0}")]
    Verification(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Verification(_) => 1,
            _ => 2,
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "dunkl-fp", version, about = "Dunkl-type Fokker-Planck tables, figure data, checks and runs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write the CSV here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Number of half-line grid nodes.
    #[arg(long, global = true)]
    grid: Option<usize>,
    /// Right end of the grid or of the sampled x-range.
    #[arg(long, global = true)]
    xmax: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableId {
    #[value(name = "1")]
    One,
    #[value(name = "2")]
    Two,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ParityArg {
    Even,
    Odd,
}

impl From<ParityArg> for Parity {
    fn from(p: ParityArg) -> Self {
        match p {
            ParityArg::Even => Parity::Even,
            ParityArg::Odd => Parity::Odd,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Centrifugal (1) or oscillator (2) eigenfunction table as CSV.
    Table {
        #[arg(value_enum)]
        which: TableId,
        #[arg(long, value_enum, default_value = "even")]
        parity: ParityArg,
        /// Power index: x^(2m) even, x^(2m+1) odd. Defaults to 3 (even) and 2 (odd).
        #[arg(long)]
        m: Option<u32>,
    },
    /// Sampled eigenfunction curves for figure 1a, 1b, 2a or 2b.
    Figure {
        #[arg(value_parser = parse_figure)]
        which: Figure,
        /// Also emit negative x, reconstructed from parity.
        #[arg(long)]
        full_line: bool,
        #[arg(long, default_value_t = 1000)]
        points: usize,
    },
    /// Run the property suites; exit 1 if any check fails.
    Verify {
        #[arg(value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long, value_enum, hide = true)]
        inject_fault: Option<Fault>,
    },
    /// Evolve an analytic mode and compare its decay rate with lambda.
    Evolve { config: PathBuf },
    /// Lowest eigenvalues of an oscillator run next to 4n(1 -/+ gamma).
    Spectrum {
        config: PathBuf,
        #[arg(short, long, default_value_t = 4)]
        k: usize,
    },
}

fn parse_figure(s: &str) -> Result<Figure, String> {
    s.parse().map_err(|e: dunkl_fp::Error| e.to_string())
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Io { path: path.to_path_buf(), source }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn read_config(path: &Path, cli: &Cli) -> Result<RunConfig, CliError> {
    let text =
        std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })?;
    let mut config = RunConfig::parse(&text)?;
    if let Some(n) = cli.grid {
        config.grid = n;
    }
    if let Some(x) = cli.xmax {
        config.xmax = x;
    }
    Ok(config)
}

/// Initial mode of a run and its analytic eigenvalue.
fn initial_mode(config: &RunConfig) -> Result<EigenDescriptor<f64>, CliError> {
    let a = *config.potential.a();
    Ok(match config.problem {
        Problem::Oscillator => oscillator_solution(config.parity, a, &config.params, config.n)?.into(),
        Problem::Centrifugal => {
            let lambda = config.lambda.ok_or_else(|| CliError::Config("missing required key 'lambda'".into()))?;
            let (sigma, mu) = (*config.params.sigma(), *config.params.mu());
            centrifugal_solution(config.parity, a, sigma, mu, lambda)?.into()
        }
    })
}

fn cmd_table(cli: &Cli, which: TableId, parity: Parity, m: Option<u32>) -> Result<(), CliError> {
    let text = match which {
        TableId::One => table1_csv(&generate_table1()?),
        TableId::Two => {
            let m = m.unwrap_or(if parity == Parity::Even { 3 } else { 2 });
            table2_csv(&generate_table2(m, parity)?)
        }
    };
    emit(cli.out.as_deref(), &text)
}

fn cmd_figure(cli: &Cli, which: Figure, full_line: bool, points: usize) -> Result<(), CliError> {
    if points < 2 {
        return Err(CliError::Usage("--points must be at least 2".into()));
    }
    let options = FigureOptions { xmax: cli.xmax.unwrap_or(10.0), points, full_line };
    emit(cli.out.as_deref(), &generate_figure(which, &options)?.to_csv())
}

fn cmd_verify(cli: &Cli, suite: Suite, fault: Option<Fault>) -> Result<(), CliError> {
    let defaults = suites::Options::default();
    let options = suites::Options {
        grid: cli.grid.unwrap_or(defaults.grid),
        xmax: cli.xmax.unwrap_or(defaults.xmax),
        fault,
    };
    let checks = suites::run(suite, &options);
    for c in &checks {
        println!("{c}");
    }
    let failed: Vec<String> = checks.iter().filter(|c| !c.passed).map(|c| format!("{}: {}", c.suite, c.name)).collect();
    println!("{} checks, {} failed", checks.len(), failed.len());
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::Verification(failed.join("; ")))
    }
}

fn thinned(traj: &Trajectory<f64>, every: usize) -> Trajectory<f64> {
    let keep = |i: &usize| i.is_multiple_of(every) || *i + 1 == traj.states.len();
    Trajectory {
        times: traj.times.iter().enumerate().filter(|(i, _)| keep(i)).map(|(_, t)| *t).collect(),
        states: traj.states.iter().enumerate().filter(|(i, _)| keep(i)).map(|(_, s)| s.clone()).collect(),
        ..traj.clone()
    }
}

fn cmd_evolve(cli: &Cli, path: &Path) -> Result<(), CliError> {
    let config = read_config(path, cli)?;
    let (dt, steps) = (config.dt()?, config.steps()?);
    let grid = config.grid()?;
    let mode = initial_mode(&config)?;
    let lambda = *mode.lambda();
    let op = build_sector_operator(&config.params, &config.potential, config.parity, &grid);
    let p0 = ParityFunction::try_sample(&grid, config.parity, |x| eval_descriptor(&mode, x))?;
    let traj = evolve(&op, &p0, dt, steps, config.scheme)?;
    let measured = decay_rate(&traj, &p0)?;
    let error = if lambda == 0.0 { measured.abs() } else { (measured - lambda).abs() / lambda };
    let summary = format!(
        "lambda_measured = {}, lambda_analytic = {}, {} = {}",
        format_sig(measured),
        format_sig(lambda),
        if lambda == 0.0 { "absolute_error" } else { "relative_error" },
        format_sig(error)
    );
    let csv = thinned(&traj, config.save_every).to_csv();
    match cli.out.as_deref().or(config.output.as_deref()) {
        Some(out) => {
            emit(Some(out), &csv)?;
            println!("{summary}");
        }
        None => {
            emit(None, &csv)?;
            eprintln!("{summary}");
        }
    }
    Ok(())
}

fn cmd_spectrum(cli: &Cli, path: &Path, k: usize) -> Result<(), CliError> {
    let config = read_config(path, cli)?;
    if config.problem != Problem::Oscillator {
        return Err(CliError::Config("spectrum needs problem = oscillator".into()));
    }
    if k == 0 {
        return Err(CliError::Usage("-k must be at least 1".into()));
    }
    let op = build_sector_operator(&config.params, &config.potential, config.parity, &config.grid()?);
    let step = 4.0 * (1.0 - config.parity.sign::<f64>() * config.params.gamma());
    let mut text = String::from("n,lambda,lambda_analytic,relative_error\n");
    for (n, (lambda, _)) in lowest_eigenpairs(&op, k)?.iter().enumerate() {
        let expected = step * n as f64;
        let err = if n == 0 { lambda.abs() } else { (lambda - expected).abs() / expected };
        text.push_str(&format!("{n},{},{},{}\n", format_sig(*lambda), format_sig(expected), format_sig(err)));
    }
    emit(cli.out.as_deref(), &text)
}

fn run(cli: &Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Table { which, parity, m } => cmd_table(cli, *which, (*parity).into(), *m),
        Command::Figure { which, full_line, points } => cmd_figure(cli, *which, *full_line, *points),
        Command::Verify { suite, inject_fault } => cmd_verify(cli, *suite, *inject_fault),
        Command::Evolve { config } => cmd_evolve(cli, config),
        Command::Spectrum { config, k } => cmd_spectrum(cli, config, *k),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("dunkl-fp: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
