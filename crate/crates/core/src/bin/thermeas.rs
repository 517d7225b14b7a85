//! Runs scenario checks and sweeps from JSON files.
//!
//! Exit status: 0 when every check passes, 1 when a check fails, 2 on bad
//! input.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use thermal_instruments::scenario::{run_scenario, run_sweep, write_csv, RunOptions, Scenario, ScenarioError, Sweep};

#[derive(Parser)]
#[command(name = "thermeas", version, about = "Check thermodynamically free measurement scenarios")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the checks in a scenario file and write a JSON report.
    Check(Options),
    /// Run a sweep file and write a CSV table.
    Sweep(Options),
}

#[derive(Args)]
struct Options {
    file: PathBuf,
    /// Output path; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Override the scenario seed.
    #[arg(long)]
    seed: Option<u64>,
    /// Override the theorem tolerance.
    #[arg(long)]
    tol: Option<f64>,
    /// Worker threads.
    #[arg(long)]
    jobs: Option<usize>,
    /// Add wall-clock time to the report.
    #[arg(long)]
    timing: bool,
}

fn apply(opts: &Options, s: &mut Scenario) {
    if let Some(seed) = opts.seed {
        s.seed = seed;
    }
    if let Some(tol) = opts.tol {
        s.tolerances.theorem = tol;
    }
}

fn output(path: &Option<PathBuf>) -> io::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(io::stdout().lock()),
    })
}

enum Failure {
    Input(String),
    Checks,
}

impl From<ScenarioError> for Failure {
    fn from(e: ScenarioError) -> Self {
        Failure::Input(e.to_string())
    }
}

fn io_failure(path: &Option<PathBuf>) -> impl Fn(io::Error) -> Failure + '_ {
    move |e| {
        let target = path.as_ref().map_or("standard output".into(), |p| p.display().to_string());
        Failure::Input(format!("cannot write {target}: {e}"))
    }
}

fn check(opts: &Options) -> Result<(), Failure> {
    let mut scenario = Scenario::load(&opts.file)?;
    apply(opts, &mut scenario);
    let report = run_scenario(&scenario, &RunOptions { jobs: opts.jobs, timing: opts.timing })?;
    let mut out = output(&opts.out).map_err(io_failure(&opts.out))?;
    serde_json::to_writer_pretty(&mut out, &report).map_err(|e| io_failure(&opts.out)(e.into()))?;
    writeln!(out).and_then(|_| out.flush()).map_err(io_failure(&opts.out))?;
    if report.all_passed() {
        Ok(())
    } else {
        eprintln!("{}", serde_json::to_string(&report.summary).expect("summary serializes"));
        Err(Failure::Checks)
    }
}

fn sweep(opts: &Options) -> Result<(), Failure> {
    let mut sweep = Sweep::load(&opts.file)?;
    apply(opts, &mut sweep.template);
    let rows = run_sweep(&sweep, opts.jobs)?;
    let out = output(&opts.out).map_err(io_failure(&opts.out))?;
    write_csv(&rows, out).map_err(|e| Failure::Input(format!("cannot write CSV: {e}")))?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Check(opts) => check(opts),
        Command::Sweep(opts) => sweep(opts),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("thermeas: {msg}");
            ExitCode::from(2)
        }
    }
}
