//! Command-line front end: loads molecule specs, runs the simulation
//! pipelines and emits reproducible structured reports.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use onewaysim::mbqc::oracle::OracleId;
use onewaysim::report::{emit_report, run_command, BranchSel, Mode, RunConfig};

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    /// Build the graph state both ways and report fidelities.
    GraphState,
    /// Projective one-way Deutsch-Josza runs (per branch or exhaustive).
    DjProjective,
    /// Gradient-mimicked ensemble Deutsch-Josza pipeline.
    DjEnsemble,
    /// Pauli-expectation tomography of the prepared GHZ state.
    Tomography,
    /// Correlation, fidelity and witness metrics with a budget sweep.
    Metrics,
    /// Synthesized qubit-4 spectra after the ensemble pipeline.
    Spectrum,
    /// Run the full invariant suite; nonzero exit on any failure.
    Verify,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::GraphState => Mode::GraphState,
            ModeArg::DjProjective => Mode::DjProjective,
            ModeArg::DjEnsemble => Mode::DjEnsemble,
            ModeArg::Tomography => Mode::Tomography,
            ModeArg::Metrics => Mode::Metrics,
            ModeArg::Spectrum => Mode::Spectrum,
            ModeArg::Verify => Mode::Verify,
        }
    }
}

/// Deterministic simulator of one-way quantum computing on a star-like
/// four-qubit graph state, with an NMR ensemble physics layer.
#[derive(Parser, Debug)]
#[command(name = "onewaysim", version, about)]
struct Cli {
    /// Pipeline to run.
    #[arg(long, value_enum, default_value = "dj-projective")]
    mode: ModeArg,

    /// Oracle f1..f4; omit to run all four.
    #[arg(long)]
    oracle: Option<String>,

    /// Measurement branch: `all`, `sampled`, or `s1,s2` (e.g. `0,1`).
    #[arg(long, default_value = "all")]
    branch: String,

    /// Seed for every pseudo-random choice (sampled branches, noise).
    #[arg(long, default_value_t = 42)]
    seed: u64,

    /// Pseudopure polarization in (0, 1].
    #[arg(long, default_value_t = 1.0)]
    epsilon: f64,

    /// Gaussian noise sigma added to tomography expectations.
    #[arg(long, default_value_t = 0.0)]
    noise: f64,

    /// Molecule parameter file; omit for the bundled crotonic acid.
    #[arg(long = "spec", value_name = "PATH")]
    spec: Option<PathBuf>,

    /// Output directory for the report and data files.
    #[arg(long = "out", value_name = "DIR", default_value = "out")]
    out: PathBuf,

    /// Preparation relaxation budget in milliseconds; the bare flag uses
    /// the default 85 ms. Omit to disable relaxation entirely.
    #[arg(long = "time-budget", value_name = "MS", num_args = 0..=1, default_missing_value = "85")]
    time_budget: Option<f64>,

    /// Spectrum acquisition time in seconds.
    #[arg(long, default_value_t = 2.0)]
    duration: f64,

    /// Spectrum sample count (power of two, at least 256).
    #[arg(long, default_value_t = 8192)]
    samples: usize,
}

fn build_config(cli: &Cli) -> onewaysim::Result<RunConfig> {
    let oracle = match &cli.oracle {
        None => None,
        Some(s) if s == "all" => None,
        Some(s) => Some(OracleId::parse(s)?),
    };
    Ok(RunConfig {
        mode: cli.mode.into(),
        oracle,
        branch: BranchSel::parse(&cli.branch)?,
        seed: cli.seed,
        epsilon: cli.epsilon,
        noise: cli.noise,
        spec_path: cli.spec.clone(),
        out_dir: cli.out.clone(),
        time_budget: cli.time_budget.map(|ms| ms * 1e-3),
        duration: cli.duration,
        samples: cli.samples,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = match build_config(&cli) {
        Ok(cfg) => cfg,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let output = match run_command(&cfg) {
        Ok(out) => out,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    match emit_report(&output, &cfg.out_dir) {
        Ok(manifest) => {
            print!("{}", output.report.render());
            eprintln!();
            for path in &manifest {
                eprintln!("wrote {}", path.display());
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    if output.failures > 0 {
        eprintln!("{} check(s) failed", output.failures);
        return ExitCode::from(1);
    }
    ExitCode::SUCCESS
}
