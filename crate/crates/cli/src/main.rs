//! Command-line driver: single-point reports as JSON, sweeps and stability
//! maps as CSV or JSON.

use std::io::Write;
use std::path::PathBuf;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use magnon_fisher::config::{load_config, ConfigFile};
use magnon_fisher::sweep::{run_sweep, EmitFormat, Quantity, SweepSpec};
use magnon_fisher::{
    bogoliubov, cfi_heterodyne, cfi_homodyne, figure_preset, hybrid_modes, linearization_check,
    optimal_gaussian, peak_predictor, qfi_global, qfi_subsystem, sensitivity_analytic,
    solve_steady, total_spin, FisherReport, GaussianState, Mode, Quadrature, SystemParams,
};

#[derive(Parser)]
#[command(
    name = "magnon-fisher",
    version,
    about = "Steady state, stability, and Fisher information of a driven double-cavity-magnon system"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve the mean-field steady state and print it as JSON.
    SteadyState {
        #[arg(long)]
        config: Option<PathBuf>,
    },
    /// Compute the quantum Fisher information report as JSON.
    Qfi {
        #[arg(long)]
        config: Option<PathBuf>,
        /// Repetitions for the reported Cramer-Rao bound.
        #[arg(long, default_value_t = 1)]
        repetitions: u64,
    },
    /// Classical Fisher information of a Gaussian measurement on one mode.
    Cfi {
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = ModeArg::A2)]
        mode: ModeArg,
        #[arg(long, value_enum)]
        measurement: MeasurementArg,
    },
    /// Hybridized-mode and Bogoliubov normal-mode data as JSON.
    NormalModes {
        #[arg(long)]
        config: Option<PathBuf>,
    },
    /// Stability verdicts over a configured grid, as CSV.
    StabilityMap {
        /// Config file with a [sweep] section; quantities are ignored.
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Run a parameter sweep from a preset or a config file.
    Sweep {
        /// Figure preset name (fig2, fig3, fig4, fig5a, fig5b, fig6a,
        /// fig6b, fig7a..fig7d).
        #[arg(long, conflicts_with = "config")]
        preset: Option<String>,
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
        format: FormatArg,
        /// Worker threads; falls back to MAGNON_FISHER_JOBS, then to the
        /// number of cores.
        #[arg(long)]
        jobs: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    A1,
    A2,
    M,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::A1 => Mode::Cavity1,
            ModeArg::A2 => Mode::Cavity2,
            ModeArg::M => Mode::Magnon,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MeasurementArg {
    #[value(name = "hom-q")]
    HomQ,
    #[value(name = "hom-p")]
    HomP,
    Het,
    Ogm,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

impl From<FormatArg> for EmitFormat {
    fn from(f: FormatArg) -> EmitFormat {
        match f {
            FormatArg::Csv => EmitFormat::Csv,
            FormatArg::Json => EmitFormat::Json,
        }
    }
}

fn load_params(config: &Option<PathBuf>) -> anyhow::Result<SystemParams> {
    let params = match config {
        Some(path) => load_config(path)
            .with_context(|| format!("reading {}", path.display()))?
            .params
            .resolve(),
        None => SystemParams::baseline(),
    };
    for warning in params.validate().context("invalid parameters")? {
        eprintln!("warning: {warning}");
    }
    Ok(params)
}

fn state_and_sensitivity(
    params: &SystemParams,
) -> anyhow::Result<(GaussianState, magnon_fisher::Sensitivity)> {
    let state = magnon_fisher::gaussian_steady_state(params)?;
    let sens = sensitivity_analytic(params)?;
    Ok((state, sens))
}

fn write_output(path: &Option<PathBuf>, bytes: &[u8]) -> anyhow::Result<()> {
    match path {
        Some(p) => std::fs::write(p, bytes).with_context(|| format!("writing {}", p.display()))?,
        None => std::io::stdout().write_all(bytes)?,
    }
    Ok(())
}

fn jobs_or_env(jobs: Option<usize>) -> Option<usize> {
    jobs.or_else(|| {
        std::env::var("MAGNON_FISHER_JOBS")
            .ok()
            .and_then(|v| v.parse().ok())
    })
}

fn main() -> anyhow::Result<()> {
    let cli = Cli::parse();
    match cli.command {
        Command::SteadyState { config } => {
            let params = load_params(&config)?;
            let ss = solve_steady(&params)?;
            let diag = linearization_check(&ss, total_spin(250.0e-6, 4.22e27));
            let out = json!({
                "steady_state": ss,
                "linearization": diag,
            });
            println!("{}", serde_json::to_string_pretty(&out)?);
        }
        Command::Qfi {
            config,
            repetitions,
        } => {
            let params = load_params(&config)?;
            let report = FisherReport::compute(&params)?;
            let bound = report.qcrb(repetitions)?;
            let out = json!({
                "fisher": report,
                "qcrb": { "repetitions": repetitions, "min_variance": bound },
            });
            println!("{}", serde_json::to_string_pretty(&out)?);
        }
        Command::Cfi {
            config,
            mode,
            measurement,
        } => {
            let params = load_params(&config)?;
            let (state, sens) = state_and_sensitivity(&params)?;
            let mode: Mode = mode.into();
            let out = match measurement {
                MeasurementArg::HomQ => json!({
                    "mode": mode, "measurement": "hom-q",
                    "cfi": cfi_homodyne(&state, &sens, mode, Quadrature::Q)?,
                }),
                MeasurementArg::HomP => json!({
                    "mode": mode, "measurement": "hom-p",
                    "cfi": cfi_homodyne(&state, &sens, mode, Quadrature::P)?,
                }),
                MeasurementArg::Het => json!({
                    "mode": mode, "measurement": "het",
                    "cfi": cfi_heterodyne(&state, &sens, mode)?,
                }),
                MeasurementArg::Ogm => {
                    let ogm = optimal_gaussian(&state, &sens, mode)?;
                    json!({
                        "mode": mode, "measurement": "ogm",
                        "cfi": ogm.cfi,
                        "spec": ogm.spec,
                        "boundary_maximum": ogm.boundary_maximum,
                        "qfi_subsystem": qfi_subsystem(&state, &sens, mode)?,
                        "qfi_global": qfi_global(&state, &sens)?,
                    })
                }
            };
            println!("{}", serde_json::to_string_pretty(&out)?);
        }
        Command::NormalModes { config } => {
            let params = load_params(&config)?;
            let ss = solve_steady(&params)?;
            let hybrid = hybrid_modes(&params)?;
            let bog = bogoliubov(&params, &ss);
            let peaks = peak_predictor(&params, &ss);
            let out = json!({
                "hybrid_modes": hybrid,
                "bogoliubov": bog.as_ref().ok(),
                "bogoliubov_error": bog.as_ref().err().map(|e| e.to_string()),
                "predicted_resonance_detunings": peaks.as_ref().ok(),
            });
            println!("{}", serde_json::to_string_pretty(&out)?);
        }
        Command::StabilityMap { config, out, jobs } => {
            let cfg: ConfigFile = load_config(&config)?;
            let params = cfg.params.resolve();
            let Some(sweep_cfg) = cfg.sweep else {
                bail!("stability-map needs a [sweep] section in the config");
            };
            let mut spec: SweepSpec = sweep_cfg.resolve()?;
            spec.quantities = vec![Quantity::Stability];
            let result = run_sweep(&spec, &params, jobs_or_env(jobs))?;
            let bytes = magnon_fisher::emit_to_vec(&result, EmitFormat::Csv)?;
            write_output(&out, &bytes)?;
            eprintln!(
                "{} rows, {} skipped",
                result.records.len(),
                result.skips.len()
            );
        }
        Command::Sweep {
            preset,
            config,
            out,
            format,
            jobs,
        } => {
            let (spec, params) = match (&preset, &config) {
                (Some(name), _) => figure_preset(name)?,
                (None, Some(path)) => {
                    let cfg = load_config(path)?;
                    let params = cfg.params.resolve();
                    let Some(sweep_cfg) = cfg.sweep else {
                        bail!("config has no [sweep] section");
                    };
                    (sweep_cfg.resolve()?, params)
                }
                (None, None) => bail!("sweep needs --preset or --config"),
            };
            let result = run_sweep(&spec, &params, jobs_or_env(jobs))?;
            let bytes = magnon_fisher::emit_to_vec(&result, format.into())?;
            write_output(&out, &bytes)?;
            eprintln!(
                "{} rows, {} skipped",
                result.records.len(),
                result.skips.len()
            );
        }
    }
    Ok(())
}
