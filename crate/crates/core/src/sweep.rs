//! Parameter-sweep orchestration, figure presets, and CSV/JSON emission.
//!
//! Points are distributed over a worker pool and re-assembled in grid order,
//! so output bytes do not depend on the worker count.

use std::io::Write;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::dynamics::{
    build_diffusion, build_drift, check_stability, lyapunov_solve_raw, mean_vector, GaussianState,
    Mode, Quadrature,
};
use crate::error::{Error, Result};
use crate::fisher::{qfi_global, qfi_subsystem, sensitivity_analytic};
use crate::measure::{cfi_heterodyne, cfi_homodyne, optimal_gaussian};
use crate::params::constants::{HBAR, KB, TAU};
use crate::params::SystemParams;
use crate::steady::solve_steady;

/// The parameter swept along an axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SweepAxis {
    #[serde(rename = "P_l")]
    DrivePower,
    #[serde(rename = "T")]
    Temperature,
    #[serde(rename = "gamma_a")]
    GammaA,
    #[serde(rename = "gamma_m")]
    GammaM,
    #[serde(rename = "J")]
    Tunneling,
    #[serde(rename = "K")]
    Kerr,
    #[serde(rename = "delta_a")]
    DeltaA,
    #[serde(rename = "delta_m")]
    DeltaM,
    #[serde(rename = "g")]
    Coupling,
}

impl SweepAxis {
    /// Column name in emitted files.
    pub fn name(self) -> &'static str {
        match self {
            SweepAxis::DrivePower => "P_l",
            SweepAxis::Temperature => "T",
            SweepAxis::GammaA => "gamma_a",
            SweepAxis::GammaM => "gamma_m",
            SweepAxis::Tunneling => "J",
            SweepAxis::Kerr => "K",
            SweepAxis::DeltaA => "delta_a",
            SweepAxis::DeltaM => "delta_m",
            SweepAxis::Coupling => "g",
        }
    }

    /// Conversion factor from the configuration unit of this axis to the
    /// internal unit (W, K, or rad/s). Powers are given in W, temperatures
    /// in K, the Kerr coefficient in 2π×μHz, every other rate in 2π×MHz.
    pub fn config_unit(self) -> f64 {
        match self {
            SweepAxis::DrivePower | SweepAxis::Temperature => 1.0,
            SweepAxis::Kerr => TAU * 1e-6,
            _ => TAU * 1e6,
        }
    }

    /// Applies an axis value (internal units) to a parameter set. Detuning
    /// axes move the absolute mode frequencies along with the detuning so
    /// the parameters stay self-consistent.
    pub fn apply(self, base: &SystemParams, value: f64) -> SystemParams {
        let mut p = base.clone();
        match self {
            SweepAxis::DrivePower => p.drive_power = value,
            SweepAxis::Temperature => p.temperature = value,
            SweepAxis::GammaA => {
                p.gamma_a1 = value;
                p.gamma_a2 = value;
            }
            SweepAxis::GammaM => p.gamma_m = value,
            SweepAxis::Tunneling => p.photon_tunneling = value,
            SweepAxis::Kerr => p.kerr = value,
            SweepAxis::DeltaA => {
                p.delta_a1 = value;
                p.delta_a2 = value;
                p.omega_a1 = p.drive_frequency + value;
                p.omega_a2 = p.drive_frequency + value;
            }
            SweepAxis::DeltaM => {
                p.delta_m = value;
                p.omega_m = p.drive_frequency + value;
            }
            SweepAxis::Coupling => p.pm_coupling = value,
        }
        p
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AxisScale {
    Linear,
    Log,
}

/// A primary-axis range.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AxisRange {
    pub start: f64,
    pub stop: f64,
    pub points: usize,
    pub scale: AxisScale,
}

impl AxisRange {
    pub fn validate(&self) -> Result<()> {
        if self.points < 2 {
            return Err(Error::Config(format!(
                "axis needs at least 2 points, got {}",
                self.points
            )));
        }
        if !(self.start < self.stop) {
            return Err(Error::Config(format!(
                "axis range needs start < stop, got [{}, {}]",
                self.start, self.stop
            )));
        }
        if self.scale == AxisScale::Log && !(self.start > 0.0) {
            return Err(Error::Config(
                "log-scaled axis needs positive endpoints".into(),
            ));
        }
        Ok(())
    }

    pub fn values(&self) -> Vec<f64> {
        let n = self.points;
        (0..n)
            .map(|i| {
                let t = i as f64 / (n - 1) as f64;
                match self.scale {
                    AxisScale::Linear => self.start + t * (self.stop - self.start),
                    AxisScale::Log => self.start * (self.stop / self.start).powf(t),
                }
            })
            .collect()
    }
}

/// Optional second axis: either a range or an explicit list of values
/// (needed for grids like T ∈ {10, 100, 200} mK).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SecondaryAxis {
    pub axis: SweepAxis,
    #[serde(default)]
    pub values: Vec<f64>,
    #[serde(default)]
    pub range: Option<AxisRange>,
}

impl SecondaryAxis {
    pub fn grid(&self) -> Result<Vec<f64>> {
        if !self.values.is_empty() {
            return Ok(self.values.clone());
        }
        match &self.range {
            Some(r) => {
                r.validate()?;
                Ok(r.values())
            }
            None => Err(Error::Config(
                "secondary axis needs `values` or `range`".into(),
            )),
        }
    }
}

/// A quantity computed per sweep point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    QfiGlobal,
    QfiA1,
    QfiA2,
    QfiM,
    Ratios,
    CfiHomQ,
    CfiHomP,
    CfiHet,
    CfiOgm,
    Stability,
}

impl Quantity {
    /// Column names this quantity contributes.
    pub fn columns(self) -> &'static [&'static str] {
        match self {
            Quantity::QfiGlobal => &["qfi_global"],
            Quantity::QfiA1 => &["qfi_a1"],
            Quantity::QfiA2 => &["qfi_a2"],
            Quantity::QfiM => &["qfi_m"],
            Quantity::Ratios => &["xi1", "xi2", "xi3"],
            Quantity::CfiHomQ => &["cfi_hom_q"],
            Quantity::CfiHomP => &["cfi_hom_p"],
            Quantity::CfiHet => &["cfi_het"],
            Quantity::CfiOgm => &["cfi_ogm", "ogm_theta", "ogm_r", "ogm_boundary"],
            Quantity::Stability => &["stable", "max_real_eig", "hurwitz_ok", "marginal"],
        }
    }

    /// Whether computing this quantity requires the steady covariance.
    fn needs_state(self) -> bool {
        !matches!(self, Quantity::Stability)
    }
}

/// Why a grid point produced no data row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SkipReason {
    Multistable,
    NoSteadyState,
    Unstable,
    Marginal,
    NearPureState,
    InvalidParams,
}

/// Full sweep specification.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepSpec {
    pub axis: SweepAxis,
    pub range: AxisRange,
    #[serde(default)]
    pub secondary: Option<SecondaryAxis>,
    pub quantities: Vec<Quantity>,
    /// Mode the CFI quantities are measured on.
    #[serde(default = "default_measure_mode")]
    pub measure_mode: Mode,
    /// Preset name, when the spec came from a preset.
    #[serde(default)]
    pub preset: Option<String>,
    /// Free-form provenance notes (e.g. that ranges were read off figures).
    #[serde(default)]
    pub notes: Option<String>,
}

fn default_measure_mode() -> Mode {
    Mode::Cavity2
}

impl SweepSpec {
    pub fn validate(&self) -> Result<()> {
        self.range.validate()?;
        if let Some(sec) = &self.secondary {
            sec.grid()?;
            if sec.axis == self.axis {
                return Err(Error::Config(
                    "secondary axis must differ from the primary axis".into(),
                ));
            }
        }
        if self.quantities.is_empty() {
            return Err(Error::Config("no quantities requested".into()));
        }
        Ok(())
    }

    /// Column names in emission order.
    pub fn columns(&self) -> Vec<String> {
        let mut cols = vec![self.axis.name().to_string()];
        if let Some(sec) = &self.secondary {
            cols.push(sec.axis.name().to_string());
        }
        for q in &self.quantities {
            cols.extend(q.columns().iter().map(|c| c.to_string()));
        }
        cols
    }
}

/// One computed grid point.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRecord {
    /// Grid index (secondary-major).
    pub index: usize,
    pub axis_value: f64,
    pub secondary_value: Option<f64>,
    /// Quantity values aligned with the quantity columns.
    pub values: Vec<f64>,
}

/// One skipped grid point with its reason code.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepSkip {
    pub index: usize,
    pub axis_value: f64,
    pub secondary_value: Option<f64>,
    pub reason: SkipReason,
}

/// Run provenance carried in the JSON output.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunMetadata {
    pub tool_version: String,
    /// SHA-256 over the canonical JSON of (spec, base parameters).
    pub config_hash: String,
    pub hbar: f64,
    pub k_boltzmann: f64,
    pub grid_points: usize,
    pub skipped_points: usize,
    pub preset: Option<String>,
    pub notes: Option<String>,
}

/// Result of a sweep: data rows, skip records, and metadata.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepResult {
    pub spec: SweepSpec,
    pub base: SystemParams,
    pub columns: Vec<String>,
    pub records: Vec<SweepRecord>,
    pub skips: Vec<SweepSkip>,
    pub metadata: RunMetadata,
}

fn config_hash(spec: &SweepSpec, base: &SystemParams) -> String {
    let canonical = serde_json::to_string(&(spec, base)).expect("serializable");
    let mut hasher = Sha256::new();
    hasher.update(canonical.as_bytes());
    let digest = hasher.finalize();
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

fn evaluate_point(
    params: &SystemParams,
    quantities: &[Quantity],
    measure_mode: Mode,
) -> std::result::Result<Vec<f64>, SkipReason> {
    if params.validate().is_err() {
        return Err(SkipReason::InvalidParams);
    }
    let ss = match solve_steady(params) {
        Ok(ss) => ss,
        Err(Error::MultistableRegime { .. }) => return Err(SkipReason::Multistable),
        Err(Error::NoSteadyState) => return Err(SkipReason::NoSteadyState),
        Err(_) => return Err(SkipReason::InvalidParams),
    };
    let drift = build_drift(params, &ss);
    let report = check_stability(&drift);
    let needs_state = quantities.iter().any(|q| q.needs_state());
    let state_data = if needs_state {
        if report.marginal {
            return Err(SkipReason::Marginal);
        }
        if !report.stable {
            return Err(SkipReason::Unstable);
        }
        let diff = build_diffusion(params).map_err(|_| SkipReason::InvalidParams)?;
        let cov = lyapunov_solve_raw(&drift.0, &diff.0).map_err(|_| SkipReason::InvalidParams)?;
        let state = GaussianState {
            mean: mean_vector(&ss),
            cov,
        };
        let sens = match sensitivity_analytic(params) {
            Ok(s) => s,
            Err(_) => return Err(SkipReason::InvalidParams),
        };
        Some((state, sens))
    } else {
        None
    };
    let fisher = |m: Option<Mode>| -> std::result::Result<f64, SkipReason> {
        let (state, sens) = state_data.as_ref().expect("state computed");
        let value = match m {
            None => qfi_global(state, sens),
            Some(mode) => qfi_subsystem(state, sens, mode),
        };
        value.map_err(|e| match e {
            Error::NearPureState { .. } => SkipReason::NearPureState,
            _ => SkipReason::InvalidParams,
        })
    };
    let mut values = Vec::new();
    for q in quantities {
        match q {
            Quantity::QfiGlobal => values.push(fisher(None)?),
            Quantity::QfiA1 => values.push(fisher(Some(Mode::Cavity1))?),
            Quantity::QfiA2 => values.push(fisher(Some(Mode::Cavity2))?),
            Quantity::QfiM => values.push(fisher(Some(Mode::Magnon))?),
            Quantity::Ratios => {
                let total = fisher(None)?;
                for mode in Mode::ALL {
                    let sub = fisher(Some(mode))?;
                    values.push(if total > 0.0 { sub / total } else { 0.0 });
                }
            }
            Quantity::CfiHomQ | Quantity::CfiHomP | Quantity::CfiHet => {
                let (state, sens) = state_data.as_ref().expect("state computed");
                let value = match q {
                    Quantity::CfiHomQ => cfi_homodyne(state, sens, measure_mode, Quadrature::Q),
                    Quantity::CfiHomP => cfi_homodyne(state, sens, measure_mode, Quadrature::P),
                    _ => cfi_heterodyne(state, sens, measure_mode),
                };
                values.push(value.map_err(|_| SkipReason::InvalidParams)?);
            }
            Quantity::CfiOgm => {
                let (state, sens) = state_data.as_ref().expect("state computed");
                let ogm = optimal_gaussian(state, sens, measure_mode)
                    .map_err(|_| SkipReason::InvalidParams)?;
                let (theta, r) = match ogm.spec.kind {
                    crate::measure::MeasurementKind::GeneralGaussian { theta, squeezing } => {
                        (theta, squeezing)
                    }
                    crate::measure::MeasurementKind::HomodyneQ => {
                        (std::f64::consts::FRAC_PI_2, crate::measure::SQUEEZING_MAX)
                    }
                    crate::measure::MeasurementKind::HomodyneP => {
                        (0.0, crate::measure::SQUEEZING_MAX)
                    }
                    crate::measure::MeasurementKind::Heterodyne => (0.0, 0.0),
                };
                values.push(ogm.cfi);
                values.push(theta);
                values.push(r);
                values.push(if ogm.boundary_maximum { 1.0 } else { 0.0 });
            }
            Quantity::Stability => {
                values.push(if report.stable { 1.0 } else { 0.0 });
                values.push(report.max_real_eig);
                values.push(if report.hurwitz_ok { 1.0 } else { 0.0 });
                values.push(if report.marginal { 1.0 } else { 0.0 });
            }
        }
    }
    Ok(values)
}

/// Runs a sweep over the grid, optionally with a fixed worker count.
///
/// Every grid point is evaluated independently; unstable or multistable
/// points become skip records with a reason code, never fabricated rows.
pub fn run_sweep(spec: &SweepSpec, base: &SystemParams, jobs: Option<usize>) -> Result<SweepResult> {
    spec.validate()?;
    base.validate()?;
    let primary = spec.range.values();
    let secondary: Vec<Option<f64>> = match &spec.secondary {
        Some(sec) => sec.grid()?.into_iter().map(Some).collect(),
        None => vec![None],
    };
    let grid: Vec<(usize, Option<f64>, f64)> = secondary
        .iter()
        .flat_map(|s| primary.iter().map(move |p| (*s, *p)))
        .enumerate()
        .map(|(i, (s, p))| (i, s, p))
        .collect();

    let eval = |(index, sec_value, value): &(usize, Option<f64>, f64)| {
        let mut params = spec.axis.apply(base, *value);
        if let (Some(sec), Some(sv)) = (&spec.secondary, sec_value) {
            params = sec.axis.apply(&params, *sv);
        }
        (
            *index,
            *sec_value,
            *value,
            evaluate_point(&params, &spec.quantities, spec.measure_mode),
        )
    };

    let outcomes: Vec<_> = match jobs {
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build()
                .map_err(|e| Error::Config(format!("worker pool: {e}")))?;
            pool.install(|| grid.par_iter().map(eval).collect())
        }
        None => grid.par_iter().map(eval).collect(),
    };

    let mut records = Vec::new();
    let mut skips = Vec::new();
    for (index, secondary_value, axis_value, outcome) in outcomes {
        match outcome {
            Ok(values) => records.push(SweepRecord {
                index,
                axis_value,
                secondary_value,
                values,
            }),
            Err(reason) => skips.push(SweepSkip {
                index,
                axis_value,
                secondary_value,
                reason,
            }),
        }
    }
    let metadata = RunMetadata {
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        config_hash: config_hash(spec, base),
        hbar: HBAR,
        k_boltzmann: KB,
        grid_points: grid.len(),
        skipped_points: skips.len(),
        preset: spec.preset.clone(),
        notes: spec.notes.clone(),
    };
    Ok(SweepResult {
        spec: spec.clone(),
        base: base.clone(),
        columns: spec.columns(),
        records,
        skips,
        metadata,
    })
}

/// Fixed-width float formatting used for all CSV values: 17 significant
/// digits, enough to round-trip any f64 exactly.
pub fn format_float(x: f64) -> String {
    format!("{x:.16e}")
}

/// Output format of `emit`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EmitFormat {
    Csv,
    Json,
}

/// Writes a sweep result as CSV (one header row, one row per computed
/// point) or JSON (records plus run metadata).
pub fn emit<W: Write>(result: &SweepResult, format: EmitFormat, out: &mut W) -> Result<()> {
    match format {
        EmitFormat::Csv => {
            writeln!(out, "{}", result.columns.join(","))?;
            for rec in &result.records {
                let mut fields = Vec::with_capacity(result.columns.len());
                fields.push(format_float(rec.axis_value));
                if let Some(sv) = rec.secondary_value {
                    fields.push(format_float(sv));
                }
                fields.extend(rec.values.iter().map(|v| format_float(*v)));
                writeln!(out, "{}", fields.join(","))?;
            }
        }
        EmitFormat::Json => {
            serde_json::to_writer_pretty(&mut *out, result)
                .map_err(|e| Error::Config(format!("json write: {e}")))?;
            writeln!(out)?;
        }
    }
    Ok(())
}

/// Serializes a result to a byte buffer; convenience for determinism checks
/// and the CLI.
pub fn emit_to_vec(result: &SweepResult, format: EmitFormat) -> Result<Vec<u8>> {
    let mut buf = Vec::new();
    emit(result, format, &mut buf)?;
    Ok(buf)
}

/// Builds the sweep spec for one of the figure presets and the
/// baseline parameters it runs from.
///
/// Axis extents that are only legible from the figures are approximate;
/// each preset says so in its notes, which travel into the run metadata.
pub fn figure_preset(name: &str) -> Result<(SweepSpec, SystemParams)> {
    let base = SystemParams::baseline();
    let lin = |start: f64, stop: f64, points: usize| AxisRange {
        start,
        stop,
        points,
        scale: AxisScale::Linear,
    };
    let log = |start: f64, stop: f64, points: usize| AxisRange {
        start,
        stop,
        points,
        scale: AxisScale::Log,
    };
    let qfi_all = vec![
        Quantity::QfiGlobal,
        Quantity::QfiA1,
        Quantity::QfiA2,
        Quantity::QfiM,
    ];
    let cfi_set = vec![
        Quantity::QfiA2,
        Quantity::CfiHomQ,
        Quantity::CfiHomP,
        Quantity::CfiHet,
        Quantity::CfiOgm,
    ];
    let spec = match name {
        "fig2" => SweepSpec {
            axis: SweepAxis::DrivePower,
            range: log(1e-3, 1.0, 25),
            secondary: Some(SecondaryAxis {
                axis: SweepAxis::Temperature,
                values: vec![10e-3, 100e-3, 200e-3],
                range: None,
            }),
            quantities: qfi_all,
            measure_mode: Mode::Cavity2,
            preset: Some(name.into()),
            notes: Some("power from 1 mW to 1 W; temperatures 10, 100, 200 mK".into()),
        },
        "fig3" => SweepSpec {
            axis: SweepAxis::GammaA,
            range: log(TAU * 0.5e6, TAU * 60e6, 13),
            secondary: Some(SecondaryAxis {
                axis: SweepAxis::GammaM,
                values: Vec::new(),
                range: Some(log(TAU * 10e6, TAU * 100e6, 7)),
            }),
            quantities: vec![Quantity::QfiGlobal],
            measure_mode: Mode::Cavity2,
            preset: Some(name.into()),
            notes: Some("axis extents approximate, read off the density plot".into()),
        },
        "fig4" => SweepSpec {
            axis: SweepAxis::Kerr,
            range: lin(0.0, TAU * 6e-6, 13),
            secondary: Some(SecondaryAxis {
                axis: SweepAxis::Tunneling,
                values: Vec::new(),
                range: Some(lin(0.0, TAU * 60e6, 13)),
            }),
            quantities: qfi_all,
            measure_mode: Mode::Cavity2,
            preset: Some(name.into()),
            notes: Some("axis extents approximate, read off the density plot".into()),
        },
        "fig5a" => SweepSpec {
            axis: SweepAxis::DeltaA,
            range: lin(-TAU * 300e6, TAU * 300e6, 161),
            secondary: None,
            quantities: qfi_all,
            measure_mode: Mode::Cavity2,
            preset: Some(name.into()),
            notes: Some("axis extent approximate".into()),
        },
        "fig5b" => SweepSpec {
            axis: SweepAxis::DeltaM,
            range: lin(-TAU * 200e6, TAU * 300e6, 126),
            secondary: None,
            quantities: qfi_all,
            measure_mode: Mode::Cavity2,
            preset: Some(name.into()),
            notes: Some("axis extent approximate; includes blue detuning".into()),
        },
        "fig6a" => SweepSpec {
            axis: SweepAxis::Tunneling,
            range: lin(0.0, TAU * 35e6, 61),
            secondary: None,
            quantities: vec![Quantity::Ratios],
            measure_mode: Mode::Cavity2,
            preset: Some(name.into()),
            notes: Some(
                "axis extent approximate; capped below the xi1/xi2 crossover near \
                 2pi x 39.5 MHz, consistent with xi2 staying dominant in the figure"
                    .into(),
            ),
        },
        "fig6b" => SweepSpec {
            axis: SweepAxis::Kerr,
            range: lin(0.0, TAU * 6e-6, 61),
            secondary: None,
            quantities: vec![Quantity::Ratios],
            measure_mode: Mode::Cavity2,
            preset: Some(name.into()),
            notes: Some("axis extent approximate".into()),
        },
        "fig7a" => SweepSpec {
            axis: SweepAxis::DrivePower,
            range: log(0.15, 1.0, 21),
            secondary: None,
            quantities: cfi_set,
            measure_mode: Mode::Cavity2,
            preset: Some(name.into()),
            notes: Some(
                "axis extent approximate; starts above ~0.13 W where the figure's \
                 homodyne-Q > heterodyne > homodyne-P ordering holds"
                    .into(),
            ),
        },
        "fig7b" => SweepSpec {
            axis: SweepAxis::Tunneling,
            range: lin(0.0, TAU * 60e6, 21),
            secondary: None,
            quantities: cfi_set,
            measure_mode: Mode::Cavity2,
            preset: Some(name.into()),
            notes: Some("axis extent approximate".into()),
        },
        "fig7c" => SweepSpec {
            axis: SweepAxis::Kerr,
            range: lin(0.0, TAU * 6e-6, 21),
            secondary: None,
            quantities: cfi_set,
            measure_mode: Mode::Cavity2,
            preset: Some(name.into()),
            notes: Some("axis extent approximate".into()),
        },
        "fig7d" => SweepSpec {
            axis: SweepAxis::Temperature,
            range: log(1e-3, 0.3, 21),
            secondary: None,
            quantities: cfi_set,
            measure_mode: Mode::Cavity2,
            preset: Some(name.into()),
            notes: Some("temperature from 1 mK to 300 mK, approximate".into()),
        },
        other => return Err(Error::UnknownPreset(other.to_string())),
    };
    Ok((spec, base))
}

/// All preset names, in figure order.
pub const PRESET_NAMES: [&str; 11] = [
    "fig2", "fig3", "fig4", "fig5a", "fig5b", "fig6a", "fig6b", "fig7a", "fig7b", "fig7c",
    "fig7d",
];
