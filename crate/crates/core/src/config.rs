//! TOML configuration ingestion.
//!
//! The `[params]` table uses experimental units (powers in W, temperatures
//! in mK, rates and detunings in 2π×MHz, drive and mode frequencies in
//! 2π×GHz, the Kerr coefficient in 2π×μHz); every field is optional and
//! defaults to the baseline. The `[sweep]` table mirrors
//! [`crate::sweep::SweepSpec`] with the primary range given in the axis's
//! configuration unit.

use std::path::Path;

use serde::Deserialize;

use crate::dynamics::Mode;
use crate::error::{Error, Result};
use crate::params::constants::TAU;
use crate::params::SystemParams;
use crate::sweep::{AxisRange, AxisScale, Quantity, SecondaryAxis, SweepAxis, SweepSpec};

/// Root of a configuration file.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    #[serde(default)]
    pub params: ParamsConfig,
    #[serde(default)]
    pub sweep: Option<SweepConfig>,
}

/// `[params]` table; canonical field names for all physical inputs.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParamsConfig {
    pub drive_power_w: Option<f64>,
    pub drive_frequency_2pi_ghz: Option<f64>,
    pub temperature_mk: Option<f64>,
    pub gamma_a1_2pi_mhz: Option<f64>,
    pub gamma_a2_2pi_mhz: Option<f64>,
    pub gamma_m_2pi_mhz: Option<f64>,
    pub delta_a1_2pi_mhz: Option<f64>,
    pub delta_a2_2pi_mhz: Option<f64>,
    pub delta_m_2pi_mhz: Option<f64>,
    pub tunneling_2pi_mhz: Option<f64>,
    pub coupling_2pi_mhz: Option<f64>,
    pub kerr_2pi_uhz: Option<f64>,
    /// Absolute mode frequencies; default to drive + detuning.
    pub omega_a1_2pi_ghz: Option<f64>,
    pub omega_a2_2pi_ghz: Option<f64>,
    pub omega_m_2pi_ghz: Option<f64>,
}

impl ParamsConfig {
    /// Resolves the table against the baseline into internal units.
    pub fn resolve(&self) -> SystemParams {
        let mut p = SystemParams::baseline();
        if let Some(v) = self.drive_power_w {
            p.drive_power = v;
        }
        if let Some(v) = self.drive_frequency_2pi_ghz {
            p.drive_frequency = TAU * 1e9 * v;
        }
        if let Some(v) = self.temperature_mk {
            p.temperature = 1e-3 * v;
        }
        if let Some(v) = self.gamma_a1_2pi_mhz {
            p.gamma_a1 = TAU * 1e6 * v;
        }
        if let Some(v) = self.gamma_a2_2pi_mhz {
            p.gamma_a2 = TAU * 1e6 * v;
        }
        if let Some(v) = self.gamma_m_2pi_mhz {
            p.gamma_m = TAU * 1e6 * v;
        }
        if let Some(v) = self.delta_a1_2pi_mhz {
            p.delta_a1 = TAU * 1e6 * v;
        }
        if let Some(v) = self.delta_a2_2pi_mhz {
            p.delta_a2 = TAU * 1e6 * v;
        }
        if let Some(v) = self.delta_m_2pi_mhz {
            p.delta_m = TAU * 1e6 * v;
        }
        if let Some(v) = self.tunneling_2pi_mhz {
            p.photon_tunneling = TAU * 1e6 * v;
        }
        if let Some(v) = self.coupling_2pi_mhz {
            p.pm_coupling = TAU * 1e6 * v;
        }
        if let Some(v) = self.kerr_2pi_uhz {
            p.kerr = TAU * 1e-6 * v;
        }
        // absolute frequencies follow the detunings unless pinned explicitly
        p.omega_a1 = match self.omega_a1_2pi_ghz {
            Some(v) => TAU * 1e9 * v,
            None => p.drive_frequency + p.delta_a1,
        };
        p.omega_a2 = match self.omega_a2_2pi_ghz {
            Some(v) => TAU * 1e9 * v,
            None => p.drive_frequency + p.delta_a2,
        };
        p.omega_m = match self.omega_m_2pi_ghz {
            Some(v) => TAU * 1e9 * v,
            None => p.drive_frequency + p.delta_m,
        };
        p
    }
}

/// `[sweep]` table; ranges in the axis configuration unit.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    pub axis: SweepAxis,
    pub start: f64,
    pub stop: f64,
    pub points: usize,
    #[serde(default = "default_scale")]
    pub scale: AxisScale,
    #[serde(default)]
    pub secondary: Option<SecondarySweepConfig>,
    pub quantities: Vec<Quantity>,
    #[serde(default)]
    pub measure_mode: Option<Mode>,
}

fn default_scale() -> AxisScale {
    AxisScale::Linear
}

/// Secondary axis of a 2-D sweep: explicit `values` (in the axis
/// configuration unit) or a range.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SecondarySweepConfig {
    pub axis: SweepAxis,
    #[serde(default)]
    pub values: Vec<f64>,
    pub start: Option<f64>,
    pub stop: Option<f64>,
    pub points: Option<usize>,
    #[serde(default = "default_scale")]
    pub scale: AxisScale,
}

impl SweepConfig {
    /// Converts the configured sweep into internal units.
    pub fn resolve(&self) -> Result<SweepSpec> {
        let unit = self.axis.config_unit();
        let secondary = match &self.secondary {
            None => None,
            Some(sec) => {
                let sunit = sec.axis.config_unit();
                if !sec.values.is_empty() {
                    Some(SecondaryAxis {
                        axis: sec.axis,
                        values: sec.values.iter().map(|v| v * sunit).collect(),
                        range: None,
                    })
                } else {
                    match (sec.start, sec.stop, sec.points) {
                        (Some(start), Some(stop), Some(points)) => Some(SecondaryAxis {
                            axis: sec.axis,
                            values: Vec::new(),
                            range: Some(AxisRange {
                                start: start * sunit,
                                stop: stop * sunit,
                                points,
                                scale: sec.scale,
                            }),
                        }),
                        _ => {
                            return Err(Error::Config(
                                "secondary axis needs `values` or start/stop/points".into(),
                            ))
                        }
                    }
                }
            }
        };
        let spec = SweepSpec {
            axis: self.axis,
            range: AxisRange {
                start: self.start * unit,
                stop: self.stop * unit,
                points: self.points,
                scale: self.scale,
            },
            secondary,
            quantities: self.quantities.clone(),
            measure_mode: self.measure_mode.unwrap_or(Mode::Cavity2),
            preset: None,
            notes: None,
        };
        spec.validate()?;
        Ok(spec)
    }
}

/// Parses a configuration string.
pub fn parse_config(text: &str) -> Result<ConfigFile> {
    toml::from_str(text).map_err(|e| Error::Config(e.to_string()))
}

/// Loads a configuration file from disk.
pub fn load_config(path: &Path) -> Result<ConfigFile> {
    let text = std::fs::read_to_string(path)?;
    parse_config(&text)
}
