//! Physical parameters, unit handling, and derived quantities.
//!
//! All rates, detunings, and frequencies are stored in rad/s. Configuration
//! ingest (see [`crate::config`]) accepts values in units of 2π×MHz and
//! 2π×GHz and converts here.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Physical constants (CODATA 2018).
pub mod constants {
    /// Reduced Planck constant (J s).
    pub const HBAR: f64 = 1.054571817e-34;
    /// Boltzmann constant (J/K).
    pub const KB: f64 = 1.380649e-23;
    /// 2π.
    pub const TAU: f64 = std::f64::consts::TAU;
    /// Electron gyromagnetic ratio, 2π × 28 GHz/T (rad/s per tesla).
    pub const GAMMA_E: f64 = TAU * 28.0e9;
    /// Vacuum permeability (T m/A).
    pub const MU0: f64 = 1.25663706212e-6;
}

use constants::{GAMMA_E, HBAR, KB, MU0, TAU};

/// Every physical input of the double-cavity-magnon model.
///
/// Detunings are signed, `delta = omega_mode - omega_drive`, so positive
/// values are red detuning. Absolute mode frequencies are required because
/// the thermal occupancies depend on them, not on the detunings.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SystemParams {
    /// Absolute frequency of cavity mode 1 (rad/s).
    pub omega_a1: f64,
    /// Absolute frequency of cavity mode 2 (rad/s).
    pub omega_a2: f64,
    /// Absolute magnon frequency (rad/s).
    pub omega_m: f64,
    /// Detuning of cavity mode 1 from the drive (rad/s).
    pub delta_a1: f64,
    /// Detuning of cavity mode 2 from the drive (rad/s).
    pub delta_a2: f64,
    /// Detuning of the magnon mode from the drive (rad/s).
    pub delta_m: f64,
    /// Total decay rate of cavity mode 1 (rad/s).
    pub gamma_a1: f64,
    /// Total decay rate of cavity mode 2 (rad/s); intrinsic plus external.
    pub gamma_a2: f64,
    /// Magnon damping rate (rad/s).
    pub gamma_m: f64,
    /// Photon tunneling rate J between the cavities (rad/s).
    pub photon_tunneling: f64,
    /// Photon-magnon coupling strength g (rad/s); the estimated parameter.
    pub pm_coupling: f64,
    /// Magnon Kerr coefficient K (rad/s).
    pub kerr: f64,
    /// Microwave drive power (W).
    pub drive_power: f64,
    /// Drive angular frequency (rad/s).
    pub drive_frequency: f64,
    /// Environment temperature (K).
    pub temperature: f64,
}

impl SystemParams {
    /// Baseline parameter point used throughout the sweeps:
    /// P_l = 500 mW, ω_l = 2π×10 GHz, T = 10 mK, γ_a = 2π×5 MHz,
    /// γ_m = 2π×40 MHz, Δ_a = 2π×40 MHz, Δ_m = 2π×60 MHz,
    /// K = 2π×2 μHz, J = 2π×26 MHz, g = 2π×41 MHz.
    pub fn baseline() -> Self {
        let drive_frequency = TAU * 10.0e9;
        let delta_a = TAU * 40.0e6;
        let delta_m = TAU * 60.0e6;
        Self {
            omega_a1: drive_frequency + delta_a,
            omega_a2: drive_frequency + delta_a,
            omega_m: drive_frequency + delta_m,
            delta_a1: delta_a,
            delta_a2: delta_a,
            delta_m,
            gamma_a1: TAU * 5.0e6,
            gamma_a2: TAU * 5.0e6,
            gamma_m: TAU * 40.0e6,
            photon_tunneling: TAU * 26.0e6,
            pm_coupling: TAU * 41.0e6,
            kerr: TAU * 2.0e-6,
            drive_power: 0.5,
            drive_frequency,
            temperature: 10.0e-3,
        }
    }

    /// Checks hard invariants and returns consistency warnings.
    ///
    /// Hard failures: non-positive decay rates or mode frequencies, negative
    /// temperature or power, non-positive drive frequency. Warnings: an
    /// absolute frequency that disagrees with `omega_drive + delta` by more
    /// than one part in 1e9.
    pub fn validate(&self) -> Result<Vec<String>> {
        let positive = [
            (self.gamma_a1, "gamma_a1"),
            (self.gamma_a2, "gamma_a2"),
            (self.gamma_m, "gamma_m"),
            (self.drive_frequency, "omega_l"),
            (self.omega_a1, "omega_a1"),
            (self.omega_a2, "omega_a2"),
            (self.omega_m, "omega_m"),
        ];
        for (v, name) in positive {
            if !(v > 0.0) {
                return Err(Error::Domain(format!("{name} must be > 0, got {v:e}")));
            }
        }
        if !(self.temperature >= 0.0) {
            return Err(Error::Domain(format!(
                "temperature must be >= 0, got {:e}",
                self.temperature
            )));
        }
        if !(self.drive_power >= 0.0) {
            return Err(Error::Domain(format!(
                "drive power must be >= 0, got {:e}",
                self.drive_power
            )));
        }
        if self.photon_tunneling < 0.0 {
            return Err(Error::Domain("photon tunneling J must be >= 0".into()));
        }
        let mut warnings = Vec::new();
        let pairs = [
            (self.omega_a1, self.delta_a1, "a1"),
            (self.omega_a2, self.delta_a2, "a2"),
            (self.omega_m, self.delta_m, "m"),
        ];
        for (omega, delta, name) in pairs {
            let expect = self.drive_frequency + delta;
            if (omega - expect).abs() > 1e-9 * omega.abs().max(expect.abs()) {
                warnings.push(format!(
                    "mode {name}: omega = {omega:e} rad/s but omega_l + delta = {expect:e} rad/s"
                ));
            }
        }
        Ok(warnings)
    }

    /// Drive amplitude E_l for this parameter set (rad/s).
    pub fn drive_amplitude(&self) -> f64 {
        drive_amplitude(self.drive_power, self.drive_frequency, self.gamma_a2)
            .expect("validated params have omega_l > 0")
    }
}

/// Mean thermal occupancy n(ω) = 1/(exp(ħω/k_B T) − 1).
///
/// Returns exactly 0 at T = 0 and whenever ħω/k_B T > 700, where the
/// occupancy is below 1e-300 and the exponential would overflow.
pub fn bose_occupancy(omega: f64, temperature: f64) -> Result<f64> {
    if !(omega > 0.0) {
        return Err(Error::Domain(format!(
            "bose_occupancy requires omega > 0, got {omega:e}"
        )));
    }
    if !(temperature >= 0.0) {
        return Err(Error::Domain(format!(
            "bose_occupancy requires T >= 0, got {temperature:e}"
        )));
    }
    if temperature == 0.0 {
        return Ok(0.0);
    }
    let x = HBAR * omega / (KB * temperature);
    if x > 700.0 {
        return Ok(0.0);
    }
    Ok(1.0 / x.exp_m1())
}

/// Drive amplitude E_l = sqrt(γ_a2 P_l / ħω_l) in rad/s.
pub fn drive_amplitude(power: f64, omega_l: f64, gamma_a2: f64) -> Result<f64> {
    if !(omega_l > 0.0) {
        return Err(Error::Domain(format!(
            "drive_amplitude requires omega_l > 0, got {omega_l:e}"
        )));
    }
    if power < 0.0 || gamma_a2 < 0.0 {
        return Err(Error::Domain(
            "drive_amplitude requires non-negative power and linewidth".into(),
        ));
    }
    Ok((gamma_a2 * power / (HBAR * omega_l)).sqrt())
}

/// Total spin number 2S = 5 ρ V of a sphere of the given diameter.
pub fn total_spin(diameter: f64, spin_density: f64) -> f64 {
    let volume = std::f64::consts::PI * diameter.powi(3) / 6.0;
    5.0 * spin_density * volume
}

/// Material constants of the YIG sphere and the cavity it sits in.
///
/// These enter only through the closed forms for the magnon frequency, the
/// Kerr coefficient, and the geometry-derived coupling.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MaterialParams {
    /// Electron gyromagnetic ratio (rad/s per T).
    pub gamma_e: f64,
    /// Vacuum permeability (T m/A).
    pub mu0: f64,
    /// First-order magnetocrystalline anisotropy constant.
    pub k_anisotropy: f64,
    /// Saturation magnetization.
    pub m_saturation: f64,
    /// YIG sphere volume (m³).
    pub sphere_volume: f64,
    /// Cavity mode volume (m³).
    pub cavity_volume: f64,
    /// Spin density (m⁻³).
    pub spin_density: f64,
    /// Bias magnetic field (T).
    pub bias_field: f64,
}

impl MaterialParams {
    /// YIG constants for a sphere of the given diameter.
    ///
    /// `k_anisotropy`, `cavity_volume`, and `bias_field` are calibrated so
    /// that at 250 μm diameter the closed forms reproduce the baseline
    /// K = 2π×2 μHz, g = 2π×41 MHz (at ω_a2 = 2π×10.04 GHz), and
    /// ω_m = 2π×10.06 GHz. The spin density is 4.22e27 m⁻³.
    pub fn yig(diameter: f64) -> Result<Self> {
        if !(diameter > 0.0) {
            return Err(Error::Domain(format!(
                "sphere diameter must be > 0, got {diameter:e}"
            )));
        }
        let spin_density = 4.22e27;
        let m_saturation: f64 = 1.96e5;
        let cal_diameter: f64 = 250.0e-6;
        let cal_volume = std::f64::consts::PI * cal_diameter.powi(3) / 6.0;
        let cal_two_s = total_spin(cal_diameter, spin_density);
        let kerr_target = TAU * 2.0e-6;
        let k_anisotropy = kerr_target * cal_volume * m_saturation.powi(2) / (MU0 * GAMMA_E.powi(2));
        let coupling_target = TAU * 41.0e6;
        let omega_a2 = TAU * 10.04e9;
        let cavity_volume =
            cal_two_s * MU0 * GAMMA_E.powi(2) * omega_a2 / (4.0 * coupling_target.powi(2));
        let omega_m_target = TAU * 10.06e9;
        let bias_field = (omega_m_target + kerr_target * cal_two_s) / GAMMA_E;
        Ok(Self {
            gamma_e: GAMMA_E,
            mu0: MU0,
            k_anisotropy,
            m_saturation,
            sphere_volume: std::f64::consts::PI * diameter.powi(3) / 6.0,
            cavity_volume,
            spin_density,
            bias_field,
        })
    }

    /// Total spin number 2S = 5 ρ V_m.
    pub fn total_spin(&self) -> f64 {
        5.0 * self.spin_density * self.sphere_volume
    }
}

/// Magnon frequency ω_m = γ_e H_B − 2 μ0 K_an γ_e² S / (V_m M_b²).
pub fn magnon_frequency(mat: &MaterialParams) -> f64 {
    let s = mat.total_spin() / 2.0;
    mat.gamma_e * mat.bias_field
        - 2.0 * mat.mu0 * mat.k_anisotropy * mat.gamma_e.powi(2) * s
            / (mat.sphere_volume * mat.m_saturation.powi(2))
}

/// Kerr coefficient K = μ0 K_an γ_e² / (V_m M_b²).
pub fn kerr_coefficient(mat: &MaterialParams) -> f64 {
    mat.mu0 * mat.k_anisotropy * mat.gamma_e.powi(2)
        / (mat.sphere_volume * mat.m_saturation.powi(2))
}

/// Geometry-derived photon-magnon coupling g = sqrt(2S) g_am with
/// g_am = sqrt(μ0 γ_e² ω_a2 / 4 V_a).
pub fn coupling_from_geometry(mat: &MaterialParams, omega_a2: f64) -> f64 {
    let g_am = (mat.mu0 * mat.gamma_e.powi(2) * omega_a2 / (4.0 * mat.cavity_volume)).sqrt();
    mat.total_spin().sqrt() * g_am
}
