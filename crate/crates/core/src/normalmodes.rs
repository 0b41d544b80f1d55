//! Normal-mode picture: the Bogoliubov transform of the Kerr-squeezed
//! magnon and the hybridized cavity modes, used to locate the resonances
//! behind the detuning-sweep peak structure.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::params::SystemParams;
use crate::steady::SteadyState;

/// Bogoliubov transform of the magnon fluctuation mode.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BogoliubovParams {
    /// cosh-like coefficient, α ≥ 1.
    pub alpha: f64,
    /// sinh-like coefficient, stored non-negative; its sign is carried by
    /// the phase.
    pub beta: f64,
    /// Phase of the anisotropy term 2K⟨m̂⟩², shifted by π so that
    /// β e^{iφ} matches the defining relation with β ≥ 0.
    pub phi: f64,
    /// Normal-mode frequency ℰ = sqrt(Δ_eff² − 4|⟨m̂⟩|⁴K²) (rad/s).
    pub normal_frequency: f64,
}

/// Hybridized cavity modes of the tunnel-coupled pair.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HybridModes {
    /// ω₊, the upper hybrid resonance (rad/s, rotating frame).
    pub omega_plus: f64,
    /// ω₋, the lower hybrid resonance.
    pub omega_minus: f64,
    /// Coupling of the magnon to the upper mode, G₊ = −gh.
    pub g_plus: f64,
    /// Coupling to the lower mode, G₋ = fg.
    pub g_minus: f64,
    /// Mixing amplitude f.
    pub f: f64,
    /// Mixing amplitude h.
    pub h: f64,
}

/// Builds the Bogoliubov transform at a steady state:
/// α = sqrt((Δ_eff/ℰ + 1)/2), β = sqrt((Δ_eff/ℰ − 1)/2),
/// φ = atan2(Im 2K⟨m̂⟩², Re 2K⟨m̂⟩²) + π.
///
/// Requires ℰ² > 0 and Δ_eff ≥ ℰ; otherwise the coefficients are not real
/// and the squeezing-dominated point is reported as degenerate rather than
/// clamped.
pub fn bogoliubov(params: &SystemParams, ss: &SteadyState) -> Result<BogoliubovParams> {
    let delta_eff = ss.delta_eff;
    let squeeze = 2.0 * params.kerr * ss.m_mean * ss.m_mean;
    let e_squared = delta_eff * delta_eff - squeeze.norm_sqr();
    if e_squared <= 0.0 {
        return Err(Error::DegenerateNormalMode {
            delta_eff,
            e_squared,
        });
    }
    let normal_frequency = e_squared.sqrt();
    let ratio = delta_eff / normal_frequency;
    if ratio < 1.0 {
        // delta_eff < 0 with real E: alpha^2 and beta^2 both negative
        return Err(Error::DegenerateNormalMode {
            delta_eff,
            e_squared,
        });
    }
    let alpha = ((ratio + 1.0) / 2.0).sqrt();
    let beta = ((ratio - 1.0) / 2.0).sqrt();
    let mut phi = squeeze.im.atan2(squeeze.re) + std::f64::consts::PI;
    if phi > std::f64::consts::PI {
        phi -= std::f64::consts::TAU;
    }
    Ok(BogoliubovParams {
        alpha,
        beta,
        phi,
        normal_frequency,
    })
}

/// Hybridized cavity modes
/// ω± = ½[(Δ₁+Δ₂) ± sqrt((Δ₁−Δ₂)² + 4J²)] with mixing amplitudes
/// f = |ω₋−Δ₁|/sqrt((ω₋−Δ₁)² + J²), h = Jf/(ω₋−Δ₁).
///
/// The symmetric case Δ₁ = Δ₂ has ω₋ − Δ₁ = −J exactly, so f = 1/√2 comes
/// out without a 0/0; the only degenerate denominator is J = 0 with
/// Δ₁ ≤ Δ₂, where the bare modes are already normal modes.
pub fn hybrid_modes(params: &SystemParams) -> Result<HybridModes> {
    let j = params.photon_tunneling;
    if j < 0.0 {
        return Err(Error::Domain("photon tunneling J must be >= 0".into()));
    }
    let (d1, d2) = (params.delta_a1, params.delta_a2);
    let split = ((d1 - d2) * (d1 - d2) + 4.0 * j * j).sqrt();
    let omega_plus = 0.5 * ((d1 + d2) + split);
    let omega_minus = 0.5 * ((d1 + d2) - split);
    let denom = omega_minus - d1;
    let (f, h) = if denom == 0.0 {
        // J = 0 and cavity 1 already the lower mode
        (0.0, 1.0)
    } else {
        let f = denom.abs() / (denom * denom + j * j).sqrt();
        (f, j * f / denom)
    };
    let g = params.pm_coupling;
    Ok(HybridModes {
        omega_plus,
        omega_minus,
        g_plus: -g * h,
        g_minus: f * g,
        f,
        h,
    })
}

/// Predicted detunings where the hybrid modes cross the magnon normal-mode
/// frequency in the symmetric-cavity sweep: ω±(Δ_a) = Δ_a ± J = ℰ gives
/// Δ_a = ℰ ∓ J. Returned sorted ascending; the two coincide when J = 0.
pub fn peak_predictor(params: &SystemParams, ss: &SteadyState) -> Result<[f64; 2]> {
    let bog = bogoliubov(params, ss).map_err(|_| Error::NoCrossing)?;
    let e = bog.normal_frequency;
    let j = params.photon_tunneling;
    Ok([e - j, e + j])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::constants::TAU;
    use crate::steady::solve_steady;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn baseline() -> SystemParams {
        SystemParams::baseline()
    }

    #[test]
    fn kerr_free_transform_is_identity() {
        let mut p = baseline();
        p.kerr = 0.0;
        let ss = solve_steady(&p).unwrap();
        let bog = bogoliubov(&p, &ss).unwrap();
        assert_eq!(bog.beta, 0.0);
        assert_relative_eq!(bog.alpha, 1.0, max_relative = 1e-12);
        assert_relative_eq!(bog.normal_frequency, ss.delta_eff, max_relative = 1e-12);
    }

    #[test]
    fn dark_magnon_with_kerr() {
        let mut p = baseline();
        p.drive_power = 0.0;
        let ss = solve_steady(&p).unwrap();
        let bog = bogoliubov(&p, &ss).unwrap();
        assert_eq!(bog.beta, 0.0);
        assert_relative_eq!(
            bog.normal_frequency,
            ss.delta_eff.abs(),
            max_relative = 1e-12
        );
    }

    #[test]
    fn baseline_normalization_identity() {
        let p = baseline();
        let ss = solve_steady(&p).unwrap();
        let bog = bogoliubov(&p, &ss).unwrap();
        assert!(bog.beta > 0.0);
        assert_relative_eq!(
            bog.alpha * bog.alpha - bog.beta * bog.beta,
            1.0,
            max_relative = 1e-10
        );
        assert!(bog.normal_frequency <= ss.delta_eff.abs());
        assert!((-std::f64::consts::PI..=std::f64::consts::PI).contains(&bog.phi));
    }

    #[test]
    fn negative_effective_detuning_is_degenerate() {
        let mut p = baseline();
        p.delta_m = -TAU * 200.0e6;
        p.omega_m = p.drive_frequency + p.delta_m;
        let ss = solve_steady(&p).unwrap();
        assert!(ss.delta_eff < 0.0);
        match bogoliubov(&p, &ss) {
            Err(Error::DegenerateNormalMode { .. }) => {}
            other => panic!("expected degenerate normal mode, got {other:?}"),
        }
    }

    #[test]
    fn symmetric_hybridization() {
        let p = baseline();
        let hm = hybrid_modes(&p).unwrap();
        assert_relative_eq!(hm.omega_plus, p.delta_a1 + p.photon_tunneling, max_relative = 1e-12);
        assert_relative_eq!(hm.omega_minus, p.delta_a1 - p.photon_tunneling, max_relative = 1e-12);
        assert_relative_eq!(hm.f, std::f64::consts::FRAC_1_SQRT_2, max_relative = 1e-12);
        assert_relative_eq!(
            hm.g_plus.abs(),
            p.pm_coupling / std::f64::consts::SQRT_2,
            max_relative = 1e-12
        );
        assert_relative_eq!(
            hm.g_minus.abs(),
            p.pm_coupling / std::f64::consts::SQRT_2,
            max_relative = 1e-12
        );
    }

    #[test]
    fn no_tunneling_keeps_bare_modes() {
        for (d1, d2) in [(TAU * 30.0e6, TAU * 50.0e6), (TAU * 50.0e6, TAU * 30.0e6)] {
            let mut p = baseline();
            p.photon_tunneling = 0.0;
            p.delta_a1 = d1;
            p.delta_a2 = d2;
            p.omega_a1 = p.drive_frequency + d1;
            p.omega_a2 = p.drive_frequency + d2;
            let hm = hybrid_modes(&p).unwrap();
            assert_relative_eq!(hm.omega_plus, d1.max(d2), max_relative = 1e-12);
            assert_relative_eq!(hm.omega_minus, d1.min(d2), max_relative = 1e-12);
            let couplings = [hm.g_plus.abs(), hm.g_minus.abs()];
            let mut sorted = couplings;
            sorted.sort_by(f64::total_cmp);
            assert_relative_eq!(sorted[1], p.pm_coupling, max_relative = 1e-12);
            assert!(sorted[0] == 0.0);
        }
    }

    #[test]
    fn peak_predictor_cases() {
        // K = 0, J = 0: single crossing at delta_m
        let mut p = baseline();
        p.kerr = 0.0;
        p.photon_tunneling = 0.0;
        let ss = solve_steady(&p).unwrap();
        let peaks = peak_predictor(&p, &ss).unwrap();
        assert_relative_eq!(peaks[0], p.delta_m, max_relative = 1e-12);
        assert_relative_eq!(peaks[1], p.delta_m, max_relative = 1e-12);

        // symmetric case: crossings at E -/+ J, in the red-detuned region
        let p = baseline();
        let ss = solve_steady(&p).unwrap();
        let bog = bogoliubov(&p, &ss).unwrap();
        let peaks = peak_predictor(&p, &ss).unwrap();
        assert_relative_eq!(peaks[0], bog.normal_frequency - p.photon_tunneling, max_relative = 1e-12);
        assert_relative_eq!(peaks[1], bog.normal_frequency + p.photon_tunneling, max_relative = 1e-12);
        assert!(peaks[0] > 0.0 && peaks[1] > 0.0);

        // degenerate normal mode maps to NoCrossing
        let mut p = baseline();
        p.delta_m = -TAU * 200.0e6;
        p.omega_m = p.drive_frequency + p.delta_m;
        let ss = solve_steady(&p).unwrap();
        assert!(matches!(peak_predictor(&p, &ss), Err(Error::NoCrossing)));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]
        #[test]
        fn hybrid_identities_hold(
            d1 in -3.0e8f64..3.0e8,
            d2 in -3.0e8f64..3.0e8,
            j in 0.0f64..4.0e8,
            g in 0.0f64..3.0e8,
        ) {
            let mut p = SystemParams::baseline();
            p.delta_a1 = d1;
            p.delta_a2 = d2;
            p.omega_a1 = p.drive_frequency + d1;
            p.omega_a2 = p.drive_frequency + d2;
            p.photon_tunneling = j;
            p.pm_coupling = g;
            let hm = hybrid_modes(&p).unwrap();
            prop_assert!((hm.f * hm.f + hm.h * hm.h - 1.0).abs() < 1e-10);
            prop_assert!(
                (hm.g_plus * hm.g_plus + hm.g_minus * hm.g_minus - g * g).abs()
                    <= 1e-10 * (1.0 + g * g)
            );
            prop_assert!(hm.omega_plus >= hm.omega_minus);
            prop_assert!(hm.omega_plus - hm.omega_minus >= 2.0 * j - 1e-6 * (1.0 + j));
        }
    }
}
