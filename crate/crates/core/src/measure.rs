//! Classical Fisher information of single-mode Gaussian measurements:
//! homodyne, heterodyne, arbitrary pure-covariance Gaussian measurements,
//! and the numerically optimal Gaussian measurement.

use nalgebra::{Matrix2, Vector2};
use serde::Serialize;

use crate::dynamics::{GaussianState, Mode, Quadrature};
use crate::error::{Error, Result};
use crate::fisher::Sensitivity;

/// Squeezing bound of the measurement parameterization. e^{2r} at r = 12 is
/// ≈ 2.6e10, close enough to the homodyne limit to reproduce it below 1e-4
/// while keeping σ + σ_M well conditioned in the rotated frame.
pub const SQUEEZING_MAX: f64 = 12.0;

/// A single-mode Gaussian measurement.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum MeasurementKind {
    /// Sharp measurement of the amplitude quadrature (r → ∞ limit).
    HomodyneQ,
    /// Sharp measurement of the phase quadrature.
    HomodyneP,
    /// Simultaneous noisy measurement of both quadratures, σ_M = 𝟙₂.
    Heterodyne,
    /// Pure-state measurement covariance
    /// σ_M = R(θ) diag(e^{2r}, e^{−2r}) R(θ)ᵀ.
    GeneralGaussian { theta: f64, squeezing: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MeasurementSpec {
    pub kind: MeasurementKind,
}

impl MeasurementSpec {
    pub fn homodyne_q() -> Self {
        Self {
            kind: MeasurementKind::HomodyneQ,
        }
    }

    pub fn homodyne_p() -> Self {
        Self {
            kind: MeasurementKind::HomodyneP,
        }
    }

    pub fn heterodyne() -> Self {
        Self {
            kind: MeasurementKind::Heterodyne,
        }
    }

    pub fn general(theta: f64, squeezing: f64) -> Self {
        Self {
            kind: MeasurementKind::GeneralGaussian { theta, squeezing },
        }
    }

    /// The measurement covariance σ_M; `None` for the ideal homodyne limits,
    /// which have no finite covariance.
    pub fn covariance(&self) -> Option<Matrix2<f64>> {
        match self.kind {
            MeasurementKind::HomodyneQ | MeasurementKind::HomodyneP => None,
            MeasurementKind::Heterodyne => Some(Matrix2::identity()),
            MeasurementKind::GeneralGaussian { theta, squeezing } => {
                let rot = rotation(theta);
                let diag = Matrix2::new((2.0 * squeezing).exp(), 0.0, 0.0, (-2.0 * squeezing).exp());
                Some(rot * diag * rot.transpose())
            }
        }
    }
}

fn rotation(theta: f64) -> Matrix2<f64> {
    let (s, c) = theta.sin_cos();
    Matrix2::new(c, -s, s, c)
}

/// Homodyne CFI of one quadrature,
/// F = [2𝒱_kk (∂⟨R̂₀⟩_k)² + (∂𝒱_kk)²] / (2𝒱_kk²).
pub fn cfi_homodyne(
    state: &GaussianState,
    sens: &Sensitivity,
    mode: Mode,
    quad: Quadrature,
) -> Result<f64> {
    let k = 2 * mode.block()
        + match quad {
            Quadrature::Q => 0,
            Quadrature::P => 1,
        };
    let v = state.cov[(k, k)];
    if !(v > 0.0) {
        return Err(Error::Domain(format!(
            "non-positive marginal variance {v:e} for homodyne"
        )));
    }
    let dm = sens.d_mean[k];
    let dv = sens.d_cov[(k, k)];
    Ok((2.0 * v * dm * dm + dv * dv) / (2.0 * v * v))
}

/// Heterodyne CFI, F = ½ Tr[(ℵ⁻¹ ∂ℵ)²] + ∂⟨d⟩ᵀ ℵ⁻¹ ∂⟨d⟩ with ℵ = L + 𝟙₂.
pub fn cfi_heterodyne(state: &GaussianState, sens: &Sensitivity, mode: Mode) -> Result<f64> {
    let aleph = state.local_block(mode) + Matrix2::identity();
    let d_aleph = sens.d_local_block(mode);
    let dd = sens.d_mean_of(mode);
    let det = aleph[(0, 0)] * aleph[(1, 1)] - aleph[(0, 1)] * aleph[(1, 0)];
    if det.abs() <= 1e-300 {
        return Err(Error::SingularAleph);
    }
    Ok(quadratic_terms(&aleph, det, &d_aleph, &dd))
}

/// Shared adjugate-based evaluation of
/// ddᵀ S⁻¹ dd + ½ Tr[(S⁻¹ dΣ)²] for a 2×2 symmetric S with determinant
/// `det`.
fn quadratic_terms(s: &Matrix2<f64>, det: f64, d_sigma: &Matrix2<f64>, dd: &Vector2<f64>) -> f64 {
    let (s11, s12, s22) = (s[(0, 0)], s[(0, 1)], s[(1, 1)]);
    let mean_term = (dd[0] * dd[0] * s22 - 2.0 * dd[0] * dd[1] * s12 + dd[1] * dd[1] * s11) / det;
    // X = S^{-1} dSigma through the adjugate, componentwise
    let x11 = (s22 * d_sigma[(0, 0)] - s12 * d_sigma[(1, 0)]) / det;
    let x12 = (s22 * d_sigma[(0, 1)] - s12 * d_sigma[(1, 1)]) / det;
    let x21 = (-s12 * d_sigma[(0, 0)] + s11 * d_sigma[(1, 0)]) / det;
    let x22 = (-s12 * d_sigma[(0, 1)] + s11 * d_sigma[(1, 1)]) / det;
    let trace_term = 0.5 * (x11 * x11 + 2.0 * x12 * x21 + x22 * x22);
    mean_term + trace_term
}

/// CFI of an arbitrary single-mode Gaussian measurement,
/// F = ∂dᵀ(σ+σ_M)⁻¹∂d + ½Tr[((σ+σ_M)⁻¹∂σ)²].
///
/// The general case is evaluated in the eigenframe of σ_M, where σ + σ_M
/// has no large off-scale entries and the adjugate algebra stays accurate
/// all the way to the homodyne limit; a naive inverse loses seven digits at
/// r = 12.
pub fn cfi_gaussian(
    state: &GaussianState,
    sens: &Sensitivity,
    mode: Mode,
    spec: &MeasurementSpec,
) -> Result<f64> {
    match spec.kind {
        MeasurementKind::HomodyneQ => cfi_homodyne(state, sens, mode, Quadrature::Q),
        MeasurementKind::HomodyneP => cfi_homodyne(state, sens, mode, Quadrature::P),
        MeasurementKind::Heterodyne => cfi_heterodyne(state, sens, mode),
        MeasurementKind::GeneralGaussian { theta, squeezing } => {
            let rot = rotation(theta);
            let sigma = rot.transpose() * state.local_block(mode) * rot;
            let d_sigma = rot.transpose() * sens.d_local_block(mode) * rot;
            let dd = rot.transpose() * sens.d_mean_of(mode);
            let big = (2.0 * squeezing).exp();
            let small = (-2.0 * squeezing).exp();
            let s = Matrix2::new(
                sigma[(0, 0)] + big,
                sigma[(0, 1)],
                sigma[(1, 0)],
                sigma[(1, 1)] + small,
            );
            let det = s[(0, 0)] * s[(1, 1)] - s[(0, 1)] * s[(1, 0)];
            Ok(quadratic_terms(&s, det, &d_sigma, &dd))
        }
    }
}

/// Result of the Gaussian-measurement optimization.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OptimalGaussian {
    /// Maximized CFI.
    pub cfi: f64,
    /// The maximizing measurement.
    pub spec: MeasurementSpec,
    /// Set when the optimum sits at |r| = r_max, signaling a homodyne-type
    /// limit.
    pub boundary_maximum: bool,
    /// Final value reached from each of the 16 grid seeds.
    pub basin_cfis: Vec<f64>,
}

/// Maximizes the Gaussian-measurement CFI over (θ, r) with θ ∈ [0, π) and
/// |r| ≤ `SQUEEZING_MAX`, from a deterministic 4×4 grid of seeds refined by
/// Nelder-Mead.
///
/// The three closed-form measurements (both homodyne limits and heterodyne)
/// are always candidates, so the result never falls below them.
pub fn optimal_gaussian(
    state: &GaussianState,
    sens: &Sensitivity,
    mode: Mode,
) -> Result<OptimalGaussian> {
    let objective = |theta: f64, r: f64| -> f64 {
        cfi_gaussian(
            state,
            sens,
            mode,
            &MeasurementSpec::general(theta, r),
        )
        .unwrap_or(f64::NEG_INFINITY)
    };
    let mut basin_cfis = Vec::with_capacity(16);
    let mut best_value = f64::NEG_INFINITY;
    let mut best_point = (0.0, 0.0);
    for i in 0..4 {
        for j in 0..4 {
            let theta0 = std::f64::consts::PI * (i as f64 + 0.5) / 4.0;
            let r0 = -SQUEEZING_MAX + 2.0 * SQUEEZING_MAX * (j as f64 + 0.5) / 4.0;
            let (value, point) = nelder_mead_2d(&objective, (theta0, r0));
            basin_cfis.push(value);
            if value > best_value {
                best_value = value;
                best_point = point;
            }
        }
    }
    let hom_q = cfi_homodyne(state, sens, mode, Quadrature::Q)?;
    let hom_p = cfi_homodyne(state, sens, mode, Quadrature::P)?;
    let het = cfi_heterodyne(state, sens, mode)?;
    let closed: [(f64, MeasurementSpec); 3] = [
        (hom_q, MeasurementSpec::homodyne_q()),
        (hom_p, MeasurementSpec::homodyne_p()),
        (het, MeasurementSpec::heterodyne()),
    ];
    let (closed_best, closed_spec) = closed
        .iter()
        .cloned()
        .max_by(|a, b| a.0.total_cmp(&b.0))
        .expect("three candidates");
    if closed_best > best_value {
        return Ok(OptimalGaussian {
            cfi: closed_best,
            spec: closed_spec,
            boundary_maximum: !matches!(closed_spec.kind, MeasurementKind::Heterodyne),
            basin_cfis,
        });
    }
    let (theta, r) = best_point;
    let theta = theta.rem_euclid(std::f64::consts::PI);
    Ok(OptimalGaussian {
        cfi: best_value,
        spec: MeasurementSpec::general(theta, r),
        boundary_maximum: r.abs() >= SQUEEZING_MAX - 1e-9,
        basin_cfis,
    })
}

/// Plain two-dimensional Nelder-Mead maximization with the squeezing
/// coordinate clamped to ±`SQUEEZING_MAX`. Converges when the simplex
/// diameter drops below 1e-8.
fn nelder_mead_2d<F: Fn(f64, f64) -> f64>(f: &F, start: (f64, f64)) -> (f64, (f64, f64)) {
    let clamp = |p: (f64, f64)| (p.0, p.1.clamp(-SQUEEZING_MAX, SQUEEZING_MAX));
    let mut pts = [
        clamp(start),
        clamp((start.0 + 0.35, start.1)),
        clamp((start.0, start.1 + 0.8)),
    ];
    let mut vals = pts.map(|p| f(p.0, p.1));
    for _ in 0..600 {
        // order descending: pts[0] best
        let mut order = [0usize, 1, 2];
        order.sort_by(|&a, &b| vals[b].total_cmp(&vals[a]));
        pts = [pts[order[0]], pts[order[1]], pts[order[2]]];
        vals = [vals[order[0]], vals[order[1]], vals[order[2]]];
        let diameter = pts
            .iter()
            .flat_map(|a| {
                pts.iter()
                    .map(move |b| (a.0 - b.0).abs().max((a.1 - b.1).abs()))
            })
            .fold(0.0f64, f64::max);
        if diameter < 1e-8 {
            break;
        }
        let centroid = (
            0.5 * (pts[0].0 + pts[1].0),
            0.5 * (pts[0].1 + pts[1].1),
        );
        let worst = pts[2];
        let reflect = clamp((
            centroid.0 + (centroid.0 - worst.0),
            centroid.1 + (centroid.1 - worst.1),
        ));
        let f_reflect = f(reflect.0, reflect.1);
        if f_reflect > vals[0] {
            let expand = clamp((
                centroid.0 + 2.0 * (centroid.0 - worst.0),
                centroid.1 + 2.0 * (centroid.1 - worst.1),
            ));
            let f_expand = f(expand.0, expand.1);
            if f_expand > f_reflect {
                pts[2] = expand;
                vals[2] = f_expand;
            } else {
                pts[2] = reflect;
                vals[2] = f_reflect;
            }
        } else if f_reflect > vals[1] {
            pts[2] = reflect;
            vals[2] = f_reflect;
        } else {
            let contract = clamp((
                centroid.0 + 0.5 * (worst.0 - centroid.0),
                centroid.1 + 0.5 * (worst.1 - centroid.1),
            ));
            let f_contract = f(contract.0, contract.1);
            if f_contract > vals[2] {
                pts[2] = contract;
                vals[2] = f_contract;
            } else {
                for k in 1..3 {
                    pts[k] = clamp((
                        0.5 * (pts[0].0 + pts[k].0),
                        0.5 * (pts[0].1 + pts[k].1),
                    ));
                    vals[k] = f(pts[k].0, pts[k].1);
                }
            }
        }
    }
    let mut best = 0;
    for k in 1..3 {
        if vals[k] > vals[best] {
            best = k;
        }
    }
    (vals[best], pts[best])
}
