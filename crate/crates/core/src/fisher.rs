//! Parametric sensitivities of the Gaussian steady state and the quantum
//! Fisher information they carry about the photon-magnon coupling.

use nalgebra::{DMatrix, DVector, Matrix2, Matrix6, Vector2, Vector6};
use num_complex::Complex64;
use serde::Serialize;

use crate::dynamics::{
    build_diffusion, build_drift, check_stability, gaussian_steady_state, lyapunov_solve_raw,
    GaussianState, Mode, SymplecticForm,
};
use crate::error::{Error, Result};
use crate::params::SystemParams;
use crate::steady::{mean_field_terms, q_denominator, solve_steady};

/// Relative singular-value threshold below which an information-form
/// direction is treated as a pure-state null direction.
const PURE_DIRECTION_TOL: f64 = 1e-12;
/// A truncated null direction may carry at most this fraction of the total
/// information before the state counts as degenerate.
const NULL_WEIGHT_TOL: f64 = 1e-9;

/// How a sensitivity was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SensitivityMethod {
    /// Four-point Lagrange stencil in the coupling.
    Stencil,
    /// Implicit differentiation of the steady state and Lyapunov equation.
    Analytic,
}

/// Derivatives of the Gaussian state with respect to the coupling g.
#[derive(Debug, Clone, PartialEq)]
pub struct Sensitivity {
    /// ∂_g ⟨R̂₀⟩.
    pub d_mean: Vector6<f64>,
    /// ∂_g 𝒱 (symmetric).
    pub d_cov: Matrix6<f64>,
    pub method: SensitivityMethod,
}

impl Sensitivity {
    /// Mean-derivative pair of one mode.
    pub fn d_mean_of(&self, mode: Mode) -> Vector2<f64> {
        let k = 2 * mode.block();
        Vector2::new(self.d_mean[k], self.d_mean[k + 1])
    }

    /// Covariance-derivative block of one mode.
    pub fn d_local_block(&self, mode: Mode) -> Matrix2<f64> {
        let k = 2 * mode.block();
        self.d_cov.fixed_view::<2, 2>(k, k).into_owned()
    }
}

/// Global QFI, per-subsystem QFIs, and the subsystem ratios ξ.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FisherReport {
    /// Global QFI ℱ_g (units 1/(rad/s)²).
    pub qfi_global: f64,
    /// Subsystem QFI of cavity 1.
    pub qfi_a1: f64,
    /// Subsystem QFI of cavity 2.
    pub qfi_a2: f64,
    /// Subsystem QFI of the magnon.
    pub qfi_m: f64,
    /// ξ_j = ℱ^j / ℱ_g for the three modes.
    pub ratios: [f64; 3],
}

impl FisherReport {
    /// Computes the full report at a parameter point using the analytic
    /// sensitivity path.
    pub fn compute(params: &SystemParams) -> Result<Self> {
        let state = gaussian_steady_state(params)?;
        let sens = sensitivity_analytic(params)?;
        Self::from_state(&state, &sens)
    }

    pub fn from_state(state: &GaussianState, sens: &Sensitivity) -> Result<Self> {
        let qfi = qfi_global(state, sens)?;
        let a1 = qfi_subsystem(state, sens, Mode::Cavity1)?;
        let a2 = qfi_subsystem(state, sens, Mode::Cavity2)?;
        let m = qfi_subsystem(state, sens, Mode::Magnon)?;
        let ratios = if qfi > 0.0 {
            [a1 / qfi, a2 / qfi, m / qfi]
        } else {
            [0.0; 3]
        };
        Ok(Self {
            qfi_global: qfi,
            qfi_a1: a1,
            qfi_a2: a2,
            qfi_m: m,
            ratios,
        })
    }

    /// Minimal variance of an unbiased estimator after `repetitions`
    /// independent runs.
    pub fn qcrb(&self, repetitions: u64) -> Result<f64> {
        qcrb(self.qfi_global, repetitions)
    }
}

/// The five-point (minus center) first-derivative stencil
/// (−f₊₂ + 8f₊₁ − 8f₋₁ + f₋₂)/(12h); exact on quartics.
pub(crate) fn stencil_derivative(
    f_p2: f64,
    f_p1: f64,
    f_m1: f64,
    f_m2: f64,
    h: f64,
) -> f64 {
    (-f_p2 + 8.0 * f_p1 - 8.0 * f_m1 + f_m2) / (12.0 * h)
}

/// Finite-difference sensitivity with the four-evaluation Lagrange stencil
/// at g(1±δ), g(1±2δ).
///
/// Every shifted point must be stable and single-rooted; otherwise
/// `StencilCrossesInstability` names the offending relative shift.
pub fn sensitivity_stencil(params: &SystemParams, dg_rel: f64) -> Result<Sensitivity> {
    if !(dg_rel > 0.0) {
        return Err(Error::Domain(format!(
            "stencil step must be > 0, got {dg_rel:e}"
        )));
    }
    let h = dg_rel * params.pm_coupling;
    let mut states = Vec::with_capacity(4);
    for steps in [2.0, 1.0, -1.0, -2.0] {
        let mut shifted = params.clone();
        shifted.pm_coupling = params.pm_coupling + steps * h;
        let state = gaussian_steady_state(&shifted).map_err(|_| {
            Error::StencilCrossesInstability {
                shift: steps * dg_rel,
            }
        })?;
        states.push(state);
    }
    let mut d_mean = Vector6::zeros();
    for i in 0..6 {
        d_mean[i] = stencil_derivative(
            states[0].mean[i],
            states[1].mean[i],
            states[2].mean[i],
            states[3].mean[i],
            h,
        );
    }
    let mut d_cov = Matrix6::zeros();
    for i in 0..6 {
        for j in 0..6 {
            d_cov[(i, j)] = stencil_derivative(
                states[0].cov[(i, j)],
                states[1].cov[(i, j)],
                states[2].cov[(i, j)],
                states[3].cov[(i, j)],
                h,
            );
        }
    }
    let d_cov = (d_cov + d_cov.transpose()) * 0.5;
    Ok(Sensitivity {
        d_mean,
        d_cov,
        method: SensitivityMethod::Stencil,
    })
}

/// Truncation-free sensitivity by implicit differentiation.
///
/// The cubic root x(g) is differentiated implicitly, the mean amplitudes
/// through their closed forms, and the covariance through the
/// differentiated Lyapunov equation A ∂𝒱 + ∂𝒱 Aᵀ = −(∂A 𝒱 + 𝒱 ∂Aᵀ).
pub fn sensitivity_analytic(params: &SystemParams) -> Result<Sensitivity> {
    let ss = solve_steady(params)?;
    let terms = mean_field_terms(params);
    let g = params.pm_coupling;
    let k = params.kerr;
    if g == 0.0 {
        return Err(Error::Domain(
            "analytic sensitivity needs g != 0; use the stencil".into(),
        ));
    }
    let x = ss.m_abs2;
    // dG/dg = 2G/g, so db, dc, dR follow from the mean-field terms.
    let db = 2.0 * terms.g_loop.im / g;
    let dc = 2.0 * terms.g_loop.re / g;
    let d_rhs = 2.0 * terms.rhs / g;
    let (b, c) = (terms.b, terms.c);
    let p_g = 4.0 * k * db * x * x + (2.0 * b * db + 2.0 * c * dc) * x - d_rhs;
    let p_x = 12.0 * k * k * x * x + 8.0 * k * b * x + (b * b + c * c);
    let dx = -p_g / p_x;
    let q = q_denominator(params, &terms, x);
    let dq = Complex64::new(0.0, 2.0 * k * dx) + 2.0 * terms.g_loop / g;
    let dm = ss.m_mean * (Complex64::new(1.0 / g, 0.0) - dq / q);
    let da2 = -Complex64::i() * (ss.m_mean + g * dm) * terms.a1 / terms.chi;
    let da1 = -Complex64::i() * params.photon_tunneling * da2 / terms.a1;
    let rt2 = std::f64::consts::SQRT_2;
    let d_mean = Vector6::new(
        rt2 * da1.re,
        rt2 * da1.im,
        rt2 * da2.re,
        rt2 * da2.im,
        rt2 * dm.re,
        rt2 * dm.im,
    );
    // dA: the four explicit g entries plus the magnon-block dependence
    // through m^2 and delta_eff.
    let dm2 = 2.0 * ss.m_mean * dm;
    let d_deff = 4.0 * k * dx;
    let mut d_a = Matrix6::zeros();
    d_a[(2, 5)] = 1.0;
    d_a[(3, 4)] = -1.0;
    d_a[(4, 3)] = 1.0;
    d_a[(5, 2)] = -1.0;
    d_a[(4, 4)] = 2.0 * k * dm2.im;
    d_a[(5, 5)] = -2.0 * k * dm2.im;
    d_a[(4, 5)] = d_deff - 2.0 * k * dm2.re;
    d_a[(5, 4)] = -d_deff - 2.0 * k * dm2.re;

    let drift = build_drift(params, &ss);
    let report = check_stability(&drift);
    if !report.stable {
        return Err(Error::UnstableDrift {
            max_real_eig: report.max_real_eig,
        });
    }
    let diff = build_diffusion(params)?;
    let cov = lyapunov_solve_raw(&drift.0, &diff.0)?;
    let rhs = d_a * cov + cov * d_a.transpose();
    let d_cov = lyapunov_solve_raw(&drift.0, &rhs)?;
    Ok(Sensitivity {
        d_mean,
        d_cov: (d_cov + d_cov.transpose()) * 0.5,
        method: SensitivityMethod::Analytic,
    })
}

/// Quadratic form 2 bᵀ M⁺ b of the information system, with a rank-revealing
/// treatment of pure-state null directions.
///
/// Directions with singular value below `PURE_DIRECTION_TOL`·σ_max are
/// excluded; they are legitimate only while the sensitivity has negligible
/// weight on them (a mode with no parameter dependence carries no
/// information). If the truncated directions would contribute more than
/// `NULL_WEIGHT_TOL` of the total information, the state is flagged as
/// near-pure.
fn information_form(m: &DMatrix<f64>, b: &DVector<f64>, mean_term: f64) -> Result<f64> {
    let svd = m.clone().svd(true, true);
    let u = svd.u.as_ref().ok_or(Error::SingularSystem)?;
    let v_t = svd.v_t.as_ref().ok_or(Error::SingularSystem)?;
    let sigma = &svd.singular_values;
    let sigma_max = sigma.max();
    if !(sigma_max > 0.0) {
        return Err(Error::SingularSystem);
    }
    let cutoff = PURE_DIRECTION_TOL * sigma_max;
    let ub = u.transpose() * b;
    let mut kept = 0.0;
    let mut truncated_lb = 0.0;
    let mut x = DVector::zeros(b.len());
    for i in 0..sigma.len() {
        if sigma[i] > cutoff {
            kept += 2.0 * ub[i] * ub[i] / sigma[i];
            x += v_t.row(i).transpose() * (ub[i] / sigma[i]);
        } else {
            // the true contribution of this direction is at least this large
            truncated_lb += 2.0 * ub[i] * ub[i] / cutoff;
        }
    }
    let total = kept + mean_term;
    if truncated_lb > NULL_WEIGHT_TOL * total {
        return Err(Error::NearPureState {
            sigma_rel: sigma.min() / sigma_max,
        });
    }
    Ok(kept)
}

fn mean_information(cov: &DMatrix<f64>, d_mean: &DVector<f64>) -> Result<f64> {
    let chol = cov
        .clone()
        .cholesky()
        .ok_or_else(|| Error::Domain("covariance not positive definite".into()))?;
    let solved = chol.solve(d_mean);
    Ok(d_mean.dot(&solved))
}

/// Global quantum Fisher information
/// ℱ_g = 2 vec[∂𝒱]ᵀ 𝔐⁻¹ vec[∂𝒱] + ∂⟨R̂₀⟩ᵀ 𝒱⁻¹ ∂⟨R̂₀⟩ with
/// 𝔐 = 4𝒱⊗𝒱 + Ξ⊗Ξ.
///
/// All quantities are real in the quadrature representation, so the
/// conjugate transpose in the vectorized form is the plain transpose.
pub fn qfi_global(state: &GaussianState, sens: &Sensitivity) -> Result<f64> {
    let v = DMatrix::from_column_slice(6, 6, state.cov.as_slice());
    let xi = DMatrix::from_column_slice(6, 6, SymplecticForm::six().as_slice());
    let m = v.kronecker(&v) * 4.0 + xi.kronecker(&xi);
    let b = DVector::from_column_slice(sens.d_cov.as_slice());
    let d_mean = DVector::from_column_slice(sens.d_mean.as_slice());
    let mean_term = mean_information(&v, &d_mean)?;
    let cov_term = information_form(&m, &b, mean_term)?;
    Ok(cov_term + mean_term)
}

/// Subsystem QFI on the 2×2 local block with M_i = 4L_i⊗L_i + Λ⊗Λ.
pub fn qfi_subsystem(state: &GaussianState, sens: &Sensitivity, mode: Mode) -> Result<f64> {
    let l = state.local_block(mode);
    let dl = sens.d_local_block(mode);
    let dd = sens.d_mean_of(mode);
    let l_dyn = DMatrix::from_column_slice(2, 2, l.as_slice());
    let lam = DMatrix::from_column_slice(2, 2, SymplecticForm::two().as_slice());
    let m = l_dyn.kronecker(&l_dyn) * 4.0 + lam.kronecker(&lam);
    let b = DVector::from_column_slice(dl.as_slice());
    let d_mean = DVector::from_column_slice(dd.as_slice());
    let mean_term = mean_information(&l_dyn, &d_mean)?;
    let cov_term = information_form(&m, &b, mean_term)?;
    Ok(cov_term + mean_term)
}

/// Quantum Cramér-Rao bound 1/(N ℱ) on the estimator variance.
pub fn qcrb(fisher: f64, repetitions: u64) -> Result<f64> {
    if repetitions == 0 {
        return Err(Error::Domain("repetitions must be >= 1".into()));
    }
    if !(fisher > 0.0) {
        return Err(Error::ZeroInformation);
    }
    Ok(1.0 / (repetitions as f64 * fisher))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn baseline() -> SystemParams {
        SystemParams::baseline()
    }

    #[test]
    fn stencil_weights_exact_on_quartic() {
        // derivative of g^4 at g0: stencil is exact for degree <= 4
        let g0: f64 = 1.7;
        let h = 1e-3;
        let f = |g: f64| g.powi(4);
        let d = stencil_derivative(f(g0 + 2.0 * h), f(g0 + h), f(g0 - h), f(g0 - 2.0 * h), h);
        assert_relative_eq!(d, 4.0 * g0.powi(3), max_relative = 1e-12);
        // and O(h^4) truncation on g^5
        let f5 = |g: f64| g.powi(5);
        let err = |h: f64| {
            (stencil_derivative(
                f5(g0 + 2.0 * h),
                f5(g0 + h),
                f5(g0 - h),
                f5(g0 - 2.0 * h),
                h,
            ) - 5.0 * g0.powi(4))
            .abs()
        };
        let ratio = err(2e-2) / err(1e-2);
        assert!((ratio - 16.0).abs() < 2.0, "h^4 scaling, got ratio {ratio}");
    }

    #[test]
    fn decoupled_cavity_has_no_sensitivity() {
        // g = 0 and J = 0: mode 1 never sees the coupling
        let mut p = baseline();
        p.photon_tunneling = 0.0;
        p.pm_coupling = 1e-3; // stencil needs finite g to scale the step
        let sens = sensitivity_stencil(&p, 1e-6).unwrap();
        for i in 0..2 {
            assert!(sens.d_mean[i].abs() < 1e-20);
            for j in 0..6 {
                assert!(sens.d_cov[(i, j)].abs() < 1e-20);
            }
        }
    }

    #[test]
    fn analytic_drift_derivative_structure_without_kerr() {
        // K = 0, J = 0: dA has exactly the four +/-1 entries at the g slots.
        // Verified through the stencil on the drift matrix itself.
        let mut p = baseline();
        p.kerr = 0.0;
        p.photon_tunneling = 0.0;
        let h = 1e-6 * p.pm_coupling;
        let drift_at = |g: f64| {
            let mut q = p.clone();
            q.pm_coupling = g;
            let ss = solve_steady(&q).unwrap();
            build_drift(&q, &ss).0
        };
        let g = p.pm_coupling;
        let da = (drift_at(g + h) - drift_at(g - h)) / (2.0 * h);
        let mut expect = Matrix6::zeros();
        expect[(2, 5)] = 1.0;
        expect[(3, 4)] = -1.0;
        expect[(4, 3)] = 1.0;
        expect[(5, 2)] = -1.0;
        assert!((da - expect).norm() < 1e-6);
    }

    #[test]
    fn stencil_agrees_with_analytic_at_baseline() {
        let p = baseline();
        let st = sensitivity_stencil(&p, 1e-6).unwrap();
        let an = sensitivity_analytic(&p).unwrap();
        let mean_rel = (st.d_mean - an.d_mean).norm() / an.d_mean.norm();
        let cov_rel = (st.d_cov - an.d_cov).norm() / an.d_cov.norm();
        assert!(mean_rel < 1e-5, "mean sensitivity mismatch {mean_rel:e}");
        assert!(cov_rel < 1e-5, "cov sensitivity mismatch {cov_rel:e}");
    }

    #[test]
    fn stencil_across_multistability_is_flagged() {
        // at the multistable test point the shifted evaluations fail
        let mut p = baseline();
        p.drive_power = 1.5;
        p.gamma_m = crate::params::constants::TAU * 0.4e6;
        p.delta_m = -crate::params::constants::TAU * 270.0e6;
        p.omega_m = p.drive_frequency + p.delta_m;
        p.kerr = crate::params::constants::TAU * 1.5e-6;
        p.pm_coupling = crate::params::constants::TAU * 46.0e6;
        match sensitivity_stencil(&p, 1e-6) {
            Err(Error::StencilCrossesInstability { .. }) => {}
            other => panic!("expected stencil flag, got {other:?}"),
        }
    }

    #[test]
    fn differentiated_lyapunov_matches_symbolic_toy() {
        // One rotating mode with A = [[-1, g^2], [-g^2, -1]] and anisotropic
        // diffusion diag(d1, d2) has the closed-form covariance
        //   v22 - v11 = (d2 - d1)/(2 + 2g^4),
        //   v12 = g^2 (d2 - d1)/(4 + 4g^4),
        // so the g-derivative of the covariance is known by hand. The toy is
        // embedded in the 6x6 solver next to two inert damped modes.
        let g: f64 = 0.8;
        let (d1, d2) = (1.0, 3.0);
        let delta = d2 - d1;
        let mut a = Matrix6::identity() * -1.0;
        a[(0, 1)] = g * g;
        a[(1, 0)] = -g * g;
        let mut d = Matrix6::identity();
        d[(0, 0)] = d1;
        d[(1, 1)] = d2;
        let v = crate::dynamics::lyapunov_solve_raw(&a, &d).unwrap();
        let denom = 1.0 + g.powi(4);
        assert_relative_eq!(v[(1, 1)] - v[(0, 0)], delta / (2.0 * denom), max_relative = 1e-12);
        assert_relative_eq!(v[(0, 1)], g * g * delta / (4.0 * denom), max_relative = 1e-12);
        // dA/dg has the 2g entries of the rotation block
        let mut d_a = Matrix6::zeros();
        d_a[(0, 1)] = 2.0 * g;
        d_a[(1, 0)] = -2.0 * g;
        let rhs = d_a * v + v * d_a.transpose();
        let dv = crate::dynamics::lyapunov_solve_raw(&a, &rhs).unwrap();
        let dm_hand = -4.0 * g.powi(3) * delta / (2.0 * denom * denom);
        let dv12_hand = g * (1.0 - g.powi(4)) * delta / (2.0 * denom * denom);
        assert_relative_eq!(dv[(1, 1)] - dv[(0, 0)], dm_hand, max_relative = 1e-10);
        assert_relative_eq!(dv[(0, 1)], dv12_hand, max_relative = 1e-10);
    }

    #[test]
    fn parameter_independent_state_has_zero_qfi() {
        let state = GaussianState {
            mean: Vector6::repeat(0.3),
            cov: Matrix6::identity() * 0.75,
        };
        let sens = Sensitivity {
            d_mean: Vector6::zeros(),
            d_cov: Matrix6::zeros(),
            method: SensitivityMethod::Analytic,
        };
        assert_eq!(qfi_global(&state, &sens).unwrap(), 0.0);
        for m in Mode::ALL {
            assert_eq!(qfi_subsystem(&state, &sens, m).unwrap(), 0.0);
        }
    }

    #[test]
    fn displaced_thermal_mean_information() {
        // single-mode displaced thermal state, V = ((2n+1)/2) I, parameter in
        // the Q displacement only: F = 2/(2n+1).
        let n = 1.7;
        let v = (2.0 * n + 1.0) / 2.0;
        let mut cov = Matrix6::identity();
        cov.view_mut((2, 2), (2, 2)).copy_from(&(Matrix2::identity() * v));
        let state = GaussianState {
            mean: Vector6::zeros(),
            cov,
        };
        let mut d_mean = Vector6::zeros();
        d_mean[2] = 1.0;
        let sens = Sensitivity {
            d_mean,
            d_cov: Matrix6::zeros(),
            method: SensitivityMethod::Analytic,
        };
        let f = qfi_subsystem(&state, &sens, Mode::Cavity2).unwrap();
        assert_relative_eq!(f, 2.0 / (2.0 * n + 1.0), max_relative = 1e-12);
    }

    /// Brute-force 4×4 inversion oracle for the single-mode covariance term.
    fn single_mode_qfi_oracle(v: f64, dv: f64) -> f64 {
        let l = Matrix2::identity() * v;
        let dl = Matrix2::identity() * dv;
        let lam = SymplecticForm::two();
        let mut m = nalgebra::Matrix4::<f64>::zeros();
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    for q in 0..2 {
                        m[(2 * i + k, 2 * j + q)] =
                            4.0 * l[(i, j)] * l[(k, q)] + lam[(i, j)] * lam[(k, q)];
                    }
                }
            }
        }
        let b = nalgebra::Vector4::new(dl[(0, 0)], dl[(1, 0)], dl[(0, 1)], dl[(1, 1)]);
        let x = m.try_inverse().unwrap() * b;
        2.0 * b.dot(&x)
    }

    #[test]
    fn thermal_variance_parameter_matches_bruteforce_oracle() {
        // V = v(g) I with dv/dg = dv: known closed result 4 dv^2/(4v^2+1)
        let v = 1.3;
        let dv = 0.42;
        let mut cov = Matrix6::identity();
        cov.view_mut((2, 2), (2, 2)).copy_from(&(Matrix2::identity() * v));
        let state = GaussianState {
            mean: Vector6::zeros(),
            cov,
        };
        let mut d_cov = Matrix6::zeros();
        d_cov.view_mut((2, 2), (2, 2)).copy_from(&(Matrix2::identity() * dv));
        let sens = Sensitivity {
            d_mean: Vector6::zeros(),
            d_cov,
            method: SensitivityMethod::Analytic,
        };
        let f = qfi_subsystem(&state, &sens, Mode::Cavity2).unwrap();
        let oracle = single_mode_qfi_oracle(v, dv);
        assert_relative_eq!(f, oracle, max_relative = 1e-10);
        assert_relative_eq!(f, 4.0 * dv * dv / (4.0 * v * v + 1.0), max_relative = 1e-10);
    }

    #[test]
    fn baseline_hierarchy() {
        let p = baseline();
        let report = FisherReport::compute(&p).unwrap();
        assert!(report.qfi_global > 0.0);
        assert!(report.qfi_a2 > report.qfi_a1);
        assert!(report.qfi_a1 > report.qfi_m);
        assert!(report.qfi_global >= report.qfi_a2);
        let sum = report.qfi_a1 + report.qfi_a2 + report.qfi_m;
        assert!(sum <= report.qfi_global * (1.0 + 1e-9));
        for xi in report.ratios {
            assert!((0.0..=1.0 + 1e-9).contains(&xi));
        }
    }

    #[test]
    fn decoupled_cavity_has_zero_subsystem_qfi() {
        let mut p = baseline();
        p.photon_tunneling = 0.0;
        let report = FisherReport::compute(&p).unwrap();
        assert!(report.qfi_a1 <= 1e-8 * report.qfi_global);
        assert!(report.qfi_global > 0.0);
    }

    #[test]
    fn squeezed_pure_state_trips_the_guard() {
        // pure vacuum with a squeezing-direction sensitivity has divergent
        // information along a null direction of the form
        let state = GaussianState {
            mean: Vector6::zeros(),
            cov: Matrix6::identity() * 0.5,
        };
        let mut d_cov = Matrix6::zeros();
        d_cov[(0, 0)] = 1.0;
        d_cov[(1, 1)] = -1.0;
        let sens = Sensitivity {
            d_mean: Vector6::zeros(),
            d_cov,
            method: SensitivityMethod::Analytic,
        };
        match qfi_global(&state, &sens) {
            Err(Error::NearPureState { .. }) => {}
            other => panic!("expected NearPureState, got {other:?}"),
        }
    }

    #[test]
    fn qcrb_examples() {
        assert_eq!(qcrb(1.0, 1).unwrap(), 1.0);
        let f = 0.019;
        assert_relative_eq!(
            qcrb(f, 400).unwrap(),
            qcrb(f, 100).unwrap() / 4.0,
            max_relative = 1e-15
        );
        assert_relative_eq!(qcrb(f, 100).unwrap(), 1.0 / (100.0 * f), max_relative = 1e-15);
        assert!(matches!(qcrb(0.0, 10), Err(Error::ZeroInformation)));
        assert!(qcrb(1.0, 0).is_err());
    }

    #[test]
    fn temperature_monotonicity_of_global_qfi() {
        let mut values = Vec::new();
        for t in [10e-3, 100e-3, 200e-3] {
            let mut p = baseline();
            p.temperature = t;
            values.push(FisherReport::compute(&p).unwrap().qfi_global);
        }
        assert!(values[0] > values[1] && values[1] > values[2], "{values:?}");
    }
}
