//! Linearized fluctuation dynamics: drift and diffusion matrices, the
//! steady-state Lyapunov equation, and stability certification by both the
//! eigenvalue and Routh-Hurwitz criteria.

use nalgebra::{DMatrix, DVector, Matrix2, Matrix6, Vector2, Vector6};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::params::{bose_occupancy, SystemParams};
use crate::steady::{solve_steady, SteadyState};

/// Relative margin of the marginal-stability band.
const STABILITY_MARGIN: f64 = 1e-9;

/// Mode label for subsystem selection, in quadrature-block order
/// (Q_a1, P_a1, Q_a2, P_a2, Q_m, P_m).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Mode {
    #[serde(rename = "a1")]
    Cavity1,
    #[serde(rename = "a2")]
    Cavity2,
    #[serde(rename = "m")]
    Magnon,
}

impl Mode {
    /// Index of the mode's 2×2 block in the 6×6 covariance.
    pub fn block(self) -> usize {
        match self {
            Mode::Cavity1 => 0,
            Mode::Cavity2 => 1,
            Mode::Magnon => 2,
        }
    }

    pub const ALL: [Mode; 3] = [Mode::Cavity1, Mode::Cavity2, Mode::Magnon];
}

/// One of the two quadratures of a mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Quadrature {
    /// Amplitude quadrature Q = (a + a†)/√2.
    Q,
    /// Phase quadrature P = (a − a†)/√2 i.
    P,
}

/// The symplectic form Ξ = ⊕³ Λ with Λ = [[0, 1], [−1, 0]].
pub struct SymplecticForm;

impl SymplecticForm {
    /// 2×2 single-mode form Λ.
    pub fn two() -> Matrix2<f64> {
        Matrix2::new(0.0, 1.0, -1.0, 0.0)
    }

    /// 6×6 three-mode form Ξ.
    pub fn six() -> Matrix6<f64> {
        let mut xi = Matrix6::zeros();
        for k in 0..3 {
            xi[(2 * k, 2 * k + 1)] = 1.0;
            xi[(2 * k + 1, 2 * k)] = -1.0;
        }
        xi
    }
}

/// Drift matrix of the linearized quadrature dynamics.
#[derive(Debug, Clone, PartialEq)]
pub struct DriftMatrix(pub Matrix6<f64>);

/// Diagonal diffusion matrix of the quadrature dynamics.
#[derive(Debug, Clone, PartialEq)]
pub struct DiffusionMatrix(pub Matrix6<f64>);

/// Builds the drift matrix entrywise from the steady state.
///
/// The magnon block carries ℜ± = −γ_m ± 2 Im(⟨m̂⟩²)K and
/// ℑ± = ±(Δ_eff + K) − 2 Re(⟨m̂⟩²)K.
pub fn build_drift(params: &SystemParams, ss: &SteadyState) -> DriftMatrix {
    let j = params.photon_tunneling;
    let g = params.pm_coupling;
    let k = params.kerr;
    let m2 = ss.m_mean * ss.m_mean;
    let re_plus = -params.gamma_m + 2.0 * k * m2.im;
    let re_minus = -params.gamma_m - 2.0 * k * m2.im;
    let im_plus = (ss.delta_eff + k) - 2.0 * k * m2.re;
    let im_minus = -(ss.delta_eff + k) - 2.0 * k * m2.re;
    #[rustfmt::skip]
    let a = Matrix6::new(
        -params.gamma_a1,  params.delta_a1,  0.0,               j,                0.0,      0.0,
        -params.delta_a1, -params.gamma_a1, -j,                 0.0,              0.0,      0.0,
        0.0,               j,               -params.gamma_a2,   params.delta_a2,  0.0,      g,
        -j,                0.0,             -params.delta_a2,  -params.gamma_a2, -g,        0.0,
        0.0,               0.0,              0.0,               g,                re_plus,  im_plus,
        0.0,               0.0,             -g,                 0.0,              im_minus, re_minus,
    );
    DriftMatrix(a)
}

/// Builds the diagonal diffusion matrix, [2n(ω_k)+1]γ_k per quadrature pair.
pub fn build_diffusion(params: &SystemParams) -> Result<DiffusionMatrix> {
    let n1 = bose_occupancy(params.omega_a1, params.temperature)?;
    let n2 = bose_occupancy(params.omega_a2, params.temperature)?;
    let nm = bose_occupancy(params.omega_m, params.temperature)?;
    let d1 = (2.0 * n1 + 1.0) * params.gamma_a1;
    let d2 = (2.0 * n2 + 1.0) * params.gamma_a2;
    let dm = (2.0 * nm + 1.0) * params.gamma_m;
    Ok(DiffusionMatrix(Matrix6::from_diagonal(&Vector6::new(
        d1, d1, d2, d2, dm, dm,
    ))))
}

/// Gaussian steady state: first-moment vector and 6×6 covariance.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussianState {
    /// Quadrature averages ⟨R̂₀⟩ = (⟨Q_a1⟩, ⟨P_a1⟩, …, ⟨P_m⟩).
    pub mean: Vector6<f64>,
    /// Symmetric covariance matrix 𝒱.
    pub cov: Matrix6<f64>,
}

impl GaussianState {
    /// Local 2×2 covariance block L_i of a mode.
    pub fn local_block(&self, mode: Mode) -> Matrix2<f64> {
        let k = 2 * mode.block();
        self.cov.fixed_view::<2, 2>(k, k).into_owned()
    }

    /// Correlation block C_{i,j} between two modes.
    pub fn correlation_block(&self, i: Mode, j: Mode) -> Matrix2<f64> {
        self.cov
            .fixed_view::<2, 2>(2 * i.block(), 2 * j.block())
            .into_owned()
    }

    /// First-moment pair (⟨Q_i⟩, ⟨P_i⟩) of a mode.
    pub fn mean_of(&self, mode: Mode) -> Vector2<f64> {
        let k = 2 * mode.block();
        Vector2::new(self.mean[k], self.mean[k + 1])
    }

    /// Smallest eigenvalue of 𝒱 + iΞ/2, computed through the real
    /// symmetric embedding [[𝒱, −Ξ/2], [Ξ/2, 𝒱]].
    ///
    /// Non-negative (to tolerance) iff the Robertson-Schrödinger
    /// uncertainty relation holds.
    pub fn uncertainty_min_eigenvalue(&self) -> f64 {
        let xi = SymplecticForm::six();
        let mut big = DMatrix::zeros(12, 12);
        for i in 0..6 {
            for j in 0..6 {
                big[(i, j)] = self.cov[(i, j)];
                big[(i + 6, j + 6)] = self.cov[(i, j)];
                big[(i, j + 6)] = -0.5 * xi[(i, j)];
                big[(i + 6, j)] = 0.5 * xi[(i, j)];
            }
        }
        big.symmetric_eigen()
            .eigenvalues
            .iter()
            .cloned()
            .fold(f64::INFINITY, f64::min)
    }
}

/// Quadrature means from the complex steady-state amplitudes,
/// ⟨Q_o⟩ = √2 Re⟨ô⟩ and ⟨P_o⟩ = √2 Im⟨ô⟩.
pub fn mean_vector(ss: &SteadyState) -> Vector6<f64> {
    let rt2 = std::f64::consts::SQRT_2;
    Vector6::new(
        rt2 * ss.a1_mean.re,
        rt2 * ss.a1_mean.im,
        rt2 * ss.a2_mean.re,
        rt2 * ss.a2_mean.im,
        rt2 * ss.m_mean.re,
        rt2 * ss.m_mean.im,
    )
}

/// Verdict of the two stability criteria.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct StabilityReport {
    /// Max real part of the drift eigenvalues strictly inside the margin.
    pub stable: bool,
    /// Largest real part among the eigenvalues (rad/s).
    pub max_real_eig: f64,
    /// All Hurwitz determinants positive.
    pub hurwitz_ok: bool,
    /// |max real eigenvalue| within the 1e-9‖A‖ band; verdicts may
    /// legitimately disagree here and the point is excluded from sweeps.
    pub marginal: bool,
}

/// Certifies stability by eigenvalues and, independently, by the
/// Routh-Hurwitz determinants of the characteristic polynomial.
pub fn check_stability(a: &DriftMatrix) -> StabilityReport {
    let norm = a.0.norm();
    if norm == 0.0 {
        return StabilityReport {
            stable: false,
            max_real_eig: 0.0,
            hurwitz_ok: false,
            marginal: true,
        };
    }
    let scaled = a.0 / norm;
    let max_real_scaled = scaled
        .complex_eigenvalues()
        .iter()
        .map(|ev| ev.re)
        .fold(f64::NEG_INFINITY, f64::max);
    let max_real_eig = max_real_scaled * norm;
    let coeffs = char_poly(&scaled);
    let hurwitz_ok = hurwitz_determinants(&coeffs).iter().all(|d| *d > 0.0);
    StabilityReport {
        stable: max_real_scaled < -STABILITY_MARGIN,
        max_real_eig,
        hurwitz_ok,
        marginal: max_real_scaled.abs() <= STABILITY_MARGIN,
    }
}

/// Characteristic-polynomial coefficients [α₀, …, α₆] of a 6×6 matrix,
/// p(λ) = α₀λ⁶ + α₁λ⁵ + … + α₆ with α₀ = 1, by the Faddeev-LeVerrier
/// recursion.
#[allow(clippy::needless_range_loop)]
pub fn char_poly(a: &Matrix6<f64>) -> [f64; 7] {
    let mut coeffs = [0.0; 7];
    coeffs[0] = 1.0;
    let mut m = Matrix6::identity();
    for k in 1..=6 {
        let am = a * m;
        let ck = -am.trace() / k as f64;
        coeffs[k] = ck;
        m = am + Matrix6::identity() * ck;
    }
    coeffs
}

/// The six leading principal minors of the 6×6 Hurwitz matrix
/// H_ij = α_{2i−j} (α indices outside 0..=6 are zero).
///
/// All six positive ⇔ every root of the polynomial has negative real part.
pub fn hurwitz_determinants(coeffs: &[f64; 7]) -> [f64; 6] {
    let alpha = |k: i64| -> f64 {
        if (0..=6).contains(&k) {
            coeffs[k as usize]
        } else {
            0.0
        }
    };
    let mut dets = [0.0; 6];
    for k in 1..=6usize {
        let h = DMatrix::from_fn(k, k, |i, j| alpha(2 * (i as i64 + 1) - (j as i64 + 1)));
        dets[k - 1] = h.determinant();
    }
    dets
}

/// Closed-form characteristic-polynomial coefficients for the
/// symmetric-cavity case (γ_a1 = γ_a2, Δ_a1 = Δ_a2), kept as an optional
/// diagnostic cross-check of the numeric path.
///
/// The published closed forms carry transcription slips: the α₂ term
/// `−4η₁` is dimensionally short a rate and is repaired to `−4γ_a η₁`,
/// which restores exact agreement; α₄ and α₅ still disagree with the
/// numeric coefficients at the percent-to-order-unity level and no repair
/// is attempted. Deviations are reported by [`char_poly_cross_check`];
/// the numeric [`char_poly`] is authoritative everywhere.
pub fn closed_form_char_poly(params: &SystemParams, ss: &SteadyState) -> Option<[f64; 7]> {
    let symmetric = params.gamma_a1 == params.gamma_a2 && params.delta_a1 == params.delta_a2;
    if !symmetric {
        return None;
    }
    let ga = params.gamma_a1;
    let da = params.delta_a1;
    let j = params.photon_tunneling;
    let g = params.pm_coupling;
    let k = params.kerr;
    let m2 = ss.m_mean * ss.m_mean;
    let re_plus = -params.gamma_m + 2.0 * k * m2.im;
    let re_minus = -params.gamma_m - 2.0 * k * m2.im;
    let im_plus = (ss.delta_eff + k) - 2.0 * k * m2.re;
    let im_minus = -(ss.delta_eff + k) - 2.0 * k * m2.re;
    let eta1 = re_plus + re_minus;
    let eta2 = re_plus * re_minus - im_plus * im_minus;
    let eta3 = im_plus - im_minus;
    let eta4 = ga * ga + da * da;
    let eta5 = j * j + da * da;
    let mu0 = 6.0 * g * g + 4.0 * (eta5 + eta2);
    let mu2 = 6.0 * (g * g + eta2) + 2.0 * eta5;
    let mu3 = (4.0 * da * da + 3.0 * g * g + 4.0 * j * j) * eta1;
    let mu5 = 2.0 * ga.powi(3) + j * j * (2.0 * ga - eta1) - (3.0 * ga * ga + da * da) * eta1
        + 2.0 * ga * da * (da - im_plus + im_minus);
    let mu6 = eta4 * eta1 - 2.0 * ga * eta2;
    let mu7 = eta4 * eta1 - 4.0 * ga * eta2;
    let mu8 = j.powi(4) + 2.0 * j * j * (ga * ga - da * da) + eta4 * eta4;
    let mu9 = eta4 * (ga * eta1 + da * eta3) + j * j * (ga * eta1 - da * eta3);
    Some([
        1.0,
        4.0 * ga - eta1,
        2.0 * (g * g + j * j) + 6.0 * ga * ga + 2.0 * da * da - 4.0 * ga * eta1 + eta2,
        4.0 * ga.powi(3) - eta1 * (g * g + 2.0 * eta5) - 6.0 * ga * ga * eta1 + ga * mu0,
        ga.powi(4) - 4.0 * ga.powi(3) * eta1 + ga * ga * mu2 - ga * mu3
            + 2.0 * re_plus * re_minus * eta5,
        2.0 * g.powi(4) * ga - j.powi(4) * eta1 + g * g * mu5 - 2.0 * j * j * mu6 - eta4 * mu7,
        g.powi(4) * eta4 + eta2 * mu8 - g * g * mu9,
    ])
}

/// Relative deviation per coefficient between the closed-form and numeric
/// characteristic polynomials; `None` off the symmetric-cavity case.
pub fn char_poly_cross_check(params: &SystemParams, ss: &SteadyState) -> Option<[f64; 6]> {
    let closed = closed_form_char_poly(params, ss)?;
    let a = build_drift(params, ss).0;
    let scale = a.norm();
    let numeric = char_poly(&(a / scale));
    let mut dev = [0.0; 6];
    for k in 1..=6 {
        let scaled_closed = closed[k] / scale.powi(k as i32);
        dev[k - 1] = (scaled_closed - numeric[k]).abs() / numeric[k].abs().max(f64::MIN_POSITIVE);
    }
    Some(dev)
}

/// Core solver for A X + X Aᵀ = −RHS through the vectorized 36×36 system
/// (I⊗A + A⊗I) vec(X) = −vec(RHS), followed by symmetrization.
///
/// A and RHS are jointly rescaled by ‖A‖ first so the system entries are
/// O(1); the solution is invariant under that rescaling.
pub(crate) fn lyapunov_solve_raw(a: &Matrix6<f64>, rhs: &Matrix6<f64>) -> Result<Matrix6<f64>> {
    let scale = a.norm();
    if scale == 0.0 {
        return Err(Error::SingularSystem);
    }
    let a_s = DMatrix::from_column_slice(6, 6, (a / scale).as_slice());
    let rhs_s = rhs / scale;
    let eye = DMatrix::<f64>::identity(6, 6);
    let system = eye.kronecker(&a_s) + a_s.kronecker(&eye);
    let b = DVector::from_column_slice(rhs_s.as_slice());
    let lu = system.full_piv_lu();
    let x = lu.solve(&(-b)).ok_or(Error::SingularSystem)?;
    let v = Matrix6::from_column_slice(x.as_slice());
    Ok((v + v.transpose()) * 0.5)
}

/// Solves the steady-state Lyapunov equation A𝒱 + 𝒱Aᵀ = −D.
pub fn solve_lyapunov(a: &DriftMatrix, d: &DiffusionMatrix) -> Result<Matrix6<f64>> {
    let report = check_stability(a);
    if !report.stable {
        return Err(Error::UnstableDrift {
            max_real_eig: report.max_real_eig,
        });
    }
    lyapunov_solve_raw(&a.0, &d.0)
}

/// Full pipeline from parameters to the Gaussian steady state.
pub fn gaussian_steady_state(params: &SystemParams) -> Result<GaussianState> {
    let ss = solve_steady(params)?;
    let drift = build_drift(params, &ss);
    let diff = build_diffusion(params)?;
    let cov = solve_lyapunov(&drift, &diff)?;
    Ok(GaussianState {
        mean: mean_vector(&ss),
        cov,
    })
}
