//! Nonlinear mean-field steady state of the driven double-cavity-magnon
//! system, including the cubic in the mean magnon number and rejection of
//! multistable parameter points.

use nalgebra::Matrix3;
use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::params::SystemParams;

/// Relative tolerance for accepting a polynomial root as real.
const REAL_ROOT_TOL: f64 = 1e-8;
/// Relative back-substitution residual for an admissible root.
const RESIDUAL_TOL: f64 = 1e-8;
/// Slightly negative roots are clamped to zero below this magnitude.
const NEGATIVE_CLAMP: f64 = 1e-12;

/// Complex mean amplitudes of the three modes at the steady state.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SteadyState {
    /// ⟨â₁⟩
    pub a1_mean: Complex64,
    /// ⟨â₂⟩
    pub a2_mean: Complex64,
    /// ⟨m̂⟩
    pub m_mean: Complex64,
    /// |⟨m̂⟩|², the admissible cubic root.
    pub m_abs2: f64,
    /// Effective magnon detuning Δ_m + 4K|⟨m̂⟩|² (rad/s).
    pub delta_eff: f64,
}

/// Linearization diagnostics for a steady state.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LinearizationReport {
    /// Mean photon number of the driven cavity, |⟨â₂⟩|².
    pub photon2_number: f64,
    /// Mean magnon number |⟨m̂⟩|².
    pub magnon_number: f64,
    /// |⟨m̂⟩|² / 2S.
    pub spin_fraction: f64,
    /// Raised when |⟨â₂⟩|² < 100 and the linearization is questionable.
    pub weak_drive_warning: bool,
    /// Raised when |⟨m̂⟩|²/2S > 1e-2 and the low-lying-excitation
    /// assumption is questionable.
    pub spin_depletion_warning: bool,
}

/// Intermediate quantities of the mean-field equations, shared with the
/// analytic sensitivity path.
#[derive(Debug, Clone, Copy)]
pub(crate) struct MeanFieldTerms {
    /// E_l (rad/s).
    pub drive: f64,
    /// A₁ = iΔ_a1 + γ_a1.
    pub a1: Complex64,
    /// χ = A₁A₂ + J².
    pub chi: Complex64,
    /// G = g²A₁/χ.
    pub g_loop: Complex64,
    /// b = Δ_m + K + Im G.
    pub b: f64,
    /// c = γ_m + Re G.
    pub c: f64,
    /// R = g²E²|A₁|²/|χ|², the cubic right-hand side.
    pub rhs: f64,
}

pub(crate) fn mean_field_terms(params: &SystemParams) -> MeanFieldTerms {
    let drive = params.drive_amplitude();
    let a1 = Complex64::new(params.gamma_a1, params.delta_a1);
    let a2 = Complex64::new(params.gamma_a2, params.delta_a2);
    let chi = a1 * a2 + params.photon_tunneling.powi(2);
    let g2 = params.pm_coupling * params.pm_coupling;
    let g_loop = g2 * a1 / chi;
    let b = params.delta_m + params.kerr + g_loop.im;
    let c = params.gamma_m + g_loop.re;
    let rhs = g2 * drive * drive * a1.norm_sqr() / chi.norm_sqr();
    MeanFieldTerms {
        drive,
        a1,
        chi,
        g_loop,
        b,
        c,
        rhs,
    }
}

/// The magnon self-energy denominator 𝒬 at magnon number `x`.
pub(crate) fn q_denominator(params: &SystemParams, terms: &MeanFieldTerms, x: f64) -> Complex64 {
    Complex64::new(
        params.gamma_m,
        params.delta_m + 2.0 * params.kerr * x + params.kerr,
    ) + terms.g_loop
}

fn m_mean_at(params: &SystemParams, terms: &MeanFieldTerms, x: f64) -> Complex64 {
    let q = q_denominator(params, terms, x);
    -Complex64::i() * params.pm_coupling * terms.drive * terms.a1 / (q * terms.chi)
}

/// All real roots of c3 x³ + c2 x² + c1 x + c0 = 0.
///
/// Cubics are solved by companion-matrix eigenvalues after rescaling the
/// unknown to O(1), then polished by one Newton step. A root counts as real
/// when |Im| ≤ 1e-8 (1 + |Re|). Degenerate leading coefficients (the K → 0
/// limit) fall back to the quadratic and linear formulas.
pub(crate) fn real_cubic_roots(c3: f64, c2: f64, c1: f64, c0: f64) -> Vec<f64> {
    if c3 == 0.0 {
        if c2 == 0.0 {
            if c1 == 0.0 {
                return Vec::new();
            }
            return vec![-c0 / c1];
        }
        let disc = c1 * c1 - 4.0 * c2 * c0;
        if disc < 0.0 {
            return Vec::new();
        }
        let sq = disc.sqrt();
        let q = -0.5 * (c1 + c1.signum() * sq);
        let mut roots = vec![q / c2];
        if q != 0.0 {
            roots.push(c0 / q);
        }
        return roots;
    }
    // Rescale x = s y so the transformed cubic has O(1) coefficients.
    let s = (c0.abs() / c3.abs()).powf(1.0 / 3.0).max(1.0);
    let (p2, p1, p0) = (
        c2 / (c3 * s),
        c1 / (c3 * s * s),
        c0 / (c3 * s * s * s),
    );
    let companion = Matrix3::new(0.0, 0.0, -p0, 1.0, 0.0, -p1, 0.0, 1.0, -p2);
    let eigs = companion.complex_eigenvalues();
    let mut roots = Vec::with_capacity(3);
    for ev in eigs.iter() {
        if ev.im.abs() > REAL_ROOT_TOL * (1.0 + ev.re.abs()) {
            continue;
        }
        let mut y = ev.re;
        // one Newton step on the scaled cubic
        for _ in 0..2 {
            let f = ((y + p2) * y + p1) * y + p0;
            let df = (3.0 * y + 2.0 * p2) * y + p1;
            if df != 0.0 {
                let step = f / df;
                if step.is_finite() {
                    y -= step;
                }
            }
        }
        roots.push(s * y);
    }
    roots
}

/// Solves the mean-field steady state.
///
/// Forms the real cubic in x = |⟨m̂⟩|²,
/// 4K²x³ + 4Kb x² + (b² + c²)x − R = 0 with b = Δ_m + K + Im G,
/// c = γ_m + Re G, G = g²A₁/χ, and keeps non-negative real roots whose
/// back-substituted magnon amplitude reproduces x. Exactly one admissible
/// root must remain; otherwise the point is multistable or has no steady
/// state.
pub fn solve_steady(params: &SystemParams) -> Result<SteadyState> {
    params.validate()?;
    let terms = mean_field_terms(params);
    let k = params.kerr;
    let roots = real_cubic_roots(
        4.0 * k * k,
        4.0 * k * terms.b,
        terms.b * terms.b + terms.c * terms.c,
        -terms.rhs,
    );
    let mut admissible: Vec<(f64, Complex64)> = Vec::new();
    for root in roots {
        if root < -NEGATIVE_CLAMP {
            continue;
        }
        let x = root.max(0.0);
        let m = m_mean_at(params, &terms, x);
        if (m.norm_sqr() - x).abs() <= RESIDUAL_TOL * (1.0 + x) {
            // collapse duplicates from near-degenerate roots
            if !admissible
                .iter()
                .any(|(seen, _)| (seen - x).abs() <= 1e-6 * (1.0 + x))
            {
                admissible.push((x, m));
            }
        }
    }
    match admissible.len() {
        0 => Err(Error::NoSteadyState),
        1 => {
            let (x, m) = admissible[0];
            let a2 = (terms.drive - Complex64::i() * params.pm_coupling * m) * terms.a1
                / terms.chi;
            let a1 = -Complex64::i() * params.photon_tunneling * a2 / terms.a1;
            Ok(SteadyState {
                a1_mean: a1,
                a2_mean: a2,
                m_mean: m,
                m_abs2: x,
                delta_eff: params.delta_m + 4.0 * k * x,
            })
        }
        n => Err(Error::MultistableRegime { roots: n }),
    }
}

/// Reports the mean occupations that justify the linearization, flagging
/// weak drive (|⟨â₂⟩|² < 100) and magnon numbers that are no longer small
/// against the total spin (|⟨m̂⟩|²/2S > 1e-2).
pub fn linearization_check(ss: &SteadyState, total_spin_2s: f64) -> LinearizationReport {
    let photon2 = ss.a2_mean.norm_sqr();
    let spin_fraction = if total_spin_2s > 0.0 {
        ss.m_abs2 / total_spin_2s
    } else {
        f64::INFINITY
    };
    LinearizationReport {
        photon2_number: photon2,
        magnon_number: ss.m_abs2,
        spin_fraction,
        weak_drive_warning: photon2 < 100.0,
        spin_depletion_warning: spin_fraction > 1e-2,
    }
}
