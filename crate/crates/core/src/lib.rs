//! Steady state, stability, and Fisher-information analysis of a driven,
//! dissipative double-cavity-magnon system.
//!
//! The crate computes the nonlinear mean-field steady state, the linearized
//! Gaussian fluctuation state from the Lyapunov equation, the quantum Fisher
//! information carried about the photon-magnon coupling by the global state
//! and by each mode, and the classical Fisher information of homodyne,
//! heterodyne, and optimized Gaussian measurements. A sweep layer reproduces
//! the standard parameter scans as CSV/JSON data.

// validation uses `!(v > 0.0)` so NaN inputs fail closed
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod config;
pub mod dynamics;
pub mod error;
pub mod fisher;
pub mod measure;
pub mod normalmodes;
pub mod params;
pub mod steady;
pub mod sweep;

pub use dynamics::{
    build_diffusion, build_drift, char_poly, char_poly_cross_check, check_stability,
    closed_form_char_poly, gaussian_steady_state, hurwitz_determinants, mean_vector,
    solve_lyapunov, DiffusionMatrix, DriftMatrix, GaussianState, Mode, Quadrature,
    StabilityReport, SymplecticForm,
};
pub use error::{Error, Result};
pub use fisher::{
    qcrb, qfi_global, qfi_subsystem, sensitivity_analytic, sensitivity_stencil, FisherReport,
    Sensitivity, SensitivityMethod,
};
pub use measure::{
    cfi_gaussian, cfi_heterodyne, cfi_homodyne, optimal_gaussian, MeasurementKind,
    MeasurementSpec, OptimalGaussian,
};
pub use normalmodes::{bogoliubov, hybrid_modes, peak_predictor, BogoliubovParams, HybridModes};
pub use params::{
    bose_occupancy, coupling_from_geometry, drive_amplitude, kerr_coefficient, magnon_frequency,
    total_spin, MaterialParams, SystemParams,
};
pub use steady::{linearization_check, solve_steady, LinearizationReport, SteadyState};
pub use sweep::{
    emit, emit_to_vec, figure_preset, run_sweep, EmitFormat, Quantity, SweepAxis, SweepResult,
    SweepSpec,
};
