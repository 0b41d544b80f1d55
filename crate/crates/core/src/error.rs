//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// An input is outside the physical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The mean-field cubic admits more than one physical steady state.
    #[error("multistable regime: {roots} admissible steady-state roots")]
    MultistableRegime { roots: usize },

    /// No admissible steady-state root was found.
    #[error("no steady state found")]
    NoSteadyState,

    /// The drift matrix is not strictly stable.
    #[error("unstable drift matrix (max Re eigenvalue {max_real_eig:.6e})")]
    UnstableDrift { max_real_eig: f64 },

    /// The vectorized Lyapunov system is rank-deficient.
    #[error("singular Lyapunov system")]
    SingularSystem,

    /// A finite-difference stencil point left the stable single-root region.
    #[error("stencil crosses instability at relative coupling shift {shift:+e}")]
    StencilCrossesInstability { shift: f64 },

    /// The quantum Fisher information form is degenerate and the sensitivity
    /// has weight on a pure-state direction.
    #[error("near-pure state: information form singular (sigma_min/sigma_max = {sigma_rel:.3e})")]
    NearPureState { sigma_rel: f64 },

    /// Fisher information is non-positive, so no Cramer-Rao bound exists.
    #[error("zero Fisher information")]
    ZeroInformation,

    /// The heterodyne noise matrix is singular.
    #[error("singular heterodyne noise matrix")]
    SingularAleph,

    /// The Bogoliubov normal-mode frequency is not real, or the transform
    /// coefficients are not real.
    #[error("degenerate normal mode: delta_eff = {delta_eff:.6e}, E^2 = {e_squared:.6e}")]
    DegenerateNormalMode { delta_eff: f64, e_squared: f64 },

    /// The hybridized-mode resonance condition has no real solution.
    #[error("no resonance crossing")]
    NoCrossing,

    /// A sweep or configuration file is malformed.
    #[error("config error: {0}")]
    Config(String),

    /// Unknown figure preset name.
    #[error("unknown preset: {0}")]
    UnknownPreset(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
