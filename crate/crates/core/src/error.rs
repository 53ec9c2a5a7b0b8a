//! Error type shared by every solver stage.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum FsiError {
    /// A vector or matrix did not have the size the operation requires.
    #[error("dimension mismatch in {context}: expected {expected}, got {got}")]
    Dimension {
        context: &'static str,
        expected: usize,
        got: usize,
    },

    /// A configuration value violates an invariant (non-positive step,
    /// non-invertible law tangent, bad mode count, ...).
    #[error("configuration error: {0}")]
    Config(String),

    /// The ODE state left the finite range during signal integration.
    #[error("signal integration blew up at t = {t:.6}")]
    IntegrationBlowup { t: f64 },

    /// Newton on the fluid system did not reach tolerance.
    #[error("fluid Newton failed to converge after {iters} iterations (residual {residual:.3e})")]
    SolverFailure { iters: usize, residual: f64 },

    /// The within-step coupling loop exhausted its subiteration budget.
    #[error(
        "coupling step {step} exceeded {max_subiters} subiterations; residual history {history:?}"
    )]
    StepFailure {
        step: usize,
        max_subiters: usize,
        history: Vec<f64>,
    },

    /// The quasi-static solid has no equilibrium in the bracketing interval.
    #[error("pressure {pressure:.6e} at cell {cell} is outside the validity range of the tube law")]
    OutOfRange { cell: usize, pressure: f64 },

    /// A snapshot matrix has lower rank than the requested mode count.
    #[error("snapshot matrix has effective rank {effective_rank}, cannot keep {requested} modes")]
    RankDeficient {
        effective_rank: usize,
        requested: usize,
    },

    /// The regressor system stayed singular after deduplication.
    #[error("regressor system is ill-conditioned: {0}; increase the dedup radius or the ridge lambda")]
    IllConditioned(String),

    /// Force and displacement snapshots do not describe the same subiterations.
    #[error("snapshot alignment error: {0}")]
    Misaligned(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("parse error in {context}: {message}")]
    Parse { context: String, message: String },
}

pub type Result<T> = std::result::Result<T, FsiError>;
