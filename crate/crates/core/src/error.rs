use thiserror::Error;

/// Errors raised by the forward solver, probing, serialization and the
/// inverse machinery.
#[derive(Debug, Error)]
pub enum Error {
    /// A constructor or operation received data violating its contract.
    #[error("invalid {what}: {why}")]
    Invalid { what: &'static str, why: String },

    /// BlowUpDetected: the solution left the configured cap before the
    /// horizon, mirroring the finite existence time of the continuous
    /// problem.
    #[error(
        "BlowUpDetected: |u| reached {max_abs:.3e} (cap {cap:.1e}) at t = {t:.6}; \
         the solution blows up before the requested horizon"
    )]
    BlowUpDetected { t: f64, max_abs: f64, cap: f64 },

    /// The inner Newton solve failed even after repeated step halving.
    #[error("NewtonDivergence: inner Newton solve failed at t = {t:.6} with dt = {dt:.3e}")]
    NewtonDivergence { t: f64, dt: f64 },

    /// Probe location outside the spatial domain.
    #[error("probe point x0 = {x0} lies outside [{a}, {b}]")]
    ProbeOutsideDomain { x0: f64, a: f64, b: f64 },

    /// A trace file failed structural validation on read.
    #[error("malformed trace file: {0}")]
    MalformedTraceFile(String),

    /// The optimizer budget cannot pay for a single gradient.
    #[error("evaluation budget {budget} is below the minimum {min} (one gradient plus one step)")]
    BudgetTooSmall { budget: usize, min: usize },

    /// Scaled-roots construction requires positive pairwise-distinct roots.
    #[error("invalid roots: {0}")]
    InvalidRoots(String),

    /// Symmetry construction requires data symmetric about the midpoint.
    #[error("asymmetric data: {0}")]
    AsymmetricData(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn invalid(what: &'static str, why: impl Into<String>) -> Self {
        Error::Invalid {
            what,
            why: why.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
