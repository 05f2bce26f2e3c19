use thiserror::Error;

/// Errors surfaced by the contact-dynamics engine.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// The `[[M, Aᵀ],[A, 0]]` block matrix is not invertible. With a singular
    /// inertia this means some massless motion is left unresisted by the
    /// active constraints.
    #[error("singular block matrix: massless motion unresisted by constraints (smin/smax = {ratio:.3e})")]
    SingularBlockMatrix { ratio: f64 },

    /// The constraint rows are linearly dependent.
    #[error("rank-deficient constraint rows (smin/smax = {ratio:.3e})")]
    RankDeficientConstraints { ratio: f64 },

    /// Incremental Schur extension hit a non-positive pivot `a_k M† a_kᵀ`.
    #[error("degenerate extension: a_k M-dagger a_k^T = {pivot:.3e} <= tol")]
    DegenerateExtension { pivot: f64 },

    /// Two routes that must agree algebraically did not.
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    /// The derivative oracle cannot reach the requested order.
    #[error("derivative order {requested} unavailable (max supported {available})")]
    DerivativeUnavailable { requested: usize, available: usize },

    /// A flow probe never saw the monitored function leave the tolerance band.
    #[error("flow probe inconclusive over the requested horizon")]
    Inconclusive,

    /// The state is outside the domain of the requested contact mode.
    #[error("domain violation: {0}")]
    DomainViolation(String),

    /// An explicit-inverse route requires an invertible inertia tensor.
    #[error("not applicable: inertia tensor is singular at this state")]
    NotApplicable,

    /// No candidate mode satisfies the complementarity biconditional.
    #[error("no mode solves the {predicate} complementarity problem")]
    NoSolution { predicate: &'static str },

    /// The first outlet crossing could not be isolated.
    #[error("event localization failure: {0}")]
    EventLocalizationFailure(String),

    /// The extrapolated Zeno accumulation state failed its domain check.
    #[error("zeno projection rejected: {0}")]
    ProjectionRejected(String),

    /// Scenario configuration failed validation.
    #[error("invalid scenario config: field `{field}`: {message}")]
    Validation { field: String, message: String },

    /// Scenario file could not be parsed.
    #[error("scenario parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn validation(field: &str, message: impl Into<String>) -> Self {
        Error::Validation { field: field.into(), message: message.into() }
    }
}
