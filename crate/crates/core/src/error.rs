use thiserror::Error;

/// Errors raised by the algebra and graph layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("edge {{{0}, {1}}} is not present")]
    EdgeNotPresent(usize, usize),
    #[error("edge {{{0}, {1}}} is already present")]
    EdgeAlreadyPresent(usize, usize),
    #[error("graph has no edges")]
    EmptyEdgeSet,
    #[error("invalid field characteristic {0}: {1}")]
    InvalidCharacteristic(u32, &'static str),
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("too many variables ({0}); at most {max} supported", max = crate::poly::MAX_VARS)]
    TooManyVariables(usize),
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
    #[error("exact division failed")]
    DivisionFailure,
    #[error("computation budget exceeded")]
    BudgetExceeded,
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("power t = {0} is out of range")]
    PowerOutOfRange(i64),
    #[error("class is outside the almost complete intersection families")]
    ClassOutOfScope,
    #[error("structure witness not found: {0}")]
    WitnessNotFound(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
}

pub type Result<T> = std::result::Result<T, Error>;
