use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {offset} near `{token}`: {message}")]
    Syntax {
        offset: usize,
        token: String,
        message: String,
    },

    #[error("unknown keyword `{keyword}` at byte {offset}")]
    UnknownKeyword { keyword: String, offset: usize },

    #[error("invalid name `{0}`")]
    InvalidName(String),

    #[error("dialect violation in axiom {axiom}: {rule}")]
    Dialect { axiom: usize, rule: String },

    #[error("query violates dialect grammar: {0}")]
    QueryDialect(String),

    #[error("TBox is incoherent: the empty ABox is already inconsistent")]
    IncoherentTbox,

    #[error("observation must be an atomic BIQ")]
    NonAtomicObservation,

    #[error("not an abduction problem: the knowledge base is consistent")]
    ConsistentKb,

    #[error("not an abduction problem: the observation is already {0}-entailed")]
    AlreadyEntailed(&'static str),

    #[error("semantics `{0}` is not available here")]
    UnsupportedSemantics(&'static str),

    #[error("criterion `{0}` needs a candidate space")]
    MissingCandidateSpace(&'static str),

    #[error("more than {cap} repairs")]
    RepairOverflow { cap: usize },

    #[error("budget exceeded: {what} needs {needed}, cap is {cap}")]
    Budget {
        what: &'static str,
        needed: u128,
        cap: u128,
    },

    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    /// True for resource-guard failures (as opposed to invalid input).
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::RepairOverflow { .. } | Error::Budget { .. })
    }

    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }

    /// Stable machine-readable tag.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Syntax { .. } => "syntax",
            Error::UnknownKeyword { .. } => "unknown-keyword",
            Error::InvalidName(_) => "invalid-name",
            Error::Dialect { .. } => "dialect",
            Error::QueryDialect(_) => "query-dialect",
            Error::IncoherentTbox => "incoherent-tbox",
            Error::NonAtomicObservation => "non-atomic-observation",
            Error::ConsistentKb => "promise-consistent-kb",
            Error::AlreadyEntailed(_) => "promise-already-entailed",
            Error::UnsupportedSemantics(_) => "unsupported-semantics",
            Error::MissingCandidateSpace(_) => "missing-candidate-space",
            Error::RepairOverflow { .. } => "repair-overflow",
            Error::Budget { .. } => "budget",
            Error::Internal(_) => "internal",
        }
    }
}
