use thiserror::Error;

/// Errors produced by graph construction, parsing and the structural checks.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("duplicate vertex label `{0}`")]
    DuplicateVertex(String),

    #[error("vertex `{0}` is not in the independent set")]
    NotIndependent(String),

    #[error("expected two distinct vertices, got `{0}` twice")]
    SameVertex(String),

    #[error("edge {0}-{1} joins two independent-set vertices")]
    IndependentEdge(String, String),

    #[error("self-loop on `{0}`")]
    Loop(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid 2-switch: {0}")]
    InvalidMove(String),

    #[error("sequence is not an induced {kind} of the factor graph: {reason}")]
    NotInduced { kind: &'static str, reason: String },

    #[error("exhaustive corpus with |K|={k}, |I|={i} exceeds the 2^20 instance budget")]
    CorpusBudget { k: usize, i: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
