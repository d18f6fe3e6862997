use thiserror::Error;

/// Errors produced by the numeric routines in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("domain error in {op}: {detail}")]
    Domain { op: &'static str, detail: String },

    #[error("index {index} out of range 0..{bound} in {op}")]
    IndexOutOfRange {
        op: &'static str,
        index: u64,
        bound: u64,
    },

    #[error("correction rule `{0}` has no closed-form denominator")]
    UnsupportedRule(&'static str),

    #[error("insufficient data: {0}")]
    InsufficientData(String),

    #[error("singular endpoint x = {0}")]
    SingularEndpoint(String),

    #[error("unknown {kind} `{name}`")]
    Unknown { kind: &'static str, name: String },

    #[error("cannot parse `{0}` as a decimal number")]
    Parse(String),

    #[error("malformed record: {0}")]
    Record(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain(op: &'static str, detail: impl Into<String>) -> Error {
    Error::Domain {
        op,
        detail: detail.into(),
    }
}
