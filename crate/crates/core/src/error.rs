use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{op}: argument outside the domain ({detail})")]
    Domain { op: &'static str, detail: String },

    #[error("{op}: resource cap exceeded ({detail})")]
    Resource { op: &'static str, detail: String },

    #[error("{op}: tolerance {requested:e} unreachable, best achievable {achievable:e}")]
    Tolerance { op: &'static str, requested: f64, achievable: f64 },

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),

    #[error("cannot parse `{input}`: {reason}")]
    Parse { input: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(op: &'static str, detail: impl Into<String>) -> Error {
    Error::Domain { op, detail: detail.into() }
}

pub(crate) fn resource(op: &'static str, detail: impl Into<String>) -> Error {
    Error::Resource { op, detail: detail.into() }
}
