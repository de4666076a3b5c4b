use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain violation in `{subexpr}`")]
    DomainViolation { subexpr: String },

    #[error("no certified sign change on [{lo}, {hi}]")]
    BracketError { lo: String, hi: String },

    #[error("tail bound {tail} at X = {threshold} exceeds the scanned maximum {scan}")]
    TailError {
        threshold: String,
        tail: String,
        scan: String,
    },

    #[error("requested {requested} terms but the cap is {cap}")]
    CapExceeded { requested: u64, cap: u64 },

    #[error("usage error: {0}")]
    UsageError(String),

    #[error("certificate `{name}` failed: {detail}")]
    CertificateFailure { name: String, detail: String },

    #[error("unbound variable `{0}`")]
    UnboundVariable(String),

    #[error("parse error at byte {pos}: {message}")]
    Parse { pos: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(subexpr: impl Into<String>) -> Error {
    Error::DomainViolation {
        subexpr: subexpr.into(),
    }
}

pub(crate) fn usage(msg: impl Into<String>) -> Error {
    Error::UsageError(msg.into())
}
