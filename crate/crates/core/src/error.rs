use thiserror::Error;

use crate::core::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid structure: {0}")]
    Invalid(#[from] Violation),
    #[error("cannot compose: {0}")]
    Mismatch(String),
    #[error("unknown element `{label}` in {sort}")]
    UnknownElement { sort: &'static str, label: String },
    #[error("malformed label `{label}`: {reason}")]
    Label { label: String, reason: String },
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("size guard: {what} needs {needed}, cap is {cap}")]
    SizeGuard { what: &'static str, needed: u64, cap: u64 },
    #[error("not a multigraph: edge `{0}` has {1} endpoints")]
    NotMultigraph(String, usize),
    #[error("parity mismatch: {0}")]
    Parity(String),
    #[error("{0}")]
    Input(String),
}
