use thiserror::Error;

/// Errors surfaced by the word-family operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rational parameter {input:?}: {reason}")]
    InvalidParameter { input: String, reason: String },

    #[error("invalid word {input:?}: only '0' and '1' are allowed")]
    InvalidWord { input: String },

    #[error(
        "block #{index} (0^{zeros} 1^{ones}) violates {zeros}*{c} > {ones}*{d} for q = {c}/{d}"
    )]
    NotAMember {
        index: usize,
        zeros: usize,
        ones: usize,
        c: u64,
        d: u64,
    },

    #[error("length {n} exceeds the brute-force cap {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("words must share one length, found {left} and {right}")]
    MixedLengths { left: usize, right: usize },

    #[error("series inverse requires constant term 1, found {found}")]
    NonUnitConstantTerm { found: String },
}

pub type Result<T> = std::result::Result<T, Error>;
