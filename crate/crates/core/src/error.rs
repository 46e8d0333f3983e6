use std::io;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid binary digit {digit:?} at offset {offset}")]
    InvalidDigit { digit: char, offset: usize },

    #[error("radix must be at least 2, got {0}")]
    InvalidRadix(u64),

    #[error("radix {radix} needs exactly {radix} branches, got {found}")]
    BranchCount { radix: u64, found: usize },

    #[error("branch sign must be -1 or +1, got {0}")]
    InvalidSign(i64),

    #[error("branch offset {0} is out of range")]
    OffsetOutOfRange(i64),

    #[error("config line {line}: {message}")]
    Config { line: usize, message: String },

    #[error("unknown sequence {0:?}")]
    UnknownSequence(String),

    /// An argument outside the domain of the operation.
    #[error("{0}")]
    Domain(String),

    #[error("note pair ({i}, {j}) is not attainable")]
    NotAttainable { i: i64, j: i64 },

    /// A pumped word stayed inside the language. This would contradict the
    /// non-regularity argument, so it is reported rather than skipped.
    #[error("pumping {word} with |u| = {u_len}, |v| = {v_len} stays in L_{note}")]
    PumpingSurvived {
        note: i64,
        word: String,
        u_len: usize,
        v_len: usize,
    },

    #[error("value does not fit in 64 bits: {0}")]
    Overflow(String),

    #[error(transparent)]
    Io(#[from] io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    /// Errors caused by malformed user input rather than by a valid input
    /// falling outside an operation's domain.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::InvalidDigit { .. } | Error::Config { .. } | Error::UnknownSequence(_)
        )
    }
}
