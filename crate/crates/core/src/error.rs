use thiserror::Error;

/// Errors raised by the library. Verifiers never return these for a failed
/// check; a failed check is recorded in the report instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("letter {letter} is outside the alphabet [1, {size}]")]
    LetterOutOfRange { letter: usize, size: usize },

    #[error("alphabet size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("invalid input: {0}")]
    Input(String),

    #[error("precondition not met: {0}")]
    Domain(String),

    #[error("{what}: size {size} exceeds the supported maximum of {cap}")]
    TooLarge {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
