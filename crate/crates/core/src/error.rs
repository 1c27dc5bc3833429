use thiserror::Error;

/// Errors raised by the algebra engine, the experiment layer and the script front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or inconsistent input: ring mismatch, bad arity, violated precondition.
    #[error("input error: {0}")]
    Input(String),

    /// Lexical or syntax error in a script.
    #[error("{line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    /// The ideal is not zero-dimensional where a finite length was required.
    #[error("not m-primary/zero-dimensional: {0}")]
    NotZeroDimensional(String),

    /// Randomized search exhausted its trials.
    #[error("genericity failure: {0} (enlarge field or trials)")]
    Genericity(String),

    /// A Hilbert-Samuel fit did not stabilize within the sampled range.
    #[error("unstable fit: {0}")]
    Unstable(String),

    /// An iteration cap was hit (saturation, degree bound).
    #[error("limit exceeded: {0}")]
    Limit(String),

    /// I/O failure while reading scripts or writing reports.
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    /// True for failures caused by finite sampling or randomness rather than by the input.
    pub fn is_computational_shortfall(&self) -> bool {
        matches!(
            self,
            Error::Genericity(_) | Error::Unstable(_) | Error::Limit(_)
        )
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
