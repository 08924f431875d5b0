use thiserror::Error;

/// Error type shared by every module in the crate.
///
/// The CLI maps these onto process exit codes: input problems (`Io`,
/// `Format`, `Validation`, `Parse`) exit 1, violated theorems or contracts
/// exit 2, and blown caps exit 3.
#[derive(Debug, Error)]
pub enum Error {
    #[error("closure exceeded the cap of {0} elements")]
    CapExceeded(usize),

    #[error("completion did not stabilize within {0} rounds")]
    RoundCapExceeded(usize),

    #[error("filter generator routes disagree: {0}")]
    GeneratorMismatch(String),

    #[error("theorem check failed [{part}]: {detail}")]
    TheoremViolation { part: &'static str, detail: String },

    #[error("contract violated: {0}")]
    ContractViolation(String),

    #[error("extension is not well defined: {0}")]
    NotWellDefined(String),

    #[error("expected the least dense element {expected}, got {given}")]
    DeltaMismatch { expected: usize, given: usize },

    #[error("KM axiom failed: {0}")]
    AxiomViolation(String),

    #[error("variable sets do not line up: {0}")]
    ArityMismatch(String),

    #[error("valuation does not cover variable p{0}")]
    MissingVariable(u32),

    #[error("operation is undefined on the one-element algebra")]
    Degenerate,

    #[error("map leaves its index domain: {0}")]
    DomainError(String),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("i/o: {0}")]
    Io(String),

    #[error("bad input format: {0}")]
    Format(String),

    #[error("input is not a Heyting algebra: {0}")]
    Validation(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Exit code the command line front end should use for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::CapExceeded(_) | Error::RoundCapExceeded(_) => 3,
            Error::Io(_) | Error::Format(_) | Error::Validation(_) | Error::Parse { .. } => 1,
            _ => 2,
        }
    }
}
