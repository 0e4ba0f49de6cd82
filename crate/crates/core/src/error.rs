use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{what} {value} out of bounds (allowed {min}..={max})")]
    OutOfBounds {
        what: &'static str,
        value: usize,
        min: usize,
        max: usize,
    },
    #[error("function {0} is not symmetric/antisymmetric at every halving level")]
    NotAdmissible(String),
    #[error("state is not a signed basis state (superposition or entanglement remains)")]
    NotBasisState,
    #[error("state does not factor into single-qubit states")]
    Entangled,
    #[error("malformed input {input:?}: {reason}")]
    Malformed { input: String, reason: String },
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("invalid state: {0}")]
    InvalidState(String),
    #[error("size cap exceeded: {qubits} qubits requested, at most {max} allowed")]
    SizeCap { qubits: usize, max: usize },
    #[error("invalid fault: {0}")]
    InvalidFault(String),
    #[error("invalid gate: {0}")]
    InvalidGate(String),
    #[error("unknown format {0:?} (expected text or csv)")]
    UnknownFormat(String),
}

impl Error {
    /// Short stable name of the error kind, used in CLI diagnostics.
    pub fn name(&self) -> &'static str {
        match self {
            Error::OutOfBounds { .. } => "OutOfBounds",
            Error::NotAdmissible(_) => "NotAdmissible",
            Error::NotBasisState => "NotBasisState",
            Error::Entangled => "Entangled",
            Error::Malformed { .. } => "Malformed",
            Error::LengthMismatch { .. } => "LengthMismatch",
            Error::InvalidState(_) => "InvalidState",
            Error::SizeCap { .. } => "SizeCap",
            Error::InvalidFault(_) => "InvalidFault",
            Error::InvalidGate(_) => "InvalidGate",
            Error::UnknownFormat(_) => "UnknownFormat",
        }
    }

    pub(crate) fn malformed(input: &str, reason: impl Into<String>) -> Self {
        Error::Malformed {
            input: input.to_string(),
            reason: reason.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
