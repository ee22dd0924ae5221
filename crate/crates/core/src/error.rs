use thiserror::Error;

/// Errors raised by the library. Each variant maps to a stable code via [`Error::code`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at `{token}`: {message}")]
    Parse { token: String, message: String },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("n must be at least 1")]
    ZeroSize,

    #[error("partition {0} is trivial; the predicate is defined for nontrivial partitions only")]
    TrivialPartition(String),

    #[error("partition {partition} is not {required}")]
    Parity {
        partition: String,
        required: &'static str,
    },

    #[error("signature undefined for flavor {0}")]
    SignatureUndefined(&'static str),

    #[error("invalid fine partition: {0}")]
    InvalidFine(String),

    #[error("invalid form {form}: {constraint}")]
    InvalidForm { form: String, constraint: String },

    #[error("{0} is a low-rank form accepted for oracle use only")]
    LowRank(String),

    #[error("{0} is exceptional; use the exceptional module")]
    ExceptionalForm(String),

    #[error("{0} is classical; exceptional tables cover only the twelve exceptional forms")]
    ClassicalForm(String),

    #[error("{0}: compactness defined for real forms only; compose type-(b) verdicts instead")]
    ComplexFamily(String),

    #[error("label {label} is not admissible for {form}: {reason}")]
    Inadmissible {
        form: String,
        label: String,
        reason: String,
    },

    #[error("empty list")]
    EmptyList,

    #[error("no invariant form of this kind ({kind} on S_{d} over {domain})")]
    AbsentForm {
        kind: &'static str,
        d: usize,
        domain: &'static str,
    },

    #[error("bracket relations violated: {0}")]
    Bracket(String),

    #[error("data integrity: {form} row {row}: {message}")]
    DataIntegrity {
        form: String,
        row: usize,
        message: String,
    },

    #[error("internal consistency: {0}")]
    Internal(String),
}

impl Error {
    /// Machine-readable code, distinct per variant.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Parse { .. } => "parse",
            Error::InvalidPartition(_) => "invalid_partition",
            Error::ZeroSize => "zero_size",
            Error::TrivialPartition(_) => "trivial_partition",
            Error::Parity { .. } => "parity",
            Error::SignatureUndefined(_) => "signature_undefined",
            Error::InvalidFine(_) => "invalid_fine",
            Error::InvalidForm { .. } => "invalid_form",
            Error::LowRank(_) => "low_rank_form",
            Error::ExceptionalForm(_) => "exceptional_form",
            Error::ClassicalForm(_) => "classical_form",
            Error::ComplexFamily(_) => "complex_family",
            Error::Inadmissible { .. } => "inadmissible_label",
            Error::EmptyList => "empty_list",
            Error::AbsentForm { .. } => "absent_form",
            Error::Bracket(_) => "bracket_violation",
            Error::DataIntegrity { .. } => "data_integrity",
            Error::Internal(_) => "internal",
        }
    }

    pub(crate) fn parse(token: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            token: token.into(),
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
