use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,

    #[error("ring mismatch: [{left}] vs [{right}]")]
    RingMismatch { left: String, right: String },

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("variable `{0}` is not in the ring")]
    UnknownVariable(String),

    #[error("no value assigned to variable `{0}`")]
    MissingAssignment(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unknown lemma `{0}`")]
    UnknownLemma(String),

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
}
