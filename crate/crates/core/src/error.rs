use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("group closure exceeded the materialization cap of {cap} elements")]
    CapExceeded { cap: usize },
    #[error("operation requires a permutation group of degree 4, got degree {0}")]
    NotDegree4(usize),
    #[error("operation requires a transitive group")]
    NotTransitive,
    #[error("no closed-form braid monodromy is available for label {0}")]
    UnsupportedLabel(String),
    #[error("unknown lemma id {0}")]
    UnknownLemma(String),
    #[error("braid does not preserve the solution set")]
    IncompatibleBraid,
    #[error("truncation order {0} too small to decide the computation")]
    TruncationTooSmall(u32),
    #[error("curve does not pass through the origin")]
    NotAtOrigin,
    #[error("computation leaves the coefficient field Q(sqrt(-3), i): {0}")]
    UnsupportedCoefficientField(String),
    #[error("dataset degrees inconsistent: sum of delta*e exceeds the local degree")]
    InconsistentDegrees,
    #[error("bad family parameters: {0}")]
    BadParams(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("two non-alias labels match the same invariant: {0} and {1}")]
    AmbiguousLabel(String, String),
}

pub type Result<T> = std::result::Result<T, Error>;
