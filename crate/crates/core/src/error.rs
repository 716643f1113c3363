use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScdError {
    #[error("n = {n} is out of range (expected 1..={max})")]
    Range { n: usize, max: usize },

    #[error("invalid word {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    /// A constructed object violates a structural guarantee (partition,
    /// symmetry, ...). Never expected; surfaced loudly when it happens.
    #[error("integrity violation: {0}")]
    Integrity(String),

    #[error("malformed document: {0}")]
    Document(String),
}

pub type Result<T, E = ScdError> = std::result::Result<T, E>;

pub(crate) fn check_range(n: usize, max: usize) -> Result<()> {
    if n == 0 || n > max {
        return Err(ScdError::Range { n, max });
    }
    Ok(())
}
