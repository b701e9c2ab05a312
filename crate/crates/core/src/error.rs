use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Input outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A model or polynomial with vanishing discriminant.
    #[error("singular model: {0}")]
    Singular(String),

    /// A numerical routine did not reach the requested accuracy.
    #[error("precision error: {what} (working precision {prec} bits): {detail}")]
    Precision {
        what: String,
        prec: u32,
        detail: String,
    },

    /// The request exceeds a documented desk-scale cap.
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// A resource cap (factorisation size, iteration budget) was exceeded.
    #[error("resource limit: {0}")]
    Resource(String),

    /// Imaginary part too badly conditioned for a truncated theta sum.
    #[error("conditioning error: smallest eigenvalue of Im(tau) is {lambda_min:e}")]
    Conditioning { lambda_min: f64 },

    #[error("reduction did not terminate after {0} steps")]
    Reduction(usize),
}

impl Error {
    pub(crate) fn precision(what: impl Into<String>, prec: u32, detail: impl Into<String>) -> Self {
        Error::Precision {
            what: what.into(),
            prec,
            detail: detail.into(),
        }
    }
}
