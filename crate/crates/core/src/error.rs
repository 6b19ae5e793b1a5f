use thiserror::Error;

/// Errors produced by the library.
///
/// `InvalidInput` covers everything a caller can fix by passing different
/// arguments; `Numerical` means an internal contract (a tolerance the
/// computation promises to meet) was violated.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: String, actual: String },

    #[error("{name} = {value} is outside {range}")]
    OutOfRange {
        name: &'static str,
        value: f64,
        range: &'static str,
    },

    #[error("matrix is not Hermitian (max |h - h^dagger| = {deviation:e})")]
    NotHermitian { deviation: f64 },

    #[error("matrix is not positive semidefinite (eigenvalue {eigenvalue:e})")]
    NotPositive { eigenvalue: f64 },

    #[error("numerical contract violated: {0}")]
    Numerical(String),
}

impl Error {
    /// True for errors caused by the caller's arguments rather than by the
    /// numerics.
    pub fn is_input_error(&self) -> bool {
        !matches!(self, Error::Numerical(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_range(
    name: &'static str,
    value: f64,
    range: &'static str,
    ok: bool,
) -> Result<f64> {
    if ok && value.is_finite() {
        Ok(value)
    } else {
        Err(Error::OutOfRange { name, value, range })
    }
}
