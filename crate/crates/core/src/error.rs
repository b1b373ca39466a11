use thiserror::Error;

/// Errors raised by the library operations.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("{0} is not a fundamental discriminant")]
    NotFundamental(i64),

    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("no fundamental discriminant with {lo} < |d| <= {hi}")]
    EmptyWindow { lo: u64, hi: u64 },

    #[error("degenerate fit: {surviving} usable point(s), at least 3 required")]
    DegenerateFit { surviving: usize },

    #[error("resonator vanishes on every discriminant of the window (M1 = 0)")]
    DegenerateResonator,
}

impl Error {
    pub(crate) fn invalid(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            reason: reason.into(),
        }
    }

    /// True for errors caused by data (empty windows, degenerate fits) rather
    /// than by malformed parameters.
    pub fn is_data_error(&self) -> bool {
        matches!(
            self,
            Error::EmptyWindow { .. } | Error::DegenerateFit { .. } | Error::DegenerateResonator
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
