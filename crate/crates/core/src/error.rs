use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("series is not invertible: constant term is zero")]
    NotInvertible,

    #[error("rational power requires constant term 1 and leading exponent 0")]
    NotUnitSeries,

    #[error("cannot add series whose leading exponents {0} and {1} differ by a non-integer")]
    IncompatibleExponents(String, String),

    #[error("invalid minimal model (p, q) = ({p}, {q}): {reason}")]
    InvalidModel { p: i64, q: i64, reason: &'static str },

    #[error("Kac indices (r, s) = ({r}, {s}) out of range for (p, q) = ({p}, {q})")]
    KacIndexOutOfRange { p: i64, q: i64, r: i64, s: i64 },

    #[error("tau must have positive imaginary part, got {0}")]
    NonPositiveImaginary(f64),

    #[error("tau = {re} + {im}i is outside the admissible region |q|, |q~| <= exp(-pi/2)")]
    TauOutsideRegion { re: f64, im: f64 },

    #[error("argument must be at least 1, got {0}")]
    ZeroArgument(u64),

    #[error("coefficient at index {0} is not positive")]
    NonPositiveCoefficient(usize),

    #[error("degenerate fit window {start}..={end}: {reason}")]
    DegenerateWindow { start: usize, end: usize, reason: &'static str },

    #[error("exponent must be positive, got {0}")]
    NonPositiveExponent(String),

    #[error("central charge {0} is not below 1")]
    CentralChargeTooLarge(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("{0}")]
    Io(String),
}

impl Error {
    /// Errors caused by bad input rather than a defect in this crate.
    pub fn is_usage(&self) -> bool {
        !matches!(self, Error::Io(_))
    }
}
