//! Error types shared across the crate.

use std::fmt;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong while evaluating gammas, G-functions,
/// quadratures, or series.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Gamma argument is a non-positive integer (within `1e-14` absolute).
    PoleAtNonPositiveInteger { re: f64, im: f64 },
    /// A rising-factorial product left the finite `f64` range.
    OverflowToInfinity { base: f64, index: u32 },
    /// An argument violated a domain precondition (`alpha <= 0`, `S <= 0`, ...).
    Domain(String),
    /// G-function parameter block admits no valid contour, or a difference
    /// `a_k - b1` is a positive integer.
    InvalidParameters(String),
    /// The G-function is undefined at `z = 0`.
    ZeroArgument,
    /// Two independent evaluation routes differ by more than ten times their
    /// combined error estimates.
    MethodDisagreement {
        contour: f64,
        series: f64,
        combined_est: f64,
    },
    /// Flipped lower parameters are congruent modulo 1, so the residue series
    /// would hit higher-order poles.
    CoincidentPoles,
    /// A summation or quadrature hit its work cap before meeting tolerance.
    /// Carries the best value obtained and its error estimate.
    ToleranceNotReached { best: f64, abs_err_est: f64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::PoleAtNonPositiveInteger { re, im } => {
                write!(f, "gamma pole at non-positive integer: {re}+{im}i")
            }
            Error::OverflowToInfinity { base, index } => {
                write!(f, "pochhammer ({base})_{index} overflowed to infinity")
            }
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::InvalidParameters(msg) => write!(f, "invalid G parameters: {msg}"),
            Error::ZeroArgument => write!(f, "G-function argument must be nonzero"),
            Error::MethodDisagreement {
                contour,
                series,
                combined_est,
            } => write!(
                f,
                "contour ({contour}) and residue series ({series}) disagree beyond 10x combined estimate ({combined_est})"
            ),
            Error::CoincidentPoles => {
                write!(f, "flipped lower parameters congruent mod 1: residue poles not simple")
            }
            Error::ToleranceNotReached { best, abs_err_est } => {
                write!(f, "tolerance not reached: best {best} +/- {abs_err_est}")
            }
        }
    }
}

impl std::error::Error for Error {}
