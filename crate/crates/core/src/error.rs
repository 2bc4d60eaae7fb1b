//! Crate-wide error type.

use std::fmt;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Invalid or inconsistent configuration.
    Config(String),
    /// An operand has the wrong bit width.
    WidthMismatch { what: &'static str, expected: usize, got: usize },
    /// Enumerating 2^n strings would exceed the configured ceiling.
    EnumerationCeiling { n: u32, ceiling: u32 },
    /// The slice B^=n is empty; there is nothing to compress.
    EmptySlice { n: u32 },
    /// Greedy design construction ran out of candidates.
    DesignExhausted { built: u64, requested: u64 },
    /// No feasible gadget parameters at the requested thresholds.
    CalibrationFailed(String),
    /// Malformed serialized data.
    Decode(String),
    /// A record was presented against a different set spec.
    SpecHashMismatch { record: String, slice: String },
    /// An exact re-check contradicted a certification; something is corrupt.
    CertificationInconsistency(String),
    /// Direct seed search gave up within the configured budget.
    FallbackExhausted { budget: u64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Config(msg) => write!(f, "configuration error: {msg}"),
            Error::WidthMismatch { what, expected, got } => {
                write!(f, "{what}: expected {expected} bits, got {got}")
            }
            Error::EnumerationCeiling { n, ceiling } => {
                write!(f, "n = {n} exceeds the enumeration ceiling {ceiling}")
            }
            Error::EmptySlice { n } => write!(f, "the set has no members of length {n}"),
            Error::DesignExhausted { built, requested } => {
                write!(f, "greedy design exhausted after {built} of {requested} sets")
            }
            Error::CalibrationFailed(msg) => write!(f, "gadget calibration failed: {msg}"),
            Error::Decode(msg) => write!(f, "decode error: {msg}"),
            Error::SpecHashMismatch { record, slice } => {
                write!(f, "record was built for set {record}, not {slice}")
            }
            Error::CertificationInconsistency(msg) => {
                write!(f, "certification inconsistency: {msg}")
            }
            Error::FallbackExhausted { budget } => {
                write!(f, "no balanced seed found within fallback budget {budget}")
            }
        }
    }
}

impl std::error::Error for Error {}
