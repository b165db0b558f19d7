//! Crate-wide error type.

use thiserror::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong when building or applying rules.
#[derive(Debug, Error)]
pub enum Error {
    /// The crate implements dimensions 2 and 3 only.
    #[error("unsupported dimension {0} (supported: 2 and 3)")]
    UnsupportedDimension(usize),

    /// Scale parameter below the smallest value for which the object exists.
    #[error("scale n = {n} out of range for {what} (requires n >= {min})")]
    ScaleOutOfRange {
        what: &'static str,
        n: i64,
        min: i64,
    },

    /// An index was required to belong to a specific finite index set.
    #[error("index {index} lies outside {set}")]
    OutsideIndexSet { index: String, set: String },

    /// Algebraic coordinates and Chebyshev arguments must lie in [-1, 1].
    #[error("coordinate {value} outside the algebraic domain [-1, 1]")]
    OutsideDomain { value: f64 },

    /// Point coordinates must be finite.
    #[error("non-finite coordinate {value}")]
    NonFiniteCoordinate { value: f64 },

    /// The inverse index maps are defined only on matching-parity indices.
    #[error("index {index} is not in the image of the index map (parity mismatch)")]
    ParityMismatch { index: String },

    /// Homogeneous coordinates must sum to zero.
    #[error("homogeneous coordinates sum to {sum:e}, expected |sum| <= {tol:e}")]
    NotHomogeneous { sum: f64, tol: f64 },

    /// The integrand returned NaN or an infinity at a cubature node.
    #[error("integrand returned non-finite value {value} at node #{node} = {point}")]
    NonFiniteSample {
        node: usize,
        point: String,
        value: f64,
    },

    /// Interpolation samples must be keyed by exactly the node index set.
    #[error("sample keys do not match the node set: {detail}")]
    SampleKeyMismatch { detail: String },

    /// A rule document, sample file, or probe file failed validation.
    #[error("malformed {kind}: {detail}")]
    Malformed { kind: &'static str, detail: String },

    /// Invalid command-line argument or argument combination.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}
