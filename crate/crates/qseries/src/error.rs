use thiserror::Error;

/// Errors surfaced by the exact engines.
#[derive(Debug, Error)]
pub enum QSeriesError {
    /// A table was requested with a rank window too small to hold every
    /// nonzero entry (`m_max < n_max` cannot guarantee complete rows).
    #[error("rank window m_max={m_max} is smaller than n_max={n_max}; rows would be clipped")]
    TruncationTooSmall { m_max: usize, n_max: usize },
    /// Brute-force enumeration is exponential and refuses sizes above 25.
    #[error("brute-force enumeration limited to n <= 25, got {0}")]
    SizeLimit(usize),
    /// Series inversion needs an invertible leading coefficient.
    #[error("cannot invert series: leading coefficient is not a unit")]
    NonUnitLeading,
    /// Addition of series whose offsets differ by a non-integer.
    #[error("incompatible q-offsets: {0}/24 vs {1}/24 differ by a non-integer")]
    OffsetMismatch(i64, i64),
}
