//! Error type shared by all modules.

use std::path::PathBuf;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("cannot open {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),

    #[error("column {0:?} not found in header")]
    MissingColumn(String),

    #[error("line {line}: cannot parse {value:?} in column {column:?} as a finite number")]
    BadCell {
        line: u64,
        column: String,
        value: String,
    },

    #[error("line {line}: cannot parse {value:?} as a timestamp (RFC 3339 or epoch seconds)")]
    BadTimestamp { line: u64, value: String },

    #[error("timestamps not strictly increasing at row {index}")]
    TimestampOrder { index: usize },

    #[error("values/timestamps length mismatch: {values} vs {timestamps}")]
    LengthMismatch { values: usize, timestamps: usize },

    #[error("no data rows")]
    EmptyInput,

    #[error("series is empty")]
    EmptySeries,

    #[error("series has no timestamps")]
    MissingTimestamps,

    #[error("no samples fall inside the night window")]
    NoNightSamples,

    #[error("series is constant: {0}")]
    ConstantSeries(&'static str),

    #[error("series too short: {needed} samples needed for tau={tau}, dim={dim}, got {n}")]
    SeriesTooShort {
        n: usize,
        needed: usize,
        tau: usize,
        dim: usize,
    },

    #[error("need at least 2 phase-space vectors, got {0}")]
    TooFewVectors(usize),

    #[error("mutual-information curve needs at least 3 lags, got {0}")]
    CurveTooShort(usize),

    #[error("Cao curves are empty")]
    EmptyCurves,

    #[error("all neighbours of vector {index} coincide with it exactly")]
    DegenerateNeighbors { index: usize },

    #[error("all off-band distances are identical; radius grid is degenerate")]
    DegenerateGrid,

    #[error("degenerate sweep: {0}")]
    DegenerateSweep(String),

    #[error("need at least 2 segments, got {0}")]
    TooFewSegments(usize),

    #[error("non-finite state at integration step {step}")]
    NumericalBlowup { step: usize },

    #[error("invalid parameter: {0}")]
    BadParameter(String),
}
