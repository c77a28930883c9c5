use std::path::PathBuf;

use thiserror::Error;

use crate::geom::Point2;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("non-finite coordinate in {0:?}")]
    NonFinite(Point2),

    #[error("alpha must be positive and finite, got {0}")]
    InvalidAlpha(f64),

    #[error("coincident points: {a:?} and {b:?}")]
    CoincidentPoints { a: Point2, b: Point2 },

    #[error("chord length {length} exceeds 2 * alpha = {}", 2.0 * alpha)]
    ChordTooLong { length: f64, alpha: f64 },

    #[error("cap height {h} outside [0, {}]", 2.0 * alpha)]
    CapHeightOutOfRange { alpha: f64, h: f64 },

    #[error("zero-length direction")]
    ZeroDirection,

    #[error("duplicate sample points at indices {i} and {j}")]
    DuplicatePoints { i: usize, j: usize },

    #[error("at least {required} points required, got {got}")]
    TooFewPoints { required: usize, got: usize },

    #[error("pair ({i}, {j}) has neither circumscribing disk empty")]
    NotAnAlphaEdge { i: usize, j: usize },

    #[error("invalid domain: {0}")]
    InvalidDomain(String),

    #[error("cannot parse domain spec {spec:?}: {reason}")]
    DomainSpec { spec: String, reason: String },

    #[error("projection of {0:?} onto the boundary is ambiguous")]
    AmbiguousProjection(Point2),

    #[error("edge ({i}, {j}): {source}")]
    EdgeProbe {
        i: usize,
        j: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("shape has no edges")]
    EmptyShape,

    #[error("invalid experiment config: {0}")]
    InvalidConfig(String),

    #[error("replicate failed at n={n}, alpha={alpha}, m={replicate}: {source}")]
    Replicate {
        n: usize,
        alpha: f64,
        replicate: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("need at least {required} sample sizes for alpha={alpha}, got {got}")]
    TooFewSizes {
        alpha: f64,
        required: usize,
        got: usize,
    },

    #[error("non-positive statistic {value} at n={n}, alpha={alpha}")]
    NonPositiveStatistic { n: usize, alpha: f64, value: f64 },

    #[error("zero variance in input values")]
    ZeroVariance,

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("config parse error: {0}")]
    ConfigParse(String),
}
