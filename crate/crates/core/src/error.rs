use thiserror::Error;

/// Errors surfaced by space construction, queries and searches.
#[derive(Debug, Error)]
pub enum Error {
    #[error("mismatched carriers: {0}")]
    FrameMismatch(String),

    #[error("unknown point '{0}'")]
    UnknownPoint(String),

    #[error("unknown parameter '{0}'")]
    UnknownParameter(String),

    #[error("{what} is not contained in the carrier")]
    NotWithinCarrier { what: String },

    #[error("basis member {index} is not contained in the carrier")]
    BasisEscapesCarrier { index: usize },

    #[error("family is not union-closed: union of members {left} and {right} is missing")]
    NotUnionClosed { left: usize, right: usize },

    #[error("space is not strong: the carrier is not open")]
    NotStrong,

    #[error("cover member {index} is not open")]
    NonOpenMember { index: usize },

    #[error("cover misses point '{point}' at parameter '{param}'")]
    Uncovered { param: String, point: String },

    #[error("family member {index} is not regular closed")]
    NotRegularClosed { index: usize },

    #[error("family does not cover the space: point {0} is uncovered")]
    GroundUncovered(String),

    #[error("space is not a \u{3bc}-space: the whole universe is not open")]
    NotMuSpace,

    #[error("exact search threshold exceeded: {size} sets (limit {limit})")]
    ThresholdExceeded { size: usize, limit: usize },

    #[error("generated family too large: more than {limit} opens")]
    TooLarge { limit: usize },

    #[error("size index {n} outside supported range (min {min})")]
    OutOfRange { n: u32, min: u32 },

    #[error("certification failed at n={n}: {detail}")]
    Certification { n: u32, detail: String },

    #[error("duplicate identifier '{0}'")]
    DuplicateName(String),

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
