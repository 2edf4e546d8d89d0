use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty input")]
    EmptyInput,
    #[error("invalid symbol {found:?} at position {position}")]
    InvalidSymbol { position: usize, found: char },
    #[error("malformed partition text: {0}")]
    MalformedPartition(String),
    #[error("string has no separator symbol; partition form is undefined")]
    DegeneratePartition,
    #[error("invalid cut triple ({i}, {j}, {k}) for length {n}")]
    InvalidTriple { i: usize, j: usize, k: usize, n: usize },
    #[error("representative is not a rotation of the string")]
    NotARotation,
    #[error("length {n} is too short: at least {min} symbols are required")]
    TooShort { n: usize, min: usize },
    #[error("length {n} exceeds the exhaustive search limit of {max}")]
    TooLong { n: usize, max: usize },
    #[error("strings differ in length or symbol counts; distance is undefined")]
    Incompatible,
    #[error("partitions differ in part count or total weight")]
    MismatchedPartitions,
    #[error("at least {min} parts are required, got {k}")]
    TooFewParts { k: usize, min: usize },
    #[error("precondition not met: {0}")]
    Precondition(&'static str),
    #[error("construction failed: {0}")]
    ConstructionFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
