use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension {dim} is not supported here (exact polyhedral support stops at d = {max})")]
    DimensionUnsupported { dim: usize, max: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("a monoid needs at least one generator")]
    EmptyGenerators,

    #[error("the zero vector is not a valid monoid generator")]
    ZeroGenerator,

    #[error("monoid is not pointed: its real cone contains a line, so it has nontrivial units")]
    NotPointed,

    #[error("generators do not generate the full lattice Z^d as a group")]
    NotGroupGenerating,

    #[error("weight is not strictly interior to the dual cone")]
    WeightNotInterior,

    #[error("weight is not generic: {first} and {second} tie at the minimal weight of coset {coset:?}")]
    WeightNotGeneric {
        coset: Vec<u64>,
        first: String,
        second: String,
    },

    #[error("no generic weight found after {tries} deterministic candidates")]
    GenericWeightSearchFailed { tries: usize },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("uncertified input: {0}")]
    UncertifiedInput(String),

    #[error("polynomial has a constant term; the splitting test needs f inside the maximal ideal")]
    ConstantTermPresent,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid input: {0}")]
    Validation(String),

    #[error("computation exceeds configured limits: {0}")]
    ResourceLimit(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
