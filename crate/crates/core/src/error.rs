use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("column weight γ = 2 is not supported: every pattern needs CNs of degree ≥ 3 to reach a (4, 4(γ-2)) object with detrimental degree-1 checks, use γ ≥ 3")]
    GammaTwo,
    #[error("invalid code parameters: {0}")]
    InvalidParams(String),
    #[error("distribution mass {got} differs from κ = {expected}")]
    DistributionMass { expected: usize, got: usize },
    #[error("invalid column type {0:?}")]
    InvalidColumnType(Vec<u8>),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid cutting vector: {0}")]
    InvalidCuttingVector(String),
    #[error("pattern P{pattern} has no case {case}")]
    UnknownCase { pattern: u8, case: String },
    #[error("case {case} of P{pattern} expects {expected} arguments, got {got}")]
    CaseArity { pattern: u8, case: String, expected: usize, got: usize },
    #[error("unknown pattern P{0}")]
    UnknownPattern(u8),
    #[error("span k = {k} outside 1..={max} for P{pattern}")]
    SpanOutOfRange { pattern: u8, k: usize, max: usize },
    #[error("P{pattern} closed form needs L ≥ {required}, got L = {l}; use the brute-force census")]
    BelowThreshold { pattern: u8, l: usize, required: usize },
    #[error("{what}: size {size} exceeds guard {guard}; raise the guard or switch to local search")]
    GuardExceeded { what: String, size: u128, guard: u128 },
    #[error("circulant powers create 4-cycles in the lifted graph")]
    Girth,
    #[error("(4,0) detection is defined for γ = 3 only (got γ = {0})")]
    NotGammaThree(usize),
    #[error("configuration error: {0}")]
    Config(String),
    #[error("malformed alist: {0}")]
    Alist(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
