use thiserror::Error;

/// Errors shared across the pipeline.
#[derive(Debug, Error)]
pub enum Error {
    #[error("enumeration limit exceeded (limit {0})")]
    LimitExceeded(usize),
    #[error("element is not a member of the group")]
    NotAMember,
    #[error("not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("value is not an algebraic integer")]
    NotIntegral,
    #[error("central character is not integral (corrupt table): character {chi}, class {class}")]
    IntegralityViolation { chi: usize, class: usize },
    #[error("eigenspace splitting failed for all candidate primes")]
    SplitFailure,
    #[error("schema error: {0}")]
    SchemaError(String),
    #[error("table validation failed: {0}")]
    ValidationError(String),
    #[error("partition size mismatch: |lambda| = {0}, |mu| = {1}")]
    SizeMismatch(usize, usize),
    #[error("e = {e} does not divide p^d - 1 = {pd1}")]
    NonDivisor { e: u64, pd1: u64 },
    #[error("no defect class found (pipeline bug)")]
    NoDefectClass,
    #[error("no root block found under the Brauer correspondence (pipeline bug)")]
    NoRootFound,
    #[error("Dade verification mismatch: pipeline k(B) = {pipeline}, predicted = {predicted}")]
    Mismatch { pipeline: u64, predicted: u64 },
    #[error("unknown group spec: {0}")]
    UnknownGroup(String),
    #[error("{stage}: {source}")]
    Stage {
        stage: &'static str,
        #[source]
        source: Box<Error>,
    },
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn stage(self, stage: &'static str) -> Error {
        Error::Stage {
            stage,
            source: Box::new(self),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
