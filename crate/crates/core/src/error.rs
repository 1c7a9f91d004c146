use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("weight k = {k} is out of range (requires k >= {min})")]
    WeightOutOfRange { k: u32, min: u32 },

    #[error("level {0} is even; an odd square-free level is required")]
    EvenLevel(u64),

    #[error("level {level} is not square-free: {prime}^2 divides it")]
    NotSquareFree { level: u64, prime: u64 },

    #[error("level must be at least 3, got {0}")]
    LevelTooSmall(u64),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("p = {0} is even; an odd prime is required")]
    EvenPrime(u64),

    #[error("irrep index {0} is out of range 1..=17")]
    IndexOutOfRange(usize),

    /// The requested value has no closed form here and is outside the embedded table.
    #[error(
        "dim S_{k}(Gamma_0({level})) is not tabulated: no explicit formula is available for this \
         family, only weight 1 (all levels, dimension 0) and weight 4 at p in {{2,3,5,7,11,13}} \
         are known (see the provenance notes in the `dims` module)"
    )]
    NotTabulated { k: u32, level: u64 },

    #[error("decomposition enumeration aborted after {cap} solutions")]
    TooManySolutions { cap: usize },

    #[error("target {0} is too large to enumerate")]
    TargetTooLarge(String),

    #[error("invalid range: {0}")]
    InvalidRange(String),

    /// A formula that must produce an integer produced a proper fraction.
    /// This always indicates a defect in the formula data or evaluation.
    #[error("integrality failure in {context}: value {value} is not an integer")]
    IntegralityFailure { context: String, value: String },
}

impl Error {
    /// True for failures of internal consistency as opposed to bad input.
    pub fn is_integrity_failure(&self) -> bool {
        matches!(self, Error::IntegralityFailure { .. })
    }
}
