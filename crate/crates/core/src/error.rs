use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown root system type `{0}`")]
    UnknownType(String),
    #[error("type {family} does not exist in rank {rank}")]
    IllegalRank { family: String, rank: usize },
    #[error("simple root index {index} outside 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("index list must be strictly increasing: {0:?}")]
    NotIncreasing(Vec<usize>),
    #[error("vector has length {got}, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("{0} is not a root")]
    NotARoot(String),
    #[error("not a simple system: {0}")]
    InvalidSimpleSystem(String),
    #[error("simple system must be nonempty and connected")]
    NotConnected,
    #[error("standing hypothesis violated: {0}")]
    StandingHypothesis(String),
    #[error("biparabolic is not Frobenius")]
    NotFrobenius,
    #[error("operation requires {0}")]
    Unsupported(String),
    #[error("half set {half:?} has two indices in one component of pi1; reduce it first")]
    NotReduced { half: Vec<usize> },
    #[error("half set {0:?} does not admit a regular integral pair")]
    Inadmissible(Vec<usize>),
    #[error("rank {rank} exceeds the sweep guard {max}")]
    GuardExceeded { rank: usize, max: usize },
}
