use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator {generator} is not part of the {table} table")]
    UnknownGenerator { generator: String, table: String },
    #[error("no isomorphism phi{0}; expected 1..=4")]
    UnknownIsomorphism(u8),
    #[error("thresholds violate {0}")]
    Thresholds(String),
    #[error("the degree of the zero vector is not defined")]
    ZeroVector,
    #[error("hypothesis of the {row} row not met: {reason}")]
    Hypothesis { row: String, reason: String },
    #[error("coefficient {0} vanishes identically")]
    VanishingCoefficient(String),
    #[error("opaque coefficient depth exceeded: {0}")]
    OpaqueDepth(String),
    #[error("unstable annihilator set: [{0}, {1}] = {2}")]
    Unstable(String, String, String),
    #[error("step budget of {0} exhausted")]
    StepBudget(usize),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
