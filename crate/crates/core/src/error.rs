use thiserror::Error;

/// Errors raised by the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("conductor mismatch: {left} vs {right}")]
    ConductorMismatch { left: u32, right: u32 },
    #[error("root order {order} does not divide conductor {conductor}")]
    NotDivisor { order: u32, conductor: u32 },
    #[error("inverse of zero")]
    ZeroInverse,
    #[error("singular matrix")]
    Singular,
    #[error("matrix is not traceless")]
    NotTraceless,
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("operation `{op}` is not defined for group {group}")]
    UnsupportedGroup { op: &'static str, group: String },
    #[error("parse error at offset {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown operator `{name}` for group {group}")]
    UnknownOperator { name: String, group: String },
    #[error("letter {letter} is outside the operator alphabet of {group}")]
    OutsideAlphabet { letter: String, group: String },
    #[error("rewrite step budget of {budget} exhausted")]
    StepBudget { budget: u64 },
    #[error("termination measure did not decrease under rule {rule}")]
    MeasureIncrease { rule: String },
    #[error("rule {rule} changed the evaluation of {window}")]
    UnsoundStep { rule: String, window: String },
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
}

pub type Result<T> = std::result::Result<T, Error>;
