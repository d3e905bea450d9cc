use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GirthError {
    #[error("edge ({u}, {v}): self-loop")]
    SelfLoop { u: usize, v: usize },
    #[error("edge ({u}, {v}): duplicate edge")]
    DuplicateEdge { u: usize, v: usize },
    #[error("edge ({u}, {v}): vertex id out of range for n = {n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },
    #[error("edge ({u}, {v}): invalid weight {w}")]
    InvalidWeight { u: usize, v: usize, w: f64 },
    #[error("edge ({u}, {v}): weight {w} is not an integer in 1..={max}")]
    WeightOutOfRange { u: usize, v: usize, w: f64, max: u64 },
    #[error("integer weights overflow: M = {max}, n = {n}")]
    Overflow { max: u64, n: usize },
    #[error("invalid scaling factor {0}")]
    InvalidFactor(f64),
    #[error("edge ({u}, {v}) has zero weight; apply the zero-weight reduction first")]
    ZeroWeight { u: usize, v: usize },
    #[error("operation requires {expected} weights")]
    ModeMismatch { expected: &'static str },
    #[error("graph with {n} vertices exceeds the subroutine threshold {threshold}")]
    ThresholdExceeded { n: usize, threshold: usize },
    #[error("hitting set input {index} is empty")]
    EmptySet { index: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, GirthError>;
