use thiserror::Error;

/// Errors raised by table construction, rearrangement, the solvers and the codec.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Two trees passed to a zip had different constructor skeletons.
    #[error("shape mismatch: trees have different skeletons")]
    ShapeMismatch,

    /// `un_tip` was applied to a `Bin` node.
    #[error("expected a tip, found a bin node")]
    NotATip,

    /// A level index is out of range for the list length.
    #[error("invalid level: k = {k} with n = {n}")]
    InvalidLevel { n: usize, k: usize },

    /// A tree does not have the shape an operation requires.
    #[error("shape error: {0}")]
    ShapeError(String),

    /// The operation needs a non-empty list.
    #[error("empty input")]
    EmptyInput,

    /// A count or solution does not fit in the result type.
    #[error("arithmetic overflow: {0}")]
    Overflow(String),

    /// Input too large for the requested algorithm or oracle.
    #[error("size limit exceeded: {what} allows at most {max}, got {got}")]
    SizeLimit {
        what: &'static str,
        max: usize,
        got: usize,
    },

    /// Malformed text.
    #[error("parse error at byte {pos}: {msg}")]
    ParseError { pos: usize, msg: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
