use thiserror::Error;

/// Errors surfaced by the algebra kernel.
///
/// `Parse`/`UnknownVariable`/`RingMismatch`/`ShapeMismatch`/`Inhomogeneous`
/// indicate bad input; `NotStabilized`/`CapExceeded` indicate a computation
/// that ran into its configured degree budget and refused to guess.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown variable `{name}` at byte {pos}")]
    UnknownVariable { name: String, pos: usize },
    #[error("ring mismatch")]
    RingMismatch,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("inhomogeneous input: {0}")]
    Inhomogeneous(String),
    #[error("morphism not well-defined: {0}")]
    NotWellDefined(String),
    #[error("no lift exists")]
    NoLift,
    #[error("degree cap {cap} exceeded while {context}")]
    CapExceeded { cap: i64, context: String },
    #[error("not stabilized by degree {max_degree}; dimension trace {trace:?}")]
    NotStabilized {
        max_degree: i64,
        trace: Vec<(i64, usize)>,
    },
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
