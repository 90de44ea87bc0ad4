use thiserror::Error;

/// Errors raised by graph construction, solvers and constructions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("loop at vertex {0} in pair ({0},{0})")]
    Loop(usize),
    #[error("pair ({u},{v}) out of range for {n} vertices")]
    VertexOutOfRange { u: usize, v: usize, n: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("invalid family parameters for {family}: {reason}")]
    FamilyDomain { family: String, reason: String },
    #[error("vertex {vertex} has degree {degree}, expected 2")]
    NotDegreeTwo { vertex: usize, degree: usize },
    #[error("colour capacity exceeded: {requested} > {capacity}")]
    Capacity { requested: usize, capacity: usize },
    #[error("colouring has {got} entries but the graph has {expected} items")]
    LengthMismatch { expected: usize, got: usize },
    #[error("list assignment mode does not match property: {0}")]
    ModeMismatch(String),
    #[error("list for item {item} has {size} colours, need at least {required}")]
    ListTooSmall {
        item: usize,
        size: usize,
        required: usize,
    },
    #[error("construction precondition failed: {0}")]
    Precondition(String),
    #[error("exponent vector sums to {sum}, graph has {edges} edges")]
    ExponentSum { sum: usize, edges: usize },
    #[error("inapplicable: {0}")]
    Inapplicable(String),
    #[error("search budget exhausted: {0}")]
    Budget(String),
    #[error("guarantee failed: {0}")]
    GuaranteeFailed(String),
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
