//! Error type shared by every module.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("graph is not regular")]
    NotRegular,

    #[error("expected a {expected}-regular graph, found degree {found}")]
    WrongDegree { expected: u32, found: u32 },

    #[error("degree {0} is odd")]
    OddDegree(u32),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph has an edgeless component")]
    EdgelessComponent,

    #[error("vertex {0} carries a self-loop")]
    SelfLoop(usize),

    #[error("vertices {0} and {1} are not adjacent")]
    NotAdjacent(usize, usize),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("budget exceeded: {needed} steps needed, {budget} allowed")]
    BudgetExceeded { needed: u128, budget: u128 },

    #[error("graph too large: {0}")]
    TooLarge(String),

    #[error("divisibility check failed: {0}")]
    Divisibility(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("duplicate graph name `{name}` on line {line}")]
    DuplicateName { name: String, line: usize },

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
