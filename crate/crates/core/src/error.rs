use thiserror::Error;

/// Errors raised by the library. Parse and input errors carry a human readable reason.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),
    #[error("letter {letter} is not in the alphabet of type {lie_type} rank {rank}")]
    LetterOutOfRange {
        letter: i32,
        lie_type: char,
        rank: usize,
    },
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("column is not admissible")]
    NotAdmissible,
    #[error("column is not coadmissible")]
    NotCoadmissible,
    #[error("map undefined at stage ({x},{y})")]
    Undefined { x: usize, y: usize },
    #[error("column index out of range: ({x},{y}) with {columns} columns")]
    IndexOutOfRange { x: usize, y: usize, columns: usize },
    #[error("word is not smooth on the given shape")]
    NotSmooth,
    #[error("json: {0}")]
    Json(String),
    #[error("internal contract violation: {0}")]
    Contract(String),
}

pub type Result<T> = std::result::Result<T, Error>;
