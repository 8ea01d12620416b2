use std::io;
use std::path::PathBuf;

use thiserror::Error;

use crate::Element;

#[derive(Debug, Error)]
pub enum Error {
    #[error("element {element} is out of range for a ground set of {n} elements")]
    ElementOutOfRange { element: Element, n: usize },

    #[error("element {0} is already in the set")]
    AlreadyPresent(Element),

    #[error("element {0} appears more than once in the set")]
    DuplicateElement(Element),

    #[error("the ground set is empty")]
    EmptyGroundSet,

    #[error("every element costs more than the budget {budget}")]
    EmptyInstance { budget: f64 },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("exhaustive search refused: n = {n} exceeds the limit of {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}
