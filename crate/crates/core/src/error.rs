use std::path::PathBuf;

use thiserror::Error;

use crate::identity::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed rational {text:?}: {reason}")]
    Rational { text: String, reason: &'static str },

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("duplicate structure constant for ({i}, {j}, {k})")]
    DuplicateEntry { i: usize, j: usize, k: usize },

    /// A structural axiom of the declared algebra kind fails on a basis tuple.
    #[error("{axiom} fails at basis tuple {witness:?}")]
    AxiomViolation { axiom: &'static str, witness: Vec<usize> },

    #[error("{0}")]
    Invalid(String),

    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    /// Schema or content error in an input file; `field` names the offending part.
    #[error("{}: {field}: {message}", path.display())]
    Format {
        path: PathBuf,
        field: String,
        message: String,
    },
}
