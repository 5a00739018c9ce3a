use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cells have differing string lengths ({expected} vs {found})")]
    NonUniformDepth { expected: usize, found: usize },

    #[error("invalid cell {0:?}: cells are non-empty strings over {{0,1,*}}")]
    InvalidCell(String),

    #[error("grid rows have differing lengths")]
    RaggedGrid,

    #[error("empty grid")]
    EmptyGrid,

    #[error("chain of size {chain} does not fit base of size {base}")]
    ChainTooLarge { chain: usize, base: usize },

    #[error("thinning did not reach a fixed point within {passes} passes")]
    NonConvergence { passes: usize },

    #[error("dataset has no samples")]
    EmptyDataset,

    #[error("input dimension {index} out of range for {dim}-dimensional data")]
    DimensionOutOfRange { index: usize, dim: usize },

    #[error("cannot merge two zero-weight points")]
    ZeroTotalWeight,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{path}: {source}")]
    File {
        path: PathBuf,
        #[source]
        source: Box<Error>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    /// Attaches the file the error came from.
    pub fn in_file(self, path: impl Into<PathBuf>) -> Self {
        Error::File {
            path: path.into(),
            source: Box::new(self),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
