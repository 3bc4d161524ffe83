use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error{}: {msg}", line.map(|l| format!(" at line {l}")).unwrap_or_default())]
    Parse { line: Option<usize>, msg: String },

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("unknown relator `{0}`")]
    UnknownRelator(String),

    #[error("invalid presentation: {0}")]
    Presentation(String),

    #[error("coset enumeration exceeded {limit} cosets: group possibly infinite or too large")]
    EnumerationOverflow { limit: usize },

    #[error("invalid group table: {0}")]
    Table(String),

    #[error("invalid maximal tree: {0}")]
    Tree(String),

    #[error("word does not evaluate to the identity: {0}")]
    NotInKernel(String),

    #[error("filling not found within limits (max depth {max_depth}, max length {max_length}) for {word}")]
    FillingNotFound {
        word: String,
        max_depth: usize,
        max_length: usize,
    },

    #[error("invalid h1 entry for edge ({edge}): {msg}")]
    H1 { edge: String, msg: String },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("invalid resolution state: {0}")]
    State(String),

    #[error("io error on {path}: {msg}")]
    Io { path: String, msg: String },
}

impl Error {
    pub(crate) fn parse(line: Option<usize>, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
