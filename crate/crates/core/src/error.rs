use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator index {index} outside alphabet of rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("rank must be at least {min}, got {rank}")]
    RankTooSmall { rank: usize, min: usize },

    #[error("root of the trivial word is undefined")]
    TrivialRoot,

    #[error("word contains a t-letter; only d-words can be capitalized")]
    NotDWord,

    #[error("relator index {index} out of range 1..={count}")]
    RelatorIndex { index: usize, count: usize },

    #[error("position {position} out of range {range}")]
    Position { position: usize, range: String },

    #[error("word is not in the kernel of pi")]
    NotInKernel,

    #[error("inapplicable move: {0}")]
    InapplicableMove(String),

    #[error("inconsistent input: {0}")]
    Inconsistency(String),

    #[error("{}", format_parse(*.line, .message))]
    Parse {
        line: Option<usize>,
        message: String,
    },
}

fn format_parse(line: Option<usize>, message: &str) -> String {
    match line {
        Some(line) => format!("parse error on line {line}: {message}"),
        None => format!("parse error: {message}"),
    }
}

impl Error {
    pub(crate) fn parse(message: impl Into<String>) -> Self {
        Error::Parse {
            line: None,
            message: message.into(),
        }
    }

    /// Attaches a 1-based line number to a parse error; other errors pass through.
    pub fn at_line(self, line: usize) -> Self {
        match self {
            Error::Parse { message, .. } => Error::Parse {
                line: Some(line),
                message,
            },
            Error::IndexOutOfRange { .. } | Error::RankMismatch { .. } => Error::Parse {
                line: Some(line),
                message: self.to_string(),
            },
            other => other,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
