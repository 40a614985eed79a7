use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("unknown graph name `{0}`")]
    UnknownName(String),
    #[error("operation requires a graph with at least one vertex")]
    EmptyGraph,
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
    #[error("i/o error: {0}")]
    Io(String),
}

impl GraphError {
    pub(crate) fn parse_at_line(line: usize, message: impl Into<String>) -> Self {
        GraphError::Parse {
            location: format!("line {line}"),
            message: message.into(),
        }
    }

    pub(crate) fn parse_at_byte(byte: usize, message: impl Into<String>) -> Self {
        GraphError::Parse {
            location: format!("byte {byte}"),
            message: message.into(),
        }
    }
}

impl From<std::io::Error> for GraphError {
    fn from(e: std::io::Error) -> Self {
        GraphError::Io(e.to_string())
    }
}
