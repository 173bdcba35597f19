use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Core(#[from] harmsum_core::Error),
    #[error("corpus line {line}: {message}")]
    CorpusParse { line: usize, message: String },
    #[error("invalid closed-form JSON: {0}")]
    Json(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}
