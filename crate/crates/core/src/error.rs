use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("value out of range: {0}")]
    Range(String),

    #[error("invalid parameters: {0}")]
    Params(String),

    #[error("one-time key used out of order or more than once")]
    KeyReuse,

    #[error("key store exhausted")]
    Exhausted,

    #[error("corrupt data: {0}")]
    Corrupt(String),

    #[error("protocol error: {0}")]
    Protocol(String),

    #[error("audit failed at layer {layer}: returned element {position} does not match local recomputation")]
    AuditFailed { layer: usize, position: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
