use thiserror::Error;

/// Errors raised by the game engine and its front ends.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("comparison memo exceeded its cap of {cap} entries")]
    MemoCapExceeded { cap: usize },

    #[error("component with {vertices} vertices exceeds the canonicalization limit of {limit}")]
    TooLarge { vertices: usize, limit: usize },

    #[error("game is not all-small")]
    NotAllSmall,

    #[error("remote star comparison differs between *{order} and *{next}", next = order + 1)]
    RemoteStarUnstable { order: u32 },

    #[error("atomic weight is not an integer")]
    NotInteger,

    #[error("bad family parameters: {0}")]
    BadParams(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Process exit code used by the `mdg` binary.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) | Error::BadParams(_) => 2,
            Error::MemoCapExceeded { .. }
            | Error::TooLarge { .. }
            | Error::RemoteStarUnstable { .. } => 3,
            Error::NotAllSmall | Error::NotInteger => 4,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
