use thiserror::Error;

use crate::gvf::Violation;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("domain is disconnected ({components} components)")]
    DisconnectedDomain { components: usize },

    #[error("samples at vertices {a} and {b} have zero distance but different values")]
    InfiniteLipschitz { a: usize, b: usize },

    #[error("Lipschitz constant {given} is below the tight constant {tight}")]
    InfeasibleLip { given: f64, tight: f64 },

    #[error("no gradually varied extension exists: {0}")]
    Infeasible(Violation),

    #[error("line {line}: {message}")]
    Parse { line: u64, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
