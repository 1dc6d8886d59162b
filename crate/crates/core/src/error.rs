use thiserror::Error;

use crate::partition::Partition;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("partitions have different sizes ({0} and {1})")]
    SizeMismatch(usize, usize),
    #[error("denominator vanishes identically")]
    DenominatorVanishes,
    #[error("rim-hook side {hooks} differs from character side {characters} for {mu} / {nu}, r = {r}")]
    ThetaMismatch {
        mu: Partition,
        nu: Partition,
        r: usize,
        characters: String,
        hooks: String,
    },
    #[error("identity `{name}` fails: {detail}")]
    IdentityViolation { name: String, detail: String },
    #[error("{lambda} is not an eigenvector: {detail}")]
    EigenViolation { lambda: Partition, detail: String },
    #[error("singular linear system")]
    SingularSystem,
    #[error("{0}")]
    InvalidArgument(String),
}

impl Error {
    pub fn identity(name: &str, detail: impl Into<String>) -> Self {
        Error::IdentityViolation {
            name: name.to_string(),
            detail: detail.into(),
        }
    }
}
