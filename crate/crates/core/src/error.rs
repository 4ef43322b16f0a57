use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("permutation closure exceeds cap: order > {cap}")]
    ClosureCapExceeded { cap: usize },
    #[error("ambient group of order {order} exceeds cap {cap}")]
    AmbientCapExceeded { order: usize, cap: usize },
    #[error("subgroup lattice requested for group of order {order}, cap is {cap}")]
    LatticeCapExceeded { order: usize, cap: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid Cayley table: {0}")]
    InvalidTable(String),
    #[error("not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("group map is not bijective")]
    NotBijective,
    #[error("map does not respect products: {0}")]
    NotAHomomorphism(String),
    #[error("lower subgroup is not contained in upper subgroup")]
    NotInInterval,
    #[error("group mismatch: {0}")]
    GroupMismatch(String),
    #[error("element does not lie in the commutant for the given family")]
    NotInCommutant,
    #[error("idempotent family invalid: {0}")]
    FamilyInvalid(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown group `{0}`")]
    UnknownGroup(String),
    #[error("{0}")]
    Invalid(String),
}

impl Error {
    pub fn mismatch(msg: impl Into<String>) -> Self {
        Error::GroupMismatch(msg.into())
    }

    pub fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    /// True for the errors that signal a configured size limit.
    pub fn is_cap(&self) -> bool {
        matches!(
            self,
            Error::ClosureCapExceeded { .. }
                | Error::AmbientCapExceeded { .. }
                | Error::LatticeCapExceeded { .. }
        )
    }
}
