use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AspecError {
    #[error("multiplication is not associative on basis triple ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("unit law fails on basis element {0}")]
    BadUnit(usize),
    #[error("malformed algebra: {0}")]
    Malformed(String),
    #[error("subspace is not a two-sided ideal")]
    NotAnIdeal,
    #[error("algebra is not split over the rationals: {0}")]
    NotSplit(String),
    #[error("module {0} is not simple")]
    NotSimple(usize),
    #[error("modules {0} and {1} are isomorphic")]
    DuplicateModule(usize, usize),
    #[error("module action is not an algebra map: {0}")]
    BadModule(String),
    #[error("morphism is not a unital algebra map: {0}")]
    BadMorphism(String),
    #[error("point does not satisfy relation {0}")]
    PointNotOnVariety(usize),
    #[error("morphism does not preserve the pointing idempotents")]
    IdempotentsNotPreserved,
    #[error("contracted module {0} is not simple")]
    ContractedNotSimple(usize),
    #[error("forced map is not well defined: {0}")]
    KernelObstruction(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = AspecError> = std::result::Result<T, E>;
