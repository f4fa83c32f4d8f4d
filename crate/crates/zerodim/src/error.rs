use thiserror::Error;

/// Errors raised by the kernel.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("vector {0} is not dominant")]
    NotDominant(String),
    #[error("vector {0} is not in the cocharacter lattice")]
    NotInLattice(String),
    #[error("classes are not comparable")]
    NotComparable,
    #[error("subset {0:?} is not stable under sigma0")]
    NotSigmaStable(Vec<usize>),
    #[error("class is not Hodge-Newton decomposable for J = {0:?}")]
    NotHnDecomposable(Vec<usize>),
    #[error("class is not an element of the poset")]
    NotInPoset,
    #[error("class with Newton point {0} does not exist for this Kottwitz invariant")]
    NotAClass(String),
    #[error("invalid datum: {0}")]
    InvalidDatum(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
