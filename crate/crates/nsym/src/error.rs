use crate::element::Basis;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("the empty composition is not allowed here")]
    EmptyComposition,

    #[error("degree must be at least 1, got {0}")]
    InvalidDegree(i64),

    #[error("composition parts must be positive")]
    ZeroPart,

    #[error("basis mismatch: expected {expected:?}, got {got:?}")]
    BasisMismatch { expected: Basis, got: Basis },

    #[error("{fine} is not a refinement of {coarse}")]
    NotRefinement { fine: String, coarse: String },

    #[error("superdiagonal entry b_{0} is zero")]
    SingularSuperdiagonal(usize),

    #[error("index {0} out of range")]
    IndexOutOfRange(usize),

    #[error("unbound symbol a_{{{0},{1}}} in substitution")]
    UnboundSymbol(u8, u8),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("unknown basis name {0:?}")]
    UnknownBasis(String),

    #[error("oracle needs at least one variable")]
    NoVariables,
}

pub type Result<T> = std::result::Result<T, Error>;
