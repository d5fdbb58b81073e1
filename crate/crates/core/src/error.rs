use alloc::string::String;

/// Errors raised by the algebraic core.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    ZeroDivision,
    #[error("scalar is not a single radical term and cannot be inverted")]
    NotMonomial,
    #[error("index out of range: {0}")]
    Range(String),
    #[error("polynomial is not bihomogeneous")]
    NotHomogeneous,
    #[error("expansion incomplete at m_max = {0}: nonzero residual")]
    Incomplete(u32),
    #[error("term mixes grades or weights")]
    Inhomogeneous,
    #[error("root data unavailable: {0}")]
    NotSimple(String),
    #[error("invalid Lie algebra: {0}")]
    InvalidAlgebra(String),
}

pub type Result<T> = core::result::Result<T, Error>;
