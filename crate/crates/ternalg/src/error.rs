use thiserror::Error;

/// Errors raised by constructors and operations of this crate.
///
/// Law checkers never return these for structurally valid input; a failing
/// law is reported through [`crate::LawReport`] instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("radicand mismatch: {0} vs {1}")]
    RadicandMismatch(u32, u32),

    #[error("radicand {0} is not a positive square-free integer")]
    BadRadicand(u32),

    #[error("division by zero")]
    DivisionByZero,

    #[error("singular matrix")]
    SingularMatrix,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    /// The twisting map does not preserve the product; `triple` is the first
    /// violating basis triple, 1-based.
    #[error("map is not an algebra endomorphism: product condition fails at {triple:?}")]
    NotEndomorphism { triple: [usize; 3] },

    #[error("twisting requires an algebra whose twisting maps are both the identity")]
    PreconditionNotClassical,

    #[error("algebra is not multiplicative")]
    NotMultiplicative,

    #[error("cannot parse scalar {input:?} at offset {offset}: {msg}")]
    ParseScalar {
        input: String,
        offset: usize,
        msg: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
