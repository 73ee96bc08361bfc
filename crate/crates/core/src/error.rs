use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Binary series operation on operands truncated at different orders.
    #[error("order cap mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("composition requires an inner series of order >= 1, got order {order:?}")]
    CompositionOrder { order: Option<usize> },

    #[error("series is not compositionally invertible (order {order:?}, need order 1)")]
    NotInvertible { order: Option<usize> },

    #[error("series has zero constant term and cannot be inverted")]
    ZeroConstantTerm,

    #[error("series truncated at order {cap} cannot pair with a polynomial of degree {degree}")]
    TruncationTooShort { cap: usize, degree: usize },

    #[error("lambda = 0 requires the explicit classical-limit mode")]
    ZeroLambda,

    #[error("invalid sheffer pair: {0}")]
    InvalidPair(String),

    #[error("parameter mismatch: {0}")]
    ParameterMismatch(String),

    #[error("enumeration of {size} elements exceeds the cap of {cap}")]
    EnumerationCap { size: usize, cap: usize },

    #[error("outside the convergence domain: {0}")]
    Domain(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("empty verification grid for {0}")]
    EmptyGrid(String),

    #[error("unknown identity tag `{0}`")]
    UnknownIdentity(String),

    #[error("cannot parse rational `{0}`")]
    ParseRational(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
