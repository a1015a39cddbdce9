use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("invalid specification: {0}")]
    InvalidSpec(String),

    #[error("operands live in different rings")]
    RingMismatch,

    #[error("monomial has {got} exponents, ring has {expected} variables")]
    ArityMismatch { expected: usize, got: usize },

    #[error("reverse-lex comparison needs equal degrees, got {0} and {1}")]
    DegreeMismatch(u32, u32),

    #[error("generator order is not degree-nondecreasing at position {position}")]
    InvalidOrder { position: usize },

    #[error("generator {0} is not squarefree")]
    SquarefreeRequired(String),

    #[error("operation undefined on the zero ideal")]
    ZeroIdeal,

    #[error("operation undefined on the unit ideal")]
    UnitIdeal,

    #[error("{what}: size {size} exceeds cap {cap}")]
    Capacity {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("cannot coarsen from {from} to {to}")]
    InvalidCoarsening { from: String, to: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unsupported field characteristic {0}")]
    UnsupportedField(u32),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
