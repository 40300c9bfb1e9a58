use alloc::string::String;

/// Errors raised anywhere in the core library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid simple type {kind}{rank}: {reason}")]
    InvalidType {
        kind: char,
        rank: usize,
        reason: &'static str,
    },
    #[error("weight {0} is not dominant")]
    NotDominant(String),
    #[error("operands belong to different root data ({0} vs {1})")]
    DatumMismatch(String, String),
    #[error("cocharacter pairing is not integral at order {order} for weight {weight}")]
    NonIntegralPairing { weight: String, order: u64 },
    #[error("coroots are not pairwise orthogonal: {0}")]
    NonOrthogonalCoroots(String),
    #[error("{what} exceeds the configured cap ({value} > {cap})")]
    CapExceeded { what: &'static str, value: u128, cap: u128 },
    #[error("ideal is not zero-dimensional")]
    NotZeroDimensional,
    #[error("Groebner pair queue exceeded {0} pairs")]
    PairLimit(usize),
    #[error("sign undecided after {depth} refinements: {context}")]
    Undecided { depth: u32, context: String },
    #[error("too close to a reflection wall: {0}")]
    Conditioning(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = core::result::Result<T, Error>;
