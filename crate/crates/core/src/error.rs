use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("genus must be at least 1, got {0}")]
    InvalidGenus(u32),

    #[error("unknown token `{token}` at byte {offset}")]
    UnknownToken { token: String, offset: usize },

    #[error("empty token between separators at byte {offset}")]
    EmptyToken { offset: usize },

    #[error("generator index {index} out of range for genus {genus}")]
    IndexOutOfRange { index: u32, genus: u32 },

    #[error("genus mismatch: {0} vs {1}")]
    GenusMismatch(u32, u32),

    #[error("operation undefined on the empty word")]
    EmptyWord,

    #[error("partition index {index} out of range 1..={len}")]
    PartitionOutOfRange { index: usize, len: usize },

    #[error("linking number needs two distinct partitions (got {0} twice)")]
    SamePartition(usize),

    #[error("gate does not belong to this diagram")]
    ForeignGate,

    #[error("partitions share an endpoint gate")]
    SharedEndpoint,

    /// The alternating form of two partition boundaries came out odd. Never
    /// happens for a consistent gate order.
    #[error("internal consistency: odd boundary product {0}")]
    OddLinking(i64),

    #[error("tensor is not antisymmetric")]
    NotAntisymmetric,

    #[error("json: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
