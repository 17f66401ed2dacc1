use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("group of order {order} exceeds the cap of {cap}")]
    CapExceeded { order: usize, cap: usize },
    #[error("invalid multiplication table: {0}")]
    InvalidTable(String),
    #[error("not a slice: the second subgroup is not contained in the first")]
    NotSlice,
    #[error("not a section: the second subgroup is not normal in the first")]
    NotSection,
    #[error("operands belong to different groups")]
    GroupMismatch,
    #[error("operands belong to different rings ({0} and {1})")]
    RingMismatch(&'static str, &'static str),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("group is not abelian")]
    NotAbelian,
    #[error("biset is not left inert: tensor induction is not defined on the ring for it")]
    NotLeftInert,
    #[error("invalid argument: {0}")]
    Invalid(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
