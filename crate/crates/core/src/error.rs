use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("not a group: {0}")]
    NotAGroup(String),

    #[error("group of order {order} exceeds the limit of {cap} elements")]
    SizeLimit { order: u128, cap: usize },

    #[error("subgroup is not normal: {0}")]
    NotNormal(String),

    #[error("center mismatch: {0}")]
    CenterMismatch(String),

    #[error("group is not just 2-step nilpotent")]
    NotJn2,

    #[error("element {0} is not central")]
    NotCentral(usize),

    #[error("element {0} does not generate the center")]
    NotGenerator(usize),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("parameter out of range: {0}")]
    ParamRange(String),

    #[error("hypothesis failed: {0}")]
    HypothesisFailed(String),

    #[error("search budget exceeded after {explored} nodes")]
    SearchBudgetExceeded { explored: u64 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
