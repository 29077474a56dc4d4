use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("odd order {0}: the hyperdeterminant is only defined through wedge powers for even order")]
    OddOrder(usize),

    #[error("{what} budget exceeded: needs {required}, limit is {limit}")]
    BudgetExceeded {
        what: &'static str,
        required: u128,
        limit: u128,
    },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("subsets have unequal sizes: {0:?}")]
    UnequalSubsetSizes(Vec<usize>),

    #[error("axis {axis}: subsets do not partition 0..{dim}")]
    NotPartition { axis: usize, dim: usize },

    #[error("moment sequence too short: need index {needed}, have {available} values")]
    MomentsTooShort { needed: usize, available: usize },

    #[error("quadrature order {order} too low for per-variable degree {degree}")]
    InsufficientQuadratureOrder { order: usize, degree: usize },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn budget(what: &'static str, required: u128, limit: u128) -> Self {
        Error::BudgetExceeded { what, required, limit }
    }
}
