use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("invalid F_3 digit {0}")]
    InvalidDigit(u8),

    #[error("dimension {0} is too large (at most {max})", max = crate::gf3::MAX_DIMENSION)]
    DimensionTooLarge(usize),

    #[error("exact cap search is limited to n <= 3, got n = {0}")]
    ExactSearchTooLarge(usize),

    #[error("point set is not a cap: {0} + {1} + {2} = 0")]
    NotACap(String, String, String),

    #[error("cap set must be verified before use")]
    UnverifiedCap,

    #[error("duplicate element {0}")]
    DuplicateElement(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("vertex index {index} out of range for class {class} of size {size}")]
    VertexOutOfRange {
        class: usize,
        index: usize,
        size: usize,
    },

    #[error("duplicate edge ({0}, {1}, {2})")]
    DuplicateEdge(usize, usize, usize),

    #[error("hypergraph is not linear: edges {0} and {1} share two vertices")]
    NotLinear(usize, usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("resample budget of {budget} exhausted with {violated} monochromatic wickets left")]
    BudgetExceeded { budget: u64, violated: usize },

    #[error("domain of {size} elements is too large for exhaustive search (limit {limit}); use heuristic mode")]
    DomainTooLarge { size: usize, limit: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
