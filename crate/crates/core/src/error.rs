use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid geometry: {0}")]
    InvalidGeometry(String),

    #[error("({0}, {1}, {2}) is not a mode: at least two indices must be nonzero")]
    NotAMode(u32, u32, u32),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("cutoff too large: {predicted} modes predicted below {cutoff}, budget is {budget}")]
    CutoffTooLarge {
        cutoff: f64,
        predicted: u64,
        budget: u64,
    },

    #[error("cutoff did not converge after {iterations} enlargements (last cutoff {cutoff}, last relative change {change:e})")]
    CutoffNotConverged {
        iterations: usize,
        cutoff: f64,
        change: f64,
    },

    #[error("root solver failed: {0}")]
    SolverFailure(String),
}

pub type Result<T> = std::result::Result<T, Error>;
