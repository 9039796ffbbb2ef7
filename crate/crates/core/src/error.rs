use thiserror::Error;

/// Failures raised by the weight schemes and their parameter solvers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeightError {
    #[error("invalid author count: a paper needs at least one author")]
    InvalidAuthorCount,

    #[error(
        "alpha = {alpha} is out of range for k = {k}: |alpha| must be {} {bound}",
        if *.strict { "<" } else { "<=" }
    )]
    AlphaOutOfRange {
        k: usize,
        alpha: String,
        bound: String,
        strict: bool,
    },

    #[error("last author's weight is zero, ratio w1/wk is undefined")]
    DivisionByZeroWeight,

    #[error("alpha is underdetermined for k = {k}: at least two authors are needed")]
    Underdetermined { k: usize },

    #[error("inconsistent endpoints for k = {k}: w1 + wk = {sum}, expected {expected}")]
    InconsistentEndpoints {
        k: usize,
        sum: String,
        expected: String,
    },

    #[error("no constraint on alpha for k = {k}: a single author always receives weight 1")]
    NoConstraint { k: usize },

    #[error("infeasible floor mu = {mu} for k = {k}: mu must lie in [0, {max}]")]
    InfeasibleFloor { k: usize, mu: String, max: String },

    #[error("weights sum to {sum}, not 1")]
    NotNormalized { sum: String },

    #[error("author position {position} is outside 1..={k}")]
    PositionOutOfRange { position: usize, k: usize },
}
