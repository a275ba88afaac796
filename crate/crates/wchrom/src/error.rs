//! Error type shared across the library.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum WchromError {
    #[error("invalid family spec: {0}")]
    InvalidFamily(String),
    #[error("edge list parse error: {0}")]
    EdgeListParse(String),
    #[error("polynomial parse error: {0}")]
    PolyParse(String),
    #[error("graph has {edges} edges, enumeration cap is {cap}")]
    EnumerationCap { edges: usize, cap: usize },
    #[error("state-sum budget exceeded: q^n = {states:.3e} > {budget:.3e}")]
    BudgetExceeded { states: f64, budget: f64 },
    #[error("variable {0} is unbound")]
    UnboundVariable(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("degenerate slice: polynomial vanishes identically")]
    DegenerateSlice,
    #[error("root residual {residual:.3e} exceeds certified bound {bound:.3e}")]
    ResidualCertification { residual: f64, bound: f64 },
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, WchromError>;
