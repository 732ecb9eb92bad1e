use thiserror::Error;

/// Errors raised by the hyperbolic algebra, distributions, maps and runners.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum HypError {
    #[error("non-finite value: {0}")]
    NonFinite(String),
    #[error("division by a zero divisor ({0})")]
    ZeroDivisorDivision(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("empty interval: lower bound {lo} is not below upper bound {hi}")]
    EmptyInterval { lo: String, hi: String },
    #[error("logarithm undefined for {0}: both idempotent parts must be positive")]
    Domain(String),

    #[error("probability #{index} = {value} lies outside [0, 1~]")]
    OutOfRange { index: usize, value: String },
    #[error("probabilities sum to {0}, which is none of 1~, 1e1, 1e2")]
    BadSum(String),
    #[error("probabilities sum to 1{axis} but entry #{index} has a nonzero opposite part")]
    MixedMode { axis: &'static str, index: usize },
    #[error("operation requires a full-mode distribution (sum = 1~), got {0}")]
    NotFullMode(String),
    #[error("empty distribution")]
    EmptyDistribution,
    #[error("real distribution invalid: {0}")]
    BadRealDistribution(String),

    #[error("invalid contraction factor {0}: need 0 <= c < 1 in both parts")]
    NotContraction(String),
    #[error("{maps} maps but {probs} probabilities")]
    LengthMismatch { maps: usize, probs: usize },
    #[error("system has no maps")]
    EmptySystem,
    #[error("point set is empty")]
    EmptySet,

    #[error("run config: {0}")]
    InvalidConfig(String),
    #[error("runner for {expected} called with a {got} config")]
    ConfigMismatch {
        expected: &'static str,
        got: &'static str,
    },

    #[error("degenerate extent: zero width along {0}")]
    DegenerateExtent(&'static str),
    #[error("resolution must be at least 2, got {0}")]
    BadResolution(usize),

    #[error("parse error: {0}")]
    Parse(String),
    #[error("{path}: {source}")]
    Validation {
        path: String,
        #[source]
        source: Box<HypError>,
    },
}

impl HypError {
    pub(crate) fn at(self, path: impl Into<String>) -> Self {
        HypError::Validation {
            path: path.into(),
            source: Box::new(self),
        }
    }
}

pub type Result<T, E = HypError> = std::result::Result<T, E>;
