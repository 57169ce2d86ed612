use thiserror::Error;

/// Errors raised by the geometry kernel and the functionals built on top of it.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeomError {
    #[error("empty input")]
    EmptyInput,
    #[error("non-finite coordinate in input")]
    NonFinite,
    #[error("direction must be non-zero")]
    ZeroDirection,
    #[error("origin is not an interior point")]
    OriginNotInterior,
    #[error("origin lies outside the body")]
    OriginOutside,
    #[error("degenerate body: {0}")]
    Degenerate(&'static str),
    #[error("gauge is not full-dimensional")]
    GaugeDegenerate,
    #[error("linear map is singular")]
    SingularMatrix,
    #[error("halfplane system is infeasible")]
    Empty,
    #[error("halfplane system is unbounded")]
    Unbounded,
    #[error("linear program broke down numerically: {0}")]
    NumericalBreakdown(String),
    #[error("parameter {name} = {value} outside {domain}")]
    ParamOutOfRange {
        name: &'static str,
        value: f64,
        domain: &'static str,
    },
    #[error("diameter routes disagree: lp = {lp}, vertex pairs = {pairs}")]
    RouteMismatch { lp: f64, pairs: f64 },
    #[error("containment chain of symmetrizations violated: {0}")]
    FireyChain(String),
    #[error("completion check failed: {0}")]
    Completion(String),
    #[error("malformed polygon JSON: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, GeomError>;
