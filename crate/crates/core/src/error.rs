use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("linear form is zero")]
    ZeroLinearForm,
    #[error("series inversion needs a nonzero constant term")]
    NonUnitConstant,
    #[error("inexact division: {0}")]
    InexactDivision(String),
    #[error("invalid arrangement: {0}")]
    InvalidArrangement(String),
    #[error("parse error in {field}: {message}")]
    Parse { field: String, message: String },
    #[error("not a flat of the arrangement: {0}")]
    NotAFlat(String),
    #[error("hyperplane index {0} out of range")]
    NoSuchHyperplane(usize),
    #[error("form degree p = {p} outside 0..={l}")]
    FormDegree { p: usize, l: usize },
    #[error("Hilbert series did not stabilize below degree cap {cap}; partial numerator {partial}")]
    NoStabilization { cap: i64, partial: String },
    #[error("generator search reached degree cap {0} without a decision")]
    GeneratorCap(i64),
    #[error(
        "grading shift calibration failure: derivation numerator {der}, one-form numerator {omega}"
    )]
    Calibration { der: String, omega: String },
    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),
    #[error("ambiguous twists: numerator {0} cannot be split into disjoint supports")]
    AmbiguousTwists(String),
    #[error("twist balance {got} differs from module rank {expected}")]
    TwistBalance { got: i64, expected: i64 },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("non-integral Chern coefficient {0}")]
    NonIntegral(String),
    #[error("at flat {flat}: {source}")]
    AtFlat {
        flat: String,
        #[source]
        source: Box<Error>,
    },
    #[error("critical ideal quotient did not stabilize: {0}")]
    NotStabilized(String),
    #[error("invalid weight: {0}")]
    Weight(String),
}

pub type Result<T> = std::result::Result<T, Error>;
