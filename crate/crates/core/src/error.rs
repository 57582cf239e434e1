use thiserror::Error;

use crate::scalar::Scalar;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ParseError {
    #[error("malformed complex literal `{0}`")]
    Complex(String),
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("schema violation: {0}")]
    Schema(String),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum HypergroupError {
    #[error("pair ({x}, {y}) is not tabulated")]
    UntabulatedPair { x: usize, y: usize },
    #[error("element {element} outside ground set 0..={nmax}")]
    ElementOutOfRange { element: usize, nmax: usize },
    #[error("identity row missing for element {x}")]
    MissingIdentityRow { x: usize },
    #[error("function has {len} values but the ground set has {expected}")]
    DomainMismatch { len: usize, expected: usize },
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum RecurrenceError {
    #[error("a_{n} vanishes")]
    ZeroLeading { n: usize },
    #[error("c_0 must vanish")]
    NonzeroC0,
    #[error("a_{n} + b_{n} + c_{n} differs from x0")]
    RowSum { n: usize },
    #[error("recurrence lists {have} coefficient rows, {needed} required")]
    TooShort { needed: usize, have: usize },
    #[error("linearization coefficient c({n},{m},{k}) = {value} is negative")]
    NotAHypergroup {
        n: usize,
        m: usize,
        k: usize,
        value: String,
    },
    #[error("linearization row ({n},{m}) violates {what}")]
    TableInvariant { n: usize, m: usize, what: &'static str },
    #[error("degenerate fit: {0}")]
    DegenerateFit(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SolutionError {
    #[error("precondition `{check}` failed (residual {residual:e})")]
    PreconditionFailed { check: String, residual: f64 },
    #[error("M and N coincide on the domain, so f vanishes identically")]
    DegenerateEqual,
    #[error("lambda^2 = 1 makes d vanish; use the M-sine shift family instead")]
    DegenerateLambda,
    #[error("c = {c} does not solve the cosine-sine equation (residual coefficient {coefficient})")]
    NotASolutionForThisC { c: Box<Scalar>, coefficient: Box<Scalar> },
    #[error("parameter {name} disagrees across sample points (spread {spread:e})")]
    InconsistentParameter { name: &'static str, spread: f64 },
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error(transparent)]
    Hypergroup(#[from] HypergroupError),
}
