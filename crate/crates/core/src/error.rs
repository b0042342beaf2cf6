use thiserror::Error;

/// Errors produced by the engine.
///
/// Precondition violations carry enough context to point at the offending
/// input (a monomial key, a Hodge cell, a Betti index).
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("series has zero constant term and cannot be inverted")]
    ZeroConstantTerm,

    #[error("arity mismatch: {left} vs {right} generators")]
    ArityMismatch { left: usize, right: usize },

    #[error("truncation bound mismatch: {left} vs {right}")]
    BoundMismatch { left: u32, right: u32 },

    #[error("{what} = {value} is out of range (allowed {min}..={max})")]
    OutOfRange {
        what: &'static str,
        value: i64,
        min: i64,
        max: i64,
    },

    #[error("polynomial is not symmetric: transposition of roots x{} and x{} changes it", .0 + 1, .1 + 1)]
    NotSymmetric(usize, usize),

    #[error("polynomial involves the formal variable t; strip it before reducing")]
    UnexpectedT,

    #[error("malformed Chern monomial key `{0}`")]
    MalformedMonomial(String),

    #[error("Chern monomial `{key}` has weight {weight}, expected {expected}")]
    WeightMismatch {
        key: String,
        weight: u32,
        expected: u32,
    },

    #[error("no pairing supplied for Chern monomial `{0}`")]
    MissingPairing(String),

    #[error("Euler characteristic is zero: {0} is undefined")]
    EulerZero(&'static str),

    #[error("invalid dimension: {0}")]
    InvalidDimension(String),

    #[error("Poincaré duality violated: b_{j} = {left} but b_{dual} = {right}")]
    DualityViolated {
        j: usize,
        dual: usize,
        left: i64,
        right: i64,
    },

    #[error("{kind} symmetry violated at h^{{{p},{q}}}")]
    HodgeSymmetry { kind: &'static str, p: usize, q: usize },

    #[error("negative entry {value} at {location}")]
    Negative { location: String, value: i64 },

    #[error("m = {m} exceeds the configured cap {cap}")]
    CapExceeded { m: usize, cap: usize },

    #[error("chi^{p} = {value} is not an integer; the Chern numbers are inconsistent")]
    NonIntegral { p: usize, value: String },

    #[error("polynomial division left a nonzero remainder")]
    NonZeroRemainder,

    #[error("integer overflow while converting {0}")]
    Overflow(String),

    #[error("invalid input: {0}")]
    Input(String),

    #[error("fixture error: {0}")]
    Fixture(String),
}

pub type Result<T> = std::result::Result<T, Error>;
