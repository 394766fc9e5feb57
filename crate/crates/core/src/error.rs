use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{name}` at byte {pos}")]
    UnknownVariable { name: String, pos: usize },
    #[error("rational literal with zero denominator at byte {pos}")]
    ZeroDenominator { pos: usize },
    #[error("coefficient not representable in F_{p}: denominator divisible by {p}")]
    NotRepresentable { p: u32 },
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("invalid field descriptor `{0}` (expected `q` or `fp:<prime>`)")]
    BadFieldSpec(String),
    #[error("operands live in different rings (variables or field differ)")]
    RingMismatch,
    #[error("{op} is undefined for the zero polynomial")]
    ZeroPolynomial { op: &'static str },
    #[error("division is not exact")]
    InexactDivision,
    #[error("division by zero")]
    DivisionByZero,
    #[error("expected a nonzero homogeneous form in two variables")]
    NotBinaryForm,
    #[error("expected a polynomial in exactly {expected} variables, got {got}")]
    WrongArity { expected: usize, got: usize },
    #[error("ideal has no cached Groebner basis")]
    MissingBasis,
    #[error("resource limit exceeded in {stage} (cap {cap})")]
    ResourceExhausted { stage: &'static str, cap: usize },
    #[error("{quantity} did not stabilize below N = {cap}; the input likely has a common component through the fiber")]
    StabilizationFailed { quantity: &'static str, cap: u32 },
    #[error("curve `{which}` does not pass through the origin")]
    OriginNotOnCurve { which: &'static str },
    #[error("curves share a component")]
    CommonComponent,
    #[error("multiplicity engines disagree: stabilized length {groebner} vs recursive count {fulton}")]
    EngineDisagreement { groebner: u64, fulton: u64 },
    #[error("{0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
