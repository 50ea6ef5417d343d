use std::fmt;

use thiserror::Error;

use crate::quantale::Elem;

/// 1-based line and column in a source text.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Span {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Errors raised by construction, the ideal calculus and the decomposition
/// machinery. Law failures found by the verification harness are report
/// content, not errors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{}duplicate element label `{label}`", at.map(|s| format!("{s}: ")).unwrap_or_default())]
    DuplicateLabel { label: String, at: Option<Span> },
    #[error("unknown element label `{0}`")]
    UnknownLabel(String),
    #[error("element index {index} out of range for a carrier of {size} elements")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("multiplication table must be {expected}x{expected}, found a row of {found} entries")]
    MulTableShape { expected: usize, found: usize },
    #[error("order is not antisymmetric: `{0}` and `{1}` are below each other")]
    NotAPartialOrder(String, String),
    #[error("`{0}` and `{1}` have no {2}")]
    NotALattice(String, String, &'static str),
    #[error("order has no global {0}")]
    MissingBound(&'static str),
    #[error("carrier is empty")]
    EmptyCarrier,
    #[error("carrier would have {size} elements, above the cap of {cap}")]
    TooLarge { size: usize, cap: usize },
    #[error("invalid generator: {0}")]
    InvalidGenerator(String),
    #[error("multiplication is not commutative: {0} & {1} != {1} & {0}")]
    NotCommutative(Elem, Elem),
    #[error("{at}: expected {expected}, found {found}")]
    Syntax { at: Span, expected: String, found: String },
    #[error("{at}: label `{label}` is not declared")]
    UndeclaredLabel { label: String, at: Span },
    #[error("{at}: expected {expected} {what}, found {found}")]
    RowArity { at: Span, what: &'static str, expected: usize, found: usize },
    #[error("ideals belong to different carriers")]
    CarrierMismatch,
    #[error("subset is not an ideal")]
    NotAnIdeal,
    #[error("generator set is empty")]
    EmptyGeneratorSet,
    #[error("homomorphism condition `{condition}` fails at ({x}, {y})")]
    HomInvalid { condition: &'static str, x: Elem, y: Elem },
    #[error("homomorphism map has {found} entries, source has {expected} elements")]
    HomArity { expected: usize, found: usize },
    #[error("preimage of the ideal is empty (the map does not send bottom to bottom)")]
    EmptyContraction,
    #[error("ideal is not proper")]
    NotProper,
    #[error("ideal is not prime")]
    NotPrime,
    #[error("ideal is not primary")]
    NotPrimary,
    #[error("bottom equals top")]
    Degenerate,
    #[error("subset is not multiplicatively closed")]
    NotMc,
    #[error("no ideal avoids the set (it contains bottom)")]
    NoAvoidingIdeal,
    #[error("prime avoidance hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("ideal has no primary decomposition; primary ideals above it meet in a larger ideal")]
    NotDecomposable { gap: crate::ideals::Ideal },
    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("a homomorphism is required for this suite")]
    HomRequired,
    /// Two routes that must agree on any quantale gave different answers.
    /// Only reachable on tables that violate the quantale axioms.
    #[error("law `{law}` violated: {detail}")]
    LawViolated { law: &'static str, detail: String },
}
