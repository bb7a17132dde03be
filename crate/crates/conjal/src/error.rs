//! Error type shared by every module of the kernel.

use crate::fractions::Classification;
use crate::scalar::ScalarRing;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: ScalarRing, right: ScalarRing },

    #[error("ring {0} is not entire")]
    NotEntire(ScalarRing),

    #[error("ring {0} is not a field")]
    NotAField(ScalarRing),

    #[error("division by zero in {0}")]
    DivisionByZero(ScalarRing),

    #[error("algebra mismatch: {left} vs {right}")]
    AlgebraMismatch { left: String, right: String },

    #[error("product a*conj(a) has a nonzero imaginary coordinate in {0}; the spec does not define a conjugation algebra")]
    NotScalar(String),

    #[error("element is not invertible: {}", .0.describe())]
    NotInvertible(Box<Classification>),

    #[error("unknown algebra {0:?}")]
    UnknownAlgebra(String),

    #[error("algebra {0} is not associative")]
    NonAssociative(String),

    #[error("degree {degree} exceeds bound {bound}")]
    DegreeBoundExceeded { degree: usize, bound: usize },

    #[error("{point} is a root of the denominator {poly}")]
    RootOfDenominator { poly: String, point: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("syntax error at byte {offset}: expected {expected}")]
    Syntax { offset: usize, expected: String },

    #[error("unknown basis name {name:?} at byte {offset}")]
    UnknownBasisName { offset: usize, name: String },

    #[error("invalid algebra spec: {0}")]
    InvalidSpec(String),

    #[error("usage: {0}")]
    Usage(String),

    #[error("io error: {0}")]
    Io(String),
}

impl Error {
    /// Stable machine-greppable code used in CLI stderr as `ERR:<code>`.
    pub fn code(&self) -> &'static str {
        match self {
            Error::RingMismatch { .. } => "RING_MISMATCH",
            Error::NotEntire(_) => "NOT_ENTIRE",
            Error::NotAField(_) => "NOT_A_FIELD",
            Error::DivisionByZero(_) => "DIVISION_BY_ZERO",
            Error::AlgebraMismatch { .. } => "ALGEBRA_MISMATCH",
            Error::NotScalar(_) => "NOT_SCALAR",
            Error::NotInvertible(_) => "NOT_INVERTIBLE",
            Error::UnknownAlgebra(_) => "UNKNOWN_ALGEBRA",
            Error::NonAssociative(_) => "NON_ASSOCIATIVE",
            Error::DegreeBoundExceeded { .. } => "DEGREE_BOUND",
            Error::RootOfDenominator { .. } => "ROOT_OF_DENOMINATOR",
            Error::Precondition(_) => "PRECONDITION",
            Error::Syntax { .. } => "SYNTAX",
            Error::UnknownBasisName { .. } => "UNKNOWN_BASIS",
            Error::InvalidSpec(_) => "INVALID_SPEC",
            Error::Usage(_) => "USAGE",
            Error::Io(_) => "IO",
        }
    }

    /// CLI exit class: 1 for domain errors, 2 for usage/parse errors.
    pub fn exit_class(&self) -> i32 {
        match self {
            Error::Syntax { .. }
            | Error::UnknownBasisName { .. }
            | Error::UnknownAlgebra(_)
            | Error::InvalidSpec(_)
            | Error::Usage(_)
            | Error::Io(_) => 2,
            _ => 1,
        }
    }
}
