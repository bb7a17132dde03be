//! conjal: an exact kernel for finite-dimensional algebras with conjugation
//! given by structure constants.
//!
//! The crate covers element arithmetic and the norm form, classification
//! into zeros / zero divisors / invertibles with inversion through the
//! conjugate, the lift of an algebra over an entire ring to the algebra
//! over its field of fractions, noncommutative one-variable polynomials
//! with a tensor canonical form, rational mappings closed under polynomial
//! inversion, and ideal membership solvers. Everything is exact: integers,
//! rationals and prime-modulus residues, no floating point.
//!
//! The `conjal` binary exposes the kernel as a small expression-driven CLI;
//! see the `cli` module for the grammar and command set.

pub mod algebra;
pub mod cli;
pub mod error;
pub mod fractions;
pub mod ideal;
mod linalg;
pub mod parse;
pub mod polynomial;
pub mod rational;
pub mod sample;
pub mod scalar;
pub mod suite;

pub use algebra::{catalog, validate_algebra, AlgebraSpec, Element, ValidationReport, CATALOG_NAMES};
pub use error::{Error, Result};
pub use fractions::{
    classify, fraction_equiv_scale, invert, left_fraction, lift_algebra, right_fraction,
    ClassTag, Classification, LiftedAlgebra,
};
pub use scalar::{Scalar, ScalarRing};
