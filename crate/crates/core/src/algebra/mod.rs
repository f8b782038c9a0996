//! Exact arithmetic: rationals, sparse multivariate polynomials, rational
//! functions in the spectral parameters, and fraction-free linear algebra.

pub mod matrix;
pub mod poly;
pub mod ratfunc;
pub mod rational;

use std::fmt;

use num_traits::{One, Zero};

pub use matrix::{nullspace, ExactMatrix, Nullspace};
pub use poly::{MPoly, Monomial, Poly, Vars};
pub use ratfunc::RatFunc;
pub use rational::BigRat;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("variable lists differ: [{left}] vs [{right}]")]
    VariableMismatch { left: String, right: String },
    #[error("pole: denominator vanishes at {assignment}")]
    Pole { assignment: String },
    #[error("assignment does not cover parameter `{0}`")]
    MissingAssignment(String),
    #[error("cannot parse rational `{0}`")]
    ParseRational(String),
    #[error("malformed polynomial data: {0}")]
    Malformed(String),
}

/// Commutative coefficient ring used by polynomials, Weyl elements and matrices.
///
/// Methods take references; the `_ref` suffix keeps them from colliding with
/// the `std::ops` traits when both are in scope.
pub trait Ring: Clone + PartialEq + fmt::Debug + Send + Sync + Zero + One + 'static {
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn from_rat(r: &BigRat) -> Self;

    fn from_int(i: i64) -> Self {
        Self::from_rat(&BigRat::from_integer(i.into()))
    }

    /// Plain-text rendering.
    fn to_text(&self) -> String;
    /// LaTeX rendering.
    fn to_latex(&self) -> String;
    /// True when the rendering must be parenthesised as a factor of a product.
    fn is_compound(&self) -> bool;
    /// True when the rendering starts with a minus sign that may be pulled out.
    fn has_minus_sign(&self) -> bool;
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring {
    fn inv(&self) -> Option<Self>;

    fn div_ref(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.mul_ref(&i))
    }
}
