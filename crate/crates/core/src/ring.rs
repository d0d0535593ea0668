//! Coefficient-ring abstractions.
//!
//! Everything downstream is generic over a commutative ring with exact
//! equality, so the same matrix and Bezoutian code runs over the
//! rationals and over polynomial rings in an auxiliary variable.

use std::fmt::Debug;

use crate::rational::Rational;

/// A commutative ring with decidable equality.
pub trait Ring: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Canonical image of a machine integer.
    fn from_i64(value: i64) -> Self;

    fn is_zero(&self) -> bool {
        *self == Self::zero()
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

/// Rings in which divisibility can be decided and exact quotients computed.
///
/// Needed by fraction-free elimination, where every intermediate division
/// is exact by construction.
pub trait ExactDiv: Ring {
    /// `self / rhs` when `rhs` divides `self` exactly, `None` otherwise
    /// (including `rhs = 0`).
    fn exact_div(&self, rhs: &Self) -> Option<Self>;
}

/// Fields: every nonzero element is invertible.
pub trait Field: ExactDiv {
    /// Multiplicative inverse. Must only be called on nonzero elements.
    fn inv(&self) -> Self;

    fn div(&self, rhs: &Self) -> Self {
        self.mul(&rhs.inv())
    }
}

/// Rings that carry a rational-scalar action, e.g. polynomial rings over
/// the rationals. Used where a construction mixes ring elements with
/// rational constants such as `(s-i+1)(s-j+1)/n`.
pub trait QScalar: Ring {
    fn scale_q(&self, q: &Rational) -> Self;
}
