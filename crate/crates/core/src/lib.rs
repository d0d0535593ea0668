//! Exact real-root counting for rational polynomials.
//!
//! The crate revolves around one classical fact: the signature of the
//! Bezoutian matrix `M_n(f, f')` of a real polynomial equals its number
//! of distinct real roots. Everything is computed over the rationals with
//! arbitrary precision, so signatures, Sturm counts, resultants, and
//! discriminants are exact and can cross-validate each other.
//!
//! Modules:
//! - [`rational`], [`poly`], [`ring`]: exact scalars and ring-generic
//!   dense univariate polynomials;
//! - [`matrix`], [`bezout`]: square/symmetric matrices and Bezoutians;
//! - [`inertia`]: two independent exact inertia algorithms;
//! - [`realroots`]: Sturm sequences, root counting, and isolation;
//! - [`resdisc`]: Sylvester resultants and discriminants;
//! - [`family`]: the `x^n + t*g(x)` pipeline with exact thresholds and
//!   verified real-root-count predictions;
//! - [`checks`]: built-in reference verifications.

#![forbid(unsafe_code)]

pub mod bezout;
pub mod checks;
pub mod error;
pub mod family;
pub mod inertia;
pub mod matrix;
pub mod poly;
pub mod rational;
pub mod realroots;
pub mod resdisc;
pub mod ring;

pub use error::{Error, Result};
pub use inertia::Inertia;
pub use matrix::{SqMatrix, SymMatrix};
pub use poly::UniPoly;
pub use rational::Rational;
pub use realroots::IsolatingInterval;
