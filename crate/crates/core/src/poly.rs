//! Dense univariate polynomials over a generic coefficient ring.
//!
//! Coefficients are stored by ascending degree and the top coefficient is
//! always nonzero; the zero polynomial is the empty coefficient vector,
//! with `degree() == None` standing in for degree minus infinity.
//!
//! The ring is a type parameter, so `UniPoly<Rational>` is an element of
//! `Q[x]` while `UniPoly<UniPoly<Rational>>` serves for `Q[t][x]`.

use std::fmt;

use serde::de::{SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::ring::{ExactDiv, Field, QScalar, Ring};

/// A dense univariate polynomial with exact coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniPoly<R: Ring> {
    coeffs: Vec<R>,
}

impl<R: Ring> UniPoly<R> {
    /// Builds a polynomial from ascending-degree coefficients, trimming
    /// trailing zeros so the representation stays canonical.
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly::constant(R::one())
    }

    pub fn constant(c: R) -> Self {
        UniPoly::new(vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(c: R, k: usize) -> Self {
        if c.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![R::zero(); k + 1];
        coeffs[k] = c;
        UniPoly { coeffs }
    }

    /// The identity polynomial `x`.
    pub fn var() -> Self {
        UniPoly::monomial(R::one(), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// Coefficient of `x^k`, zero beyond the stored length.
    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    /// Leading coefficient; `None` for the zero polynomial.
    pub fn leading(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k).add(&rhs.coeff(k)));
        }
        UniPoly::new(out)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k).sub(&rhs.coeff(k)));
        }
        UniPoly::new(out)
    }

    pub fn neg(&self) -> Self {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        UniPoly::new(out)
    }

    pub fn scale(&self, c: &R) -> Self {
        UniPoly::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = UniPoly::one();
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    /// Formal derivative with respect to the polynomial's own variable.
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.mul(&R::from_i64(k as i64)))
            .collect();
        UniPoly::new(coeffs)
    }

    /// Horner evaluation at a point of the coefficient ring.
    pub fn eval(&self, at: &R) -> R {
        let mut acc = R::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(at).add(c);
        }
        acc
    }

    /// The polynomial `p(-x)`.
    pub fn reflect(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 1 { c.neg() } else { c.clone() })
            .collect();
        UniPoly { coeffs }
    }
}

impl UniPoly<Rational> {
    /// Convenience constructor from small integers, ascending degree.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        UniPoly::new(coeffs.iter().map(|&c| Rational::from_integer(c)).collect())
    }
}

impl<F: Field> UniPoly<F> {
    /// Euclidean division: `self = q * g + r` with `deg r < deg g`.
    pub fn divrem(&self, g: &Self) -> Result<(Self, Self)> {
        if g.is_zero() {
            return Err(Error::DivisionByZeroPoly);
        }
        let dg = g.degree().expect("nonzero divisor");
        let lead_inv = g.leading().expect("nonzero divisor").inv();
        let mut rem = self.clone();
        let mut quot = vec![F::zero(); self.coeffs.len().saturating_sub(dg)];
        while let Some(dr) = rem.degree() {
            if dr < dg {
                break;
            }
            let factor = rem.leading().unwrap().mul(&lead_inv);
            let shift = dr - dg;
            quot[shift] = factor.clone();
            // rem -= factor * x^shift * g, dropping the cancelled top term
            let mut coeffs = rem.coeffs;
            for (k, gc) in g.coeffs.iter().enumerate() {
                coeffs[shift + k] = coeffs[shift + k].sub(&factor.mul(gc));
            }
            rem = UniPoly::new(coeffs);
        }
        Ok((UniPoly::new(quot), rem))
    }

    pub fn rem(&self, g: &Self) -> Result<Self> {
        Ok(self.divrem(g)?.1)
    }

    /// Monic greatest common divisor (1 for coprime inputs, 0 only if both
    /// inputs are 0).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.divrem(&b).expect("nonzero divisor").1;
            a = b;
            b = r;
        }
        match a.leading() {
            Some(lead) => a.scale(&lead.inv()),
            None => a,
        }
    }

    /// `self / gcd(self, self')`: same roots, all simple.
    pub fn squarefree_part(&self) -> Self {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            return self.clone();
        }
        let (q, r) = self.divrem(&g).expect("gcd divides");
        debug_assert!(r.is_zero());
        q
    }
}

impl<R: Ring> Ring for UniPoly<R> {
    fn zero() -> Self {
        UniPoly::zero()
    }

    fn one() -> Self {
        UniPoly::one()
    }

    fn add(&self, rhs: &Self) -> Self {
        UniPoly::add(self, rhs)
    }

    fn sub(&self, rhs: &Self) -> Self {
        UniPoly::sub(self, rhs)
    }

    fn mul(&self, rhs: &Self) -> Self {
        UniPoly::mul(self, rhs)
    }

    fn neg(&self) -> Self {
        UniPoly::neg(self)
    }

    fn from_i64(value: i64) -> Self {
        UniPoly::constant(R::from_i64(value))
    }

    fn is_zero(&self) -> bool {
        UniPoly::is_zero(self)
    }
}

impl<F: Field> ExactDiv for UniPoly<F> {
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        let (q, r) = self.divrem(rhs).ok()?;
        r.is_zero().then_some(q)
    }
}

impl<R: QScalar> QScalar for UniPoly<R> {
    fn scale_q(&self, q: &Rational) -> Self {
        UniPoly::new(self.coeffs.iter().map(|c| c.scale_q(q)).collect())
    }
}

impl<R: Ring + fmt::Display> fmt::Display for UniPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{k}")?,
            }
        }
        Ok(())
    }
}

impl<R: Ring> fmt::Debug for UniPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.coeffs).finish()
    }
}

impl<R: Ring + Serialize> Serialize for UniPoly<R> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(c)?;
        }
        seq.end()
    }
}

impl<'de, R: Ring + Deserialize<'de>> Deserialize<'de> for UniPoly<R> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct V<R>(std::marker::PhantomData<R>);
        impl<'de, R: Ring + Deserialize<'de>> Visitor<'de> for V<R> {
            type Value = UniPoly<R>;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "an array of coefficients by ascending degree")
            }

            fn visit_seq<A: SeqAccess<'de>>(
                self,
                mut seq: A,
            ) -> std::result::Result<Self::Value, A::Error> {
                let mut coeffs = Vec::new();
                while let Some(c) = seq.next_element()? {
                    coeffs.push(c);
                }
                Ok(UniPoly::new(coeffs))
            }
        }
        deserializer.deserialize_seq(V(std::marker::PhantomData))
    }
}
