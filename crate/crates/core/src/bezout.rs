//! Bezoutian matrices.
//!
//! For polynomials `f1`, `f2` and an order `n >= max(deg f1, deg f2)`, the
//! Bezoutian is the symmetric coefficient matrix `(a_ij)` of
//!
//! ```text
//! (f1(x) f2(y) - f1(y) f2(x)) / (x - y)  =  sum a_ij x^(n-i) y^(n-j)
//! ```
//!
//! (indices 1-based). The construction here expands bilinearly over
//! monomial Bezoutians, which keeps the whole code path free of bivariate
//! polynomials and works over any coefficient ring; direct bivariate
//! division is used as an independent oracle in the test suite.

use crate::error::{Error, Result};
use crate::matrix::{SqMatrix, SymMatrix};
use crate::poly::UniPoly;
use crate::rational::Rational;
use crate::ring::Ring;

/// The Bezoutian of the monomial pair `(x^mu, x^nu)` at order `lambda`,
/// for `lambda >= mu > nu >= 0`: ones exactly on the anti-diagonal
/// segment `i + j = 2*lambda - (mu + nu) + 1`,
/// `lambda - mu + 1 <= i, j <= lambda - nu` (1-based).
pub fn bezout_monomial(lambda: usize, mu: usize, nu: usize) -> Result<SymMatrix<Rational>> {
    if !(lambda >= mu && mu > nu) {
        return Err(Error::BadExponents { lambda, mu, nu });
    }
    let mut m = SqMatrix::zero(lambda);
    add_monomial(&mut m, lambda, mu, nu, &Rational::one());
    Ok(SymMatrix::new_unchecked(m))
}

/// Adds `c` times the monomial Bezoutian of `(x^mu, x^nu)` into `m`
/// (order `lambda`), assuming `lambda >= mu > nu >= 0`.
fn add_monomial<R: Ring>(m: &mut SqMatrix<R>, lambda: usize, mu: usize, nu: usize, c: &R) {
    // 0-based: i + j = 2*lambda - (mu + nu) - 1, lambda - mu <= i, j <= lambda - nu - 1
    let sum = 2 * lambda - (mu + nu) - 1;
    let lo = lambda - mu;
    let hi = lambda - nu - 1;
    for i in lo..=hi {
        let j = sum - i;
        if (lo..=hi).contains(&j) {
            let cur = m.get(i, j).add(c);
            m.set(i, j, cur);
        }
    }
}

/// The Bezoutian matrix of `f1` and `f2` at order `n`.
pub fn bezout_matrix<R: Ring>(f1: &UniPoly<R>, f2: &UniPoly<R>, n: usize) -> Result<SymMatrix<R>> {
    let max_deg = f1.degree().unwrap_or(0).max(f2.degree().unwrap_or(0));
    if n < max_deg || n == 0 {
        return Err(Error::BadOrder { order: n, max_deg });
    }
    let mut m = SqMatrix::zero(n);
    for mu in 1..=max_deg {
        for nu in 0..mu {
            // B(f1, f2) picks up (a_mu b_nu - a_nu b_mu) * B(x^mu, x^nu)
            let c = f1
                .coeff(mu)
                .mul(&f2.coeff(nu))
                .sub(&f1.coeff(nu).mul(&f2.coeff(mu)));
            if !c.is_zero() {
                add_monomial(&mut m, n, mu, nu, &c);
            }
        }
    }
    debug_assert!(m.is_symmetric());
    Ok(SymMatrix::new_unchecked(m))
}

/// `bezout_matrix(f, f', n)`: the Bezoutian matrix of a single polynomial,
/// whose signature counts its distinct real roots.
pub fn bezout_of<R: Ring>(f: &UniPoly<R>, n: usize) -> Result<SymMatrix<R>> {
    match f.degree() {
        Some(d) if d >= 1 => bezout_matrix(f, &f.derivative(), n),
        d => Err(Error::DegreeTooSmall {
            degree: d.map_or(-1, |d| d as i64),
            min: 1,
        }),
    }
}

/// The variant whose generating expansion uses `x^(i-1) y^(j-1)`; equals
/// the congruence of `bezout_matrix` by the anti-identity, so it defines
/// an equivalent quadratic form.
pub fn reversed_bezout<R: Ring>(
    f1: &UniPoly<R>,
    f2: &UniPoly<R>,
    n: usize,
) -> Result<SymMatrix<R>> {
    let m = bezout_matrix(f1, f2, n)?;
    let mut out = SqMatrix::zero(n);
    for i in 0..n {
        for j in 0..n {
            out.set(i, j, m.get(n - 1 - i, n - 1 - j).clone());
        }
    }
    Ok(SymMatrix::new_unchecked(out))
}
