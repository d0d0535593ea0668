//! Sylvester resultants and discriminants.
//!
//! The resultant is the determinant of the Sylvester matrix; the
//! discriminant follows as `(-1)^(n(n-1)/2) Res(f, f') / led(f)`.
//! Everything is generic over an exact-division ring so the same code
//! computes discriminants of families with polynomial coefficients.

use serde::Serialize;

use crate::bezout::bezout_of;
use crate::error::{Error, Result};
use crate::matrix::SqMatrix;
use crate::poly::UniPoly;
use crate::rational::Rational;
use crate::ring::{ExactDiv, Ring};

/// The Sylvester matrix of two nonzero polynomials: `deg g` shifted rows
/// of `f`-coefficients followed by `deg f` shifted rows of
/// `g`-coefficients, each row stepping one column to the right.
#[derive(Clone, PartialEq, Debug)]
pub struct SylvesterMatrix<R: Ring> {
    matrix: SqMatrix<R>,
    f_rows: usize,
    g_rows: usize,
}

impl<R: Ring> SylvesterMatrix<R> {
    pub fn new(f: &UniPoly<R>, g: &UniPoly<R>) -> Result<Self> {
        let (Some(df), Some(dg)) = (f.degree(), g.degree()) else {
            return Err(Error::ZeroPolynomial);
        };
        let order = df + dg;
        let mut m = SqMatrix::zero(order);
        for r in 0..dg {
            for j in 0..=df {
                m.set(r, r + j, f.coeff(df - j));
            }
        }
        for r in 0..df {
            for j in 0..=dg {
                m.set(dg + r, r + j, g.coeff(dg - j));
            }
        }
        Ok(SylvesterMatrix {
            matrix: m,
            f_rows: dg,
            g_rows: df,
        })
    }

    pub fn order(&self) -> usize {
        self.matrix.order()
    }

    pub fn matrix(&self) -> &SqMatrix<R> {
        &self.matrix
    }
}

impl<R: ExactDiv> SylvesterMatrix<R> {
    pub fn determinant(&self) -> R {
        self.matrix.det_bareiss()
    }
}

/// `Res(f, g)`: zero exactly when `f` and `g` share a root (in an
/// algebraic closure). Under this row convention
/// `Res(x - a, x - b) = a - b`.
pub fn resultant<R: ExactDiv>(f: &UniPoly<R>, g: &UniPoly<R>) -> Result<R> {
    Ok(SylvesterMatrix::new(f, g)?.determinant())
}

/// Discriminant `(-1)^(n(n-1)/2) Res(f, f') / led(f)` for `deg f >= 2`;
/// vanishes exactly at repeated roots.
pub fn discriminant<R: ExactDiv>(f: &UniPoly<R>) -> Result<R> {
    let n = match f.degree() {
        Some(n) if n >= 2 => n,
        d => {
            return Err(Error::DegreeTooSmall {
                degree: d.map_or(-1, |d| d as i64),
                min: 2,
            })
        }
    };
    let res = resultant(f, &f.derivative())?;
    let led = f.leading().expect("nonzero by degree check");
    let quot = res
        .exact_div(led)
        .expect("the leading coefficient divides Res(f, f')");
    Ok(if (n * (n - 1) / 2) % 2 == 1 {
        quot.neg()
    } else {
        quot
    })
}

/// Side-by-side determinant of the Bezoutian matrix and discriminant.
///
/// For monic `f` the two agree exactly; in general
/// `det M_n(f) = led(f)^2 * disc(f)` (the ratio is reported, not assumed).
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct BezoutDiscCheck {
    pub det_bezout: Rational,
    pub disc: Rational,
    /// `det_bezout / disc`, absent when the discriminant vanishes.
    pub ratio: Option<Rational>,
}

pub fn bezout_disc_check(f: &UniPoly<Rational>) -> Result<BezoutDiscCheck> {
    let n = match f.degree() {
        Some(n) if n >= 2 => n,
        d => {
            return Err(Error::DegreeTooSmall {
                degree: d.map_or(-1, |d| d as i64),
                min: 2,
            })
        }
    };
    let det_bezout = bezout_of(f, n)?.as_sq().det_bareiss();
    let disc = discriminant(f)?;
    let ratio = det_bezout.exact_div(&disc);
    Ok(BezoutDiscCheck {
        det_bezout,
        disc,
        ratio,
    })
}

/// Discriminant of the family `x^n + t*g(x)` with respect to `x`, as a
/// polynomial in `t`, together with its `t`-free part.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct DiscInT {
    /// The discriminant itself, an element of `Q[t]`.
    pub full: UniPoly<Rational>,
    /// `full` with the maximal power of `t` divided out.
    pub stripped: UniPoly<Rational>,
    /// The maximal `k` with `t^k` dividing `full`.
    pub t_power: usize,
    /// `n - 1`, the power the restated theorem divides out.
    pub corollary_power: usize,
}

pub fn disc_in_t(n: usize, g: &UniPoly<Rational>) -> Result<DiscInT> {
    let s = match g.degree() {
        Some(s) if s >= 1 => s,
        _ => return Err(Error::DegenerateFamily),
    };
    if n <= s {
        return Err(Error::DegreeOrder { n, s: s as i64 });
    }
    // f = x^n + t*g(x) as an element of Q[t][x]
    let mut coeffs: Vec<UniPoly<Rational>> =
        (0..=s).map(|k| UniPoly::monomial(g.coeff(k), 1)).collect();
    coeffs.resize(n + 1, UniPoly::zero());
    coeffs[n] = UniPoly::one();
    let family: UniPoly<UniPoly<Rational>> = UniPoly::new(coeffs);

    let full = discriminant(&family)?;
    if full.is_zero() {
        return Err(Error::IdenticallyZero);
    }
    let t_power = full
        .coeffs()
        .iter()
        .position(|c| !c.is_zero())
        .expect("nonzero polynomial");
    let stripped = UniPoly::new(full.coeffs()[t_power..].to_vec());
    debug_assert!(t_power >= n - s - 1);
    Ok(DiscInT {
        full,
        stripped,
        t_power,
        corollary_power: n - 1,
    })
}
