//! Bezoutian laws, checked against an independent construction.
//!
//! The library builds Bezoutians by bilinear expansion over monomial
//! Bezoutians. The oracle here instead forms `f1(x) f2(y) - f1(y) f2(x)`
//! as a polynomial in `y` over Q[x], divides by `x - y` synthetically,
//! and reads the matrix off the bivariate coefficients.

mod common;

use bezroot_core::bezout::{bezout_matrix, bezout_of};
use bezroot_core::{Rational, SqMatrix, SymMatrix, UniPoly};
use common::*;

/// Bezoutian via bivariate division, entirely independent of the library
/// construction path.
fn bezout_by_division(
    f1: &UniPoly<Rational>,
    f2: &UniPoly<Rational>,
    n: usize,
) -> SymMatrix<Rational> {
    let x = UniPoly::<Rational>::var();
    // numerator(y) = f1(x) f2(y) - f1(y) f2(x), coefficients in Q[x]
    let len = n + 1;
    let numerator: Vec<UniPoly<Rational>> = (0..len)
        .map(|k| f1.scale(&f2.coeff(k)).sub(&f2.scale(&f1.coeff(k))))
        .collect();
    // divide by (x - y) = -(y - x): synthetic division in y at root x,
    // then negate. q_{k} = n_{k+1} + x * q_{k+1}, remainder must vanish.
    let mut quotient: Vec<UniPoly<Rational>> = vec![UniPoly::zero(); len];
    let mut carry = UniPoly::zero();
    for k in (1..len).rev() {
        carry = numerator[k].add(&carry.mul(&x));
        quotient[k - 1] = carry.clone();
    }
    let remainder = numerator[0].add(&carry.mul(&x));
    assert!(remainder.is_zero(), "x - y must divide the numerator");
    let quotient: Vec<UniPoly<Rational>> = quotient.into_iter().map(|p| p.neg()).collect();
    // quotient[j] is the coefficient of y^j, a polynomial in x;
    // entry (i, j) (1-based) is the coefficient of x^(n-i) y^(n-j)
    let mut m = SqMatrix::zero(n);
    for i in 0..n {
        for j in 0..n {
            m.set(i, j, quotient[n - 1 - j].coeff(n - 1 - i));
        }
    }
    SymMatrix::new(m).expect("oracle Bezoutian is symmetric")
}

#[test]
fn construction_matches_bivariate_division_oracle() {
    let mut rng = rng(0xBE2);
    for _ in 0..200 {
        let d1 = rand::Rng::random_range(&mut rng, 1..=6);
        let d2 = rand::Rng::random_range(&mut rng, 0..=6);
        let f1 = rand_poly_exact_degree(&mut rng, d1);
        let f2 = rand_poly_exact_degree(&mut rng, d2);
        let n = d1.max(d2) + rand::Rng::random_range(&mut rng, 0..=2);
        let lib = bezout_matrix(&f1, &f2, n).unwrap();
        let oracle = bezout_by_division(&f1, &f2, n);
        assert_eq!(lib, oracle, "f1={f1:?}, f2={f2:?}, n={n}");
    }
}

#[test]
fn symmetry_bilinearity_antisymmetry() {
    let mut rng = rng(0x1B1);
    for _ in 0..200 {
        let f = rand_poly(&mut rng, 5);
        let g = rand_poly(&mut rng, 5);
        let h = rand_poly(&mut rng, 5);
        let a = rand_rational(&mut rng);
        let b = rand_rational(&mut rng);
        let n = 6;

        // symmetry comes from the SymMatrix return type; spot-check anyway
        let m_fh = bezout_matrix(&f, &h, n).unwrap();
        assert!(m_fh.as_sq().is_symmetric());

        // linear in the first argument
        let combo = f.scale(&a).add(&g.scale(&b));
        let lhs = bezout_matrix(&combo, &h, n).unwrap();
        let rhs = SymMatrix::new(
            m_fh.as_sq()
                .scale(&a)
                .add(&bezout_matrix(&g, &h, n).unwrap().as_sq().scale(&b)),
        )
        .unwrap();
        assert_eq!(lhs, rhs);

        // antisymmetry in the argument pair
        let m_hf = bezout_matrix(&h, &f, n).unwrap();
        assert_eq!(
            m_hf.as_sq(),
            &m_fh.as_sq().scale(&Rational::from_integer(-1))
        );
    }
}

#[test]
fn reversed_variant_defines_the_same_quadratic_form() {
    // the reversed expansion is an anti-identity congruence, so both
    // index conventions carry the same inertia
    use bezroot_core::bezout::reversed_bezout;
    use bezroot_core::inertia::inertia_by_congruence;
    let mut rng = rng(0x4E7);
    for _ in 0..60 {
        let d = rand::Rng::random_range(&mut rng, 1..=6);
        let f = rand_poly_exact_degree(&mut rng, d);
        let m = bezout_of(&f, d).unwrap();
        let rev = reversed_bezout(&f, &f.derivative(), d).unwrap();
        assert_eq!(
            inertia_by_congruence(&m),
            inertia_by_congruence(&rev),
            "f = {f:?}"
        );
    }
}

/// Expected `M_n(x^n + t g(x))` over Q[t], assembled entry by entry from
/// the published block pattern: the top-left `n`, linear-in-`t`
/// anti-diagonal bands, and the seed Bezoutian times `t^2` bottom-right.
fn expected_symbolic_family_bezout(
    n: usize,
    g: &UniPoly<Rational>,
) -> SymMatrix<UniPoly<Rational>> {
    let s = g.degree().unwrap();
    let t = UniPoly::<Rational>::var();
    let t_sq = t.mul(&t);
    let seed_bezout = bezout_of(g, s).unwrap();
    let mut m: SqMatrix<UniPoly<Rational>> = SqMatrix::zero(n);
    m.set(0, 0, UniPoly::constant(Rational::from_integer(n as i64)));
    for k in 0..s {
        let value = t.scale(&(Rational::from_integer((s - k) as i64) * g.coeff(s - k)));
        m.set(0, n - s + k, value.clone());
        m.set(n - s + k, 0, value);
    }
    for i in 1..n {
        for j in 1..n {
            let mut value = UniPoly::zero();
            if i + j >= n - s && i + j <= n {
                let k = i + j - (n - s);
                if i < n - s + k && j < n - s + k {
                    value =
                        t.scale(&-(Rational::from_integer((n - s + k) as i64) * g.coeff(s - k)));
                }
            }
            if i >= n - s && j >= n - s {
                value = value.add(&t_sq.scale(seed_bezout.get(i - (n - s), j - (n - s))));
            }
            m.set(i, j, value);
        }
    }
    SymMatrix::new(m).unwrap()
}

#[test]
fn symbolic_family_bezout_matches_block_pattern() {
    let mut rng = rng(0xFA71);
    for _ in 0..40 {
        let n = rand::Rng::random_range(&mut rng, 2..=7);
        let s = rand::Rng::random_range(&mut rng, 1..n);
        let g = rand_poly_exact_degree(&mut rng, s);

        // library route: generic Bezoutian of x^n + t*g over Q[t]
        let mut coeffs: Vec<UniPoly<Rational>> =
            (0..=s).map(|k| UniPoly::monomial(g.coeff(k), 1)).collect();
        coeffs.resize(n + 1, UniPoly::zero());
        coeffs[n] = UniPoly::one();
        let family: UniPoly<UniPoly<Rational>> = UniPoly::new(coeffs);
        let computed = bezout_of(&family, n).unwrap();

        let expected = expected_symbolic_family_bezout(n, &g);
        assert_eq!(computed, expected, "n={n}, g={g:?}");
    }
}

#[test]
fn first_row_of_symbolic_family_bezout() {
    // a_{1,1} = n and a_{1, l_k - 1} = (s-k) r_{s-k} t, everything else 0
    let g = UniPoly::new(vec![q("2"), q("-1/3"), q("5")]);
    let n = 6;
    let s = 2;
    let mut coeffs: Vec<UniPoly<Rational>> =
        (0..=s).map(|k| UniPoly::monomial(g.coeff(k), 1)).collect();
    coeffs.resize(n + 1, UniPoly::zero());
    coeffs[n] = UniPoly::one();
    let a = bezout_of(&UniPoly::new(coeffs), n).unwrap();
    assert_eq!(a.get(0, 0), &UniPoly::constant(q("6")));
    for j in 1..n {
        let expected = if j >= n - s {
            let k = j - (n - s);
            UniPoly::<Rational>::var()
                .scale(&(Rational::from_integer((s - k) as i64) * g.coeff(s - k)))
        } else {
            UniPoly::zero()
        };
        assert_eq!(a.get(0, j), &expected, "column {j}");
    }
}
