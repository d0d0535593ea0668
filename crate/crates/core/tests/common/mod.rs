//! Shared helpers for deterministic randomized tests.
#![allow(dead_code)] // each test binary uses a different subset

use bezroot_core::{Rational, SqMatrix, SymMatrix, UniPoly};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q(s: &str) -> Rational {
    s.parse().unwrap()
}

/// Uniform over numerators -9..=9, denominators 1..=9.
pub fn rand_rational(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(rng.random_range(-9..=9), rng.random_range(1..=9))
}

pub fn rand_nonzero_rational(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let r = rand_rational(rng);
        if !r.is_zero() {
            return r;
        }
    }
}

/// Random polynomial of exactly the given degree.
pub fn rand_poly_exact_degree(rng: &mut ChaCha8Rng, degree: usize) -> UniPoly<Rational> {
    let mut coeffs: Vec<Rational> = (0..=degree).map(|_| rand_rational(rng)).collect();
    coeffs[degree] = rand_nonzero_rational(rng);
    UniPoly::new(coeffs)
}

/// Random polynomial of degree at most `max_degree` (possibly zero).
pub fn rand_poly(rng: &mut ChaCha8Rng, max_degree: usize) -> UniPoly<Rational> {
    let d = rng.random_range(0..=max_degree);
    UniPoly::new((0..=d).map(|_| rand_rational(rng)).collect())
}

/// Random symmetric rational matrix of the given order.
pub fn rand_symmetric(rng: &mut ChaCha8Rng, order: usize) -> SymMatrix<Rational> {
    let mut m = SqMatrix::zero(order);
    for i in 0..order {
        for j in i..order {
            let v = rand_rational(rng);
            m.set(i, j, v.clone());
            m.set(j, i, v);
        }
    }
    SymMatrix::new(m).unwrap()
}

/// Random invertible rational matrix (rejection sampled).
pub fn rand_invertible(rng: &mut ChaCha8Rng, order: usize) -> SqMatrix<Rational> {
    loop {
        let mut m = SqMatrix::zero(order);
        for i in 0..order {
            for j in 0..order {
                m.set(i, j, rand_rational(rng));
            }
        }
        if m.is_invertible() {
            return m;
        }
    }
}
