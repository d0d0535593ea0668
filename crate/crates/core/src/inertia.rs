//! Exact inertia of symmetric rational matrices.
//!
//! Two independent algorithms are shipped and cross-validated: symmetric
//! congruence diagonalization (the fast default) and a division-free
//! characteristic polynomial combined with Descartes' rule, which is exact
//! here because a symmetric real matrix has an all-real spectrum. The
//! charpoly route is also the only one available for symbolic entries.

// simultaneous row/column updates read clearest with plain indices
#![allow(clippy::needless_range_loop)]

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::matrix::{SqMatrix, SymMatrix};
use crate::poly::UniPoly;
use crate::rational::Rational;
use crate::ring::Ring;

/// Counts of positive, negative, and zero eigenvalues of a symmetric
/// matrix. `pos + neg + zero` equals the matrix order and
/// `signature = pos - neg`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Inertia {
    pub pos: usize,
    pub neg: usize,
    pub zero: usize,
}

impl Inertia {
    pub fn order(&self) -> usize {
        self.pos + self.neg + self.zero
    }

    pub fn signature(&self) -> i64 {
        self.pos as i64 - self.neg as i64
    }

    pub fn rank(&self) -> usize {
        self.pos + self.neg
    }
}

impl Serialize for Inertia {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Inertia", 4)?;
        st.serialize_field("pos", &self.pos)?;
        st.serialize_field("neg", &self.neg)?;
        st.serialize_field("zero", &self.zero)?;
        st.serialize_field("signature", &self.signature())?;
        st.end()
    }
}

fn swap_row_col(a: &mut [Vec<Rational>], i: usize, j: usize) {
    a.swap(i, j);
    for row in a.iter_mut() {
        row.swap(i, j);
    }
}

/// `row i += row j`, then `col i += col j`; a congruence that turns a zero
/// diagonal entry into `2 * a[i][j]`.
fn fold_row_col(a: &mut [Vec<Rational>], i: usize, j: usize) {
    let n = a.len();
    for c in 0..n {
        a[i][c] = a[i][c].add(&a[j][c].clone());
    }
    for r in 0..n {
        a[r][i] = a[r][i].add(&a[r][j].clone());
    }
}

/// Inertia by simultaneous row/column elimination.
///
/// When the current diagonal entry vanishes, a later nonzero diagonal
/// entry is swapped in; when the whole remaining diagonal vanishes, the
/// lexicographically smallest nonzero off-diagonal entry `(i, j)` is used
/// by folding row/column `j` into `i`. All steps are congruences, so the
/// diagonal signs at the end give the inertia.
pub fn inertia_by_congruence(m: &SymMatrix<Rational>) -> Inertia {
    let n = m.order();
    let mut a = m.as_sq().rows();
    let mut inertia = Inertia {
        pos: 0,
        neg: 0,
        zero: 0,
    };
    let mut k = 0;
    while k < n {
        if a[k][k].is_zero() {
            if let Some(i) = (k + 1..n).find(|&i| !a[i][i].is_zero()) {
                swap_row_col(&mut a, k, i);
            } else {
                let off = (k..n)
                    .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
                    .find(|&(i, j)| !a[i][j].is_zero());
                match off {
                    Some((i, j)) => {
                        fold_row_col(&mut a, i, j);
                        if i != k {
                            swap_row_col(&mut a, k, i);
                        }
                    }
                    None => {
                        inertia.zero += n - k;
                        return inertia;
                    }
                }
            }
        }
        let pivot = a[k][k].clone();
        if pivot.is_positive() {
            inertia.pos += 1;
        } else {
            inertia.neg += 1;
        }
        for r in (k + 1)..n {
            if a[r][k].is_zero() {
                continue;
            }
            let f = &a[r][k] / &pivot;
            for c in k..n {
                a[r][c] = a[r][c].sub(&f.mul(&a[k][c].clone()));
            }
            for rr in k..n {
                a[rr][r] = a[rr][r].sub(&f.mul(&a[rr][k].clone()));
            }
        }
        k += 1;
    }
    inertia
}

/// Monic characteristic polynomial `det(xI - M)` by the Berkowitz
/// division-free scheme, so it works over any commutative ring, in
/// particular over polynomial entries.
pub fn charpoly<R: Ring>(m: &SqMatrix<R>) -> UniPoly<R> {
    let n = m.order();
    if n == 0 {
        return UniPoly::one();
    }
    // Coefficients by descending powers of x, starting with det(x - a00).
    let mut coeffs = vec![R::one(), m.get(0, 0).neg()];
    for i in 1..n {
        // Toeplitz column [1, -a_ii, -(R S), -(R M S), ..., -(R M^(i-1) S)]
        // where M is the leading i x i block, R the row to its left,
        // S the column above a_ii.
        let mut toeplitz = Vec::with_capacity(i + 2);
        toeplitz.push(R::one());
        toeplitz.push(m.get(i, i).neg());
        let row: Vec<R> = (0..i).map(|j| m.get(i, j).clone()).collect();
        let mut v: Vec<R> = (0..i).map(|j| m.get(j, i).clone()).collect();
        for step in 0..i {
            let dot = row
                .iter()
                .zip(&v)
                .fold(R::zero(), |acc, (r, x)| acc.add(&r.mul(x)));
            toeplitz.push(dot.neg());
            if step + 1 < i {
                let mut next = vec![R::zero(); i];
                for (r, slot) in next.iter_mut().enumerate() {
                    let mut acc = R::zero();
                    for c in 0..i {
                        acc = acc.add(&m.get(r, c).mul(&v[c]));
                    }
                    *slot = acc;
                }
                v = next;
            }
        }
        let mut next = vec![R::zero(); coeffs.len() + 1];
        for (p, slot) in next.iter_mut().enumerate() {
            let mut acc = R::zero();
            for (q, c) in coeffs.iter().enumerate() {
                if p >= q && p - q < toeplitz.len() {
                    acc = acc.add(&toeplitz[p - q].mul(c));
                }
            }
            *slot = acc;
        }
        coeffs = next;
    }
    coeffs.reverse();
    UniPoly::new(coeffs)
}

/// Inertia read off the characteristic polynomial: the multiplicity of the
/// root 0 gives the zero count, and Descartes' rule on the remaining
/// factor is exact because every root is real.
pub fn inertia_by_charpoly(m: &SymMatrix<Rational>) -> Inertia {
    let n = m.order();
    let cp = charpoly(m.as_sq());
    let coeffs = cp.coeffs();
    let zero = coeffs
        .iter()
        .position(|c| !c.is_zero())
        .expect("characteristic polynomial is monic, hence nonzero");
    let mut variations = 0;
    let mut last_sign = 0;
    for c in &coeffs[zero..] {
        let s = c.signum();
        if s == 0 {
            continue;
        }
        if last_sign != 0 && s != last_sign {
            variations += 1;
        }
        last_sign = s;
    }
    Inertia {
        pos: variations,
        neg: n - zero - variations,
        zero,
    }
}
