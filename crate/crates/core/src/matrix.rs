//! Square and symmetric matrices over exact coefficient rings.
//!
//! Symmetric matrices get their own wrapper type so inertia computations
//! can demand symmetry at the type level; elementary congruence factors
//! (scalings and shears) stay plain square matrices.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::ring::{ExactDiv, Field, Ring};

/// A dense square matrix, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct SqMatrix<R: Ring> {
    n: usize,
    entries: Vec<R>,
}

impl<R: Ring> SqMatrix<R> {
    pub fn zero(n: usize) -> Self {
        SqMatrix {
            n,
            entries: vec![R::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = SqMatrix::zero(n);
        for i in 0..n {
            *m.at_mut(i, i) = R::one();
        }
        m
    }

    /// The anti-identity with ones on the anti-diagonal.
    pub fn anti_identity(n: usize) -> Self {
        let mut m = SqMatrix::zero(n);
        for i in 0..n {
            *m.at_mut(i, n - 1 - i) = R::one();
        }
        m
    }

    /// Identity with entry `(k, k)` replaced by `c`.
    pub fn elementary_scaling(n: usize, k: usize, c: R) -> Self {
        let mut m = SqMatrix::identity(n);
        *m.at_mut(k, k) = c;
        m
    }

    /// Identity plus `c` at `(k, l)`, `k != l`. Congruence by this matrix
    /// adds `c` times row/column `k` into row/column `l`.
    pub fn elementary_shear(n: usize, k: usize, l: usize, c: R) -> Self {
        assert!(k != l, "shear indices must differ");
        let mut m = SqMatrix::identity(n);
        *m.at_mut(k, l) = c;
        m
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in &rows {
            if row.len() != n {
                return Err(Error::MalformedMatrix {
                    reason: format!("expected {n} columns, found a row with {}", row.len()),
                });
            }
            entries.extend(row.iter().cloned());
        }
        Ok(SqMatrix { n, entries })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.entries[i * self.n + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut R {
        &mut self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: R) {
        self.entries[i * self.n + j] = value;
    }

    pub fn rows(&self) -> Vec<Vec<R>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j).clone()).collect())
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let mut m = SqMatrix::zero(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                m.set(j, i, self.get(i, j).clone());
            }
        }
        m
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "order mismatch");
        let mut out: SqMatrix<R> = SqMatrix::zero(self.n);
        for i in 0..self.n {
            for k in 0..self.n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..self.n {
                    let add = a.mul(rhs.get(k, j));
                    let cur = out.get(i, j).add(&add);
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "order mismatch");
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a.add(b))
            .collect();
        SqMatrix { n: self.n, entries }
    }

    pub fn scale(&self, c: &R) -> Self {
        SqMatrix {
            n: self.n,
            entries: self.entries.iter().map(|e| e.mul(c)).collect(),
        }
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> SqMatrix<S> {
        SqMatrix {
            n: self.n,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    /// First asymmetric position, if any.
    pub fn symmetry_defect(&self) -> Option<(usize, usize)> {
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                if self.get(i, j) != self.get(j, i) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetry_defect().is_none()
    }

    /// `S^T * self * S`.
    pub fn congruence(&self, s: &Self) -> Self {
        s.transpose().mul(self).mul(s)
    }
}

impl<R: ExactDiv> SqMatrix<R> {
    /// Fraction-free (Bareiss) determinant; every intermediate division is
    /// exact, so this works over polynomial entries without fractions.
    pub fn det_bareiss(&self) -> R {
        let n = self.n;
        if n == 0 {
            return R::one();
        }
        let mut a = self.rows();
        let mut negate = false;
        let mut prev = R::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(k, i);
                        negate = !negate;
                    }
                    None => return R::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = a[k][k].mul(&a[i][j]).sub(&a[i][k].mul(&a[k][j]));
                    a[i][j] = num
                        .exact_div(&prev)
                        .expect("fraction-free elimination divides exactly");
                }
                a[i][k] = R::zero();
            }
            prev = a[k][k].clone();
        }
        let det = a[n - 1][n - 1].clone();
        if negate {
            det.neg()
        } else {
            det
        }
    }
}

impl<R: Field> SqMatrix<R> {
    /// Rank by Gaussian elimination; exact over a field.
    pub fn rank(&self) -> usize {
        let n = self.n;
        let mut a = self.rows();
        let mut rank = 0;
        for col in 0..n {
            let Some(pivot_row) = (rank..n).find(|&i| !a[i][col].is_zero()) else {
                continue;
            };
            a.swap(rank, pivot_row);
            let inv = a[rank][col].inv();
            for i in rank + 1..n {
                if a[i][col].is_zero() {
                    continue;
                }
                let f = a[i][col].mul(&inv);
                #[allow(clippy::needless_range_loop)]
                for j in col..n {
                    a[i][j] = a[i][j].sub(&f.mul(&a[rank][j]));
                }
            }
            rank += 1;
            if rank == n {
                break;
            }
        }
        rank
    }

    pub fn is_invertible(&self) -> bool {
        self.rank() == self.n
    }
}

impl<R: Ring + fmt::Debug> fmt::Debug for SqMatrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.n {
            write!(f, "  [")?;
            for j in 0..self.n {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{:?}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// A square matrix that is symmetric by construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymMatrix<R: Ring>(SqMatrix<R>);

impl<R: Ring> SymMatrix<R> {
    pub fn new(m: SqMatrix<R>) -> Result<Self> {
        match m.symmetry_defect() {
            Some((row, col)) => Err(Error::NotSymmetric { row, col }),
            None => Ok(SymMatrix(m)),
        }
    }

    /// For results that are symmetric by an exact-arithmetic argument
    /// (congruences of symmetric matrices, scalings); checked in debug.
    pub(crate) fn new_unchecked(m: SqMatrix<R>) -> Self {
        debug_assert!(m.is_symmetric());
        SymMatrix(m)
    }

    pub fn order(&self) -> usize {
        self.0.order()
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        self.0.get(i, j)
    }

    pub fn as_sq(&self) -> &SqMatrix<R> {
        &self.0
    }

    pub fn into_sq(self) -> SqMatrix<R> {
        self.0
    }

    pub fn scale(&self, c: &R) -> Self {
        SymMatrix::new_unchecked(self.0.scale(c))
    }

    pub fn add(&self, rhs: &Self) -> Self {
        SymMatrix::new_unchecked(self.0.add(rhs.as_sq()))
    }

    /// `S^T * self * S`; symmetric for any `S`.
    pub fn congruence(&self, s: &SqMatrix<R>) -> Self {
        SymMatrix::new_unchecked(self.0.congruence(s))
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixRepr<R> {
    order: usize,
    entries: Vec<Vec<R>>,
}

impl<R: Ring + Serialize> Serialize for SqMatrix<R> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixRepr {
            order: self.n,
            entries: self.rows(),
        }
        .serialize(serializer)
    }
}

impl<'de, R: Ring + Deserialize<'de>> Deserialize<'de> for SqMatrix<R> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = MatrixRepr::<R>::deserialize(deserializer)?;
        if repr.entries.len() != repr.order {
            return Err(serde::de::Error::custom(format!(
                "expected {} rows, found {}",
                repr.order,
                repr.entries.len()
            )));
        }
        SqMatrix::from_rows(repr.entries).map_err(serde::de::Error::custom)
    }
}

impl<R: Ring + Serialize> Serialize for SymMatrix<R> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

impl<'de, R: Ring + Deserialize<'de>> Deserialize<'de> for SymMatrix<R> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let m = SqMatrix::<R>::deserialize(deserializer)?;
        SymMatrix::new(m).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::UniPoly;
    use crate::rational::Rational;

    fn mat(rows: &[&[i64]]) -> SqMatrix<Rational> {
        SqMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Rational::from_integer(v)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn determinant_small_cases() {
        assert_eq!(mat(&[&[2]]).det_bareiss(), Rational::from_integer(2));
        assert_eq!(
            mat(&[&[1, 2], &[3, 4]]).det_bareiss(),
            Rational::from_integer(-2)
        );
        assert_eq!(
            mat(&[&[0, 1, 2], &[1, 0, 3], &[4, 5, 0]]).det_bareiss(),
            Rational::from_integer(22)
        );
        assert_eq!(
            mat(&[&[1, 2], &[2, 4]]).det_bareiss(),
            Rational::from_integer(0)
        );
    }

    #[test]
    fn determinant_over_polynomial_entries() {
        // det [[t, 1], [1, t]] = t^2 - 1
        let t = UniPoly::<Rational>::var();
        let one = UniPoly::<Rational>::one();
        let m = SqMatrix::from_rows(vec![
            vec![t.clone(), one.clone()],
            vec![one.clone(), t.clone()],
        ])
        .unwrap();
        assert_eq!(m.det_bareiss(), UniPoly::from_ints(&[-1, 0, 1]));
    }

    #[test]
    fn congruence_by_shear_moves_rows_and_columns() {
        let m = mat(&[&[1, 2], &[2, 5]]);
        // add (-2) * row/col 0 into row/col 1: clears the off-diagonal
        let s = SqMatrix::elementary_shear(2, 0, 1, Rational::from_integer(-2));
        let out = m.congruence(&s);
        assert_eq!(out, mat(&[&[1, 0], &[0, 1]]));
    }

    #[test]
    fn rank_and_invertibility() {
        assert_eq!(mat(&[&[1, 2], &[2, 4]]).rank(), 1);
        assert_eq!(mat(&[&[1, 2], &[3, 4]]).rank(), 2);
        assert_eq!(SqMatrix::<Rational>::zero(3).rank(), 0);
        assert!(mat(&[&[0, 1], &[1, 0]]).is_invertible());
    }

    #[test]
    fn symmetry_is_enforced() {
        assert!(SymMatrix::new(mat(&[&[1, 2], &[2, 1]])).is_ok());
        assert_eq!(
            SymMatrix::new(mat(&[&[1, 2], &[3, 1]])),
            Err(Error::NotSymmetric { row: 0, col: 1 })
        );
    }

    #[test]
    fn matrix_serde_schema() {
        let m = mat(&[&[1, 2], &[2, 0]]);
        let json = serde_json::to_string(&m).unwrap();
        assert_eq!(
            json,
            "{\"order\":2,\"entries\":[[\"1\",\"2\"],[\"2\",\"0\"]]}"
        );
        let sym: SymMatrix<Rational> = serde_json::from_str(&json).unwrap();
        assert_eq!(sym.as_sq(), &m);
        assert!(serde_json::from_str::<SymMatrix<Rational>>(
            "{\"order\":2,\"entries\":[[\"1\",\"2\"],[\"3\",\"0\"]]}"
        )
        .is_err());
    }
}
