//! The one-parameter family `f(t; x) = x^n + t * g(x)`.
//!
//! Given a separable seed polynomial `g` with `gamma` distinct real roots,
//! the distinct-real-root count of `f(xi; x)` is fully determined once
//! `xi` clears every real root of `det M_n(f(t; x))`: it is `gamma + 1`
//! when `n - deg g` is odd, `gamma` when even with positive leading seed
//! coefficient, and `gamma + 2` when even with negative one. This module
//! builds the family, computes the thresholds exactly, predicts the
//! count, and verifies predictions by two independent routes (Sturm
//! counting and Bezoutian signature). It also constructs polynomials with
//! no real roots at all and carries the supporting matrix identities used
//! to certify the pipeline.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bezout::bezout_of;
use crate::error::{Error, Result};
use crate::inertia::{charpoly, inertia_by_congruence, Inertia};
use crate::matrix::{SqMatrix, SymMatrix};
use crate::poly::UniPoly;
use crate::rational::Rational;
use crate::realroots::{
    count_real_roots, isolate_real_roots, strict_upper_rational, IsolatingInterval, RootBoundMode,
};
use crate::resdisc::{disc_in_t, discriminant};
use crate::ring::{QScalar, Ring};

/// A validated family `x^n + t * g(x)`: `n > deg g >= 1`, the seed `g`
/// separable with nonzero leading coefficient.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct FamilySpec {
    n: usize,
    /// Seed coefficients by ascending degree.
    r: Vec<Rational>,
}

/// Validates the family data and counts the seed's distinct real roots.
pub fn build_family(n: usize, g: &UniPoly<Rational>) -> Result<(FamilySpec, usize)> {
    let s = match g.degree() {
        Some(s) if s >= 1 => s,
        _ => return Err(Error::DegenerateFamily),
    };
    if n <= s {
        return Err(Error::DegreeOrder { n, s: s as i64 });
    }
    if s >= 2 && discriminant(g)?.is_zero() {
        return Err(Error::NotSeparable);
    }
    let gamma = count_real_roots(g, None, None)?;
    Ok((
        FamilySpec {
            n,
            r: g.coeffs().to_vec(),
        },
        gamma,
    ))
}

impl FamilySpec {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Degree of the seed polynomial.
    pub fn s(&self) -> usize {
        self.r.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.r
    }

    pub fn seed_poly(&self) -> UniPoly<Rational> {
        UniPoly::new(self.r.clone())
    }

    /// Leading seed coefficient (nonzero by construction).
    pub fn leading_coeff(&self) -> &Rational {
        &self.r[self.r.len() - 1]
    }

    /// Number of distinct real roots of the seed.
    pub fn gamma(&self) -> usize {
        count_real_roots(&self.seed_poly(), None, None).expect("seed is nonzero")
    }

    /// The member `x^n + xi * g(x)`.
    pub fn member_at(&self, xi: &Rational) -> UniPoly<Rational> {
        let mut coeffs = vec![Rational::zero(); self.n + 1];
        for (k, c) in self.r.iter().enumerate() {
            coeffs[k] = c.mul(xi);
        }
        coeffs[self.n] = Rational::one();
        UniPoly::new(coeffs)
    }

    /// The family itself as an element of `Q[t][x]`.
    pub fn member_symbolic(&self) -> UniPoly<UniPoly<Rational>> {
        let mut coeffs: Vec<UniPoly<Rational>> = self
            .r
            .iter()
            .map(|c| UniPoly::monomial(c.clone(), 1))
            .collect();
        coeffs.resize(self.n + 1, UniPoly::zero());
        coeffs[self.n] = UniPoly::one();
        UniPoly::new(coeffs)
    }
}

/// `det M_n(f(t; x))` as a polynomial in `t`, by fraction-free elimination
/// over `Q[t]`.
pub fn bezout_det_in_t(spec: &FamilySpec) -> UniPoly<Rational> {
    let m = bezout_of(&spec.member_symbolic(), spec.n()).expect("spec validated");
    m.as_sq().det_bareiss()
}

/// Isolating interval for the largest real root of `det M_n(f(t; x))`,
/// plus a rational strictly above it.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct DetMaxRoot {
    pub interval: IsolatingInterval,
    pub witness_above: Rational,
}

pub fn det_max_root(spec: &FamilySpec) -> Result<DetMaxRoot> {
    let p = bezout_det_in_t(spec);
    if p.is_zero() {
        return Err(Error::IdenticallyZero);
    }
    let intervals = isolate_real_roots(&p)?;
    let interval = intervals
        .last()
        .cloned()
        .expect("the determinant polynomial vanishes at t = 0");
    let witness_above = interval.hi.clone() + Rational::one();
    Ok(DetMaxRoot {
        interval,
        witness_above,
    })
}

/// Which exact root bound gates the prediction.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ThresholdMode {
    /// Beyond the largest real root of `det M_n(f(t; x))`.
    MaxRoot,
    /// Beyond the largest absolute value of a real root of the stripped
    /// discriminant (the conservative bound; the default).
    #[default]
    MaxAbsRoot,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Odd,
    Even,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CoeffSign {
    Positive,
    Negative,
}

/// The predicted distinct-real-root count of `f(xi; x)`, valid for every
/// `xi > threshold`.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct Prediction {
    pub gamma: usize,
    pub parity: Parity,
    pub sign_rs: CoeffSign,
    #[serde(rename = "predicted")]
    pub predicted_count: usize,
    pub threshold: Rational,
    pub threshold_mode: ThresholdMode,
}

/// A rational at least as large as every |real root| of `p`, exact when
/// the isolation pins roots.
fn max_abs_root_bound(p: &UniPoly<Rational>) -> Result<Rational> {
    let mut bound = Rational::zero();
    for iv in isolate_real_roots(p)? {
        let cand = iv.lo.abs().max(iv.hi.abs());
        if cand > bound {
            bound = cand;
        }
    }
    Ok(bound)
}

fn threshold_for(spec: &FamilySpec, mode: ThresholdMode) -> Result<Rational> {
    match mode {
        ThresholdMode::MaxRoot => {
            let top = det_max_root(spec)?;
            Ok(top.interval.hi)
        }
        ThresholdMode::MaxAbsRoot => {
            let d = disc_in_t(spec.n(), &spec.seed_poly())?;
            // reattach the root at t = 0 that stripping removed
            let with_zero = UniPoly::monomial(Rational::one(), 1).mul(&d.stripped);
            max_abs_root_bound(&with_zero)
        }
    }
}

/// Predicts the distinct-real-root count of `f(xi; x)` for
/// `xi > threshold`: `gamma + 1` when `n - s` is odd, else `gamma` or
/// `gamma + 2` depending on the sign of the leading seed coefficient.
pub fn predict(spec: &FamilySpec, mode: ThresholdMode) -> Result<Prediction> {
    let gamma = spec.gamma();
    let s = spec.s();
    let parity = if (spec.n() - s) % 2 == 1 {
        Parity::Odd
    } else {
        Parity::Even
    };
    let sign_rs = if spec.leading_coeff().is_positive() {
        CoeffSign::Positive
    } else {
        CoeffSign::Negative
    };
    let predicted_count = match (parity, sign_rs) {
        (Parity::Odd, _) => gamma + 1,
        (Parity::Even, CoeffSign::Positive) => gamma,
        (Parity::Even, CoeffSign::Negative) => gamma + 2,
    };
    let threshold = threshold_for(spec, mode)?;
    Ok(Prediction {
        gamma,
        parity,
        sign_rs,
        predicted_count,
        threshold,
        threshold_mode: mode,
    })
}

/// One evaluation point of a verification run.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct XiCheck {
    pub xi: Rational,
    pub sturm_count: usize,
    pub bezout_signature: i64,
    pub pass: bool,
}

#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct VerifyReport {
    pub prediction: Prediction,
    pub checks: Vec<XiCheck>,
    pub pass: bool,
}

/// Counts the real roots of `f(xi; x)` by Sturm and by Bezoutian
/// signature at every `xi` and compares both against the prediction.
/// Every `xi` must exceed the prediction's threshold.
pub fn verify_prediction(
    spec: &FamilySpec,
    xis: &[Rational],
    mode: ThresholdMode,
) -> Result<VerifyReport> {
    let prediction = predict(spec, mode)?;
    let mut checks = Vec::with_capacity(xis.len());
    for xi in xis {
        if xi <= &prediction.threshold {
            return Err(Error::ThresholdViolation {
                xi: xi.to_string(),
                threshold: prediction.threshold.to_string(),
            });
        }
        let member = spec.member_at(xi);
        let sturm_count = count_real_roots(&member, None, None)?;
        let signature = inertia_by_congruence(&bezout_of(&member, spec.n())?).signature();
        let pass = sturm_count == prediction.predicted_count
            && signature == prediction.predicted_count as i64;
        checks.push(XiCheck {
            xi: xi.clone(),
            sturm_count,
            bezout_signature: signature,
            pass,
        });
    }
    let pass = checks.iter().all(|c| c.pass);
    Ok(VerifyReport {
        prediction,
        checks,
        pass,
    })
}

/// The Bezoutian of the seed corrected by the first sweep of the family
/// Bezoutian: entry `(i, j)` (1-based) is
/// `b_ij - (s-i+1)(s-j+1)/n * u_{s-i+1} u_{s-j+1}`.
/// Its signature at any nonzero parameter equals the seed's distinct
/// real-root count.
fn corrected_bezout_generic<R: Ring + QScalar>(u: &[R], n: usize) -> Result<SymMatrix<R>> {
    let s = u.len() - 1;
    let g = UniPoly::new(u.to_vec());
    debug_assert_eq!(g.degree(), Some(s));
    let b = bezout_of(&g, s)?;
    let mut m = SqMatrix::zero(s);
    for i in 0..s {
        for j in 0..s {
            let factor = Rational::from_integer(((s - i) * (s - j)) as i64)
                / Rational::from_integer(n as i64);
            let correction = u[s - i].mul(&u[s - j]).scale_q(&factor);
            m.set(i, j, b.get(i, j).sub(&correction));
        }
    }
    Ok(SymMatrix::new(m).expect("correction preserves symmetry"))
}

pub fn corrected_bezout(spec: &FamilySpec) -> SymMatrix<Rational> {
    corrected_bezout_generic(&spec.r, spec.n()).expect("spec validated")
}

/// Characteristic polynomial of the corrected Bezoutian of the probe seed
/// `x^s + c*x + 1` (for `s = 1`: `c*x + 1`), with `c` kept symbolic.
/// Returned by ascending powers of `x`, coefficients in `Q[c]`.
pub fn probe_charpoly(s: usize, n: usize) -> Result<UniPoly<UniPoly<Rational>>> {
    if s < 1 || n <= s {
        return Err(Error::DegreeOrder { n, s: s as i64 });
    }
    let c = UniPoly::<Rational>::var();
    let u: Vec<UniPoly<Rational>> = if s == 1 {
        vec![UniPoly::one(), c]
    } else {
        let mut u = vec![UniPoly::zero(); s + 1];
        u[0] = UniPoly::one();
        u[1] = c;
        u[s] = UniPoly::one();
        u
    };
    let corrected = corrected_bezout_generic(&u, n)?;
    Ok(charpoly(corrected.as_sq()))
}

/// Closed-form leading term of the coefficient of `x^(s-k)` in
/// `probe_charpoly(s, n)`, for `s >= 3`.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct LeadingTerm {
    pub degree: usize,
    pub coefficient: Rational,
}

fn binomial(n: usize, k: usize) -> Rational {
    if k > n {
        return Rational::zero();
    }
    let mut acc = Rational::one();
    for i in 0..k {
        acc = acc * Rational::from_integer((n - i) as i64) / Rational::from_integer((i + 1) as i64);
    }
    acc
}

fn sign_pow(exp: usize) -> Rational {
    if exp.is_multiple_of(2) {
        Rational::one()
    } else {
        Rational::from_integer(-1)
    }
}

pub fn probe_leading_term(s: usize, n: usize, k: usize) -> Result<LeadingTerm> {
    if s < 3 || n <= s || k == 0 || k > s {
        return Err(Error::OutOfRange {
            what: format!("need s >= 3, n > s, 1 <= k <= s; got s = {s}, n = {n}, k = {k}"),
        });
    }
    let nq = Rational::from_integer(n as i64);
    let sm1 = Rational::from_integer((s - 1) as i64);
    let term = if s % 2 == 1 {
        if k == s {
            // constant coefficient, s odd
            LeadingTerm {
                degree: s,
                coefficient: sign_pow((s - 3) / 2)
                    * Rational::from_integer((n - s) as i64)
                    * sm1.pow((s - 1) as u32)
                    / nq,
            }
        } else if k % 2 == 1 {
            LeadingTerm {
                degree: k + 1,
                coefficient: -(Rational::from_integer((n - 1) as i64) / nq.clone())
                    * binomial((s - 3) / 2, (k - 1) / 2)
                    * sign_pow((k - 1) / 2)
                    * sm1.pow((k - 1) as u32),
            }
        } else {
            LeadingTerm {
                degree: k + 1,
                coefficient: -(Rational::from_integer((n - 1) as i64) / nq.clone())
                    * binomial((s - 3) / 2, (k - 2) / 2)
                    * sign_pow((k - 2) / 2)
                    * sm1.pow((k - 1) as u32),
            }
        }
    } else if k == s {
        // constant coefficient, s even
        LeadingTerm {
            degree: s,
            coefficient: sign_pow((s - 2) / 2)
                * Rational::from_integer((n - s) as i64)
                * sm1.pow((s - 1) as u32)
                / nq,
        }
    } else if k % 2 == 1 {
        LeadingTerm {
            degree: k + 1,
            coefficient: -(Rational::from_integer((n - 1) as i64) / nq.clone())
                * binomial((s - 2) / 2, (k - 1) / 2)
                * sign_pow((k - 1) / 2)
                * sm1.pow((k - 1) as u32),
        }
    } else {
        // k even, 2 <= k <= s - 2: four selections interfere; their sum
        // reduces to the bracket below, nonzero for all admissible (s, k, n)
        let si = s as i64;
        let ki = k as i64;
        let a = ki + si * si - 4 * si + 2; // k + s^2 - 4s + 2
        let bracket = (ki * a - si * si * si + 4 * si * si - 5 * si + 2) * (n as i64) - ki * a;
        let value = Rational::from_integer(si) * Rational::from_integer(bracket)
            / (nq.clone() * Rational::from_integer(ki) * Rational::from_integer(si - 2))
            * binomial((s - 2) / 2, (k - 2) / 2);
        LeadingTerm {
            degree: k,
            coefficient: value * sign_pow((k - 2) / 2) * sm1.pow((k - 2) as u32),
        }
    };
    Ok(term)
}

/// Inertia of the power block left over after sweeping: order `n - s`,
/// a leading 1 and the anti-diagonal `-(n-s) * r_s * xi` across the rest
/// (whose middle entry lands on the diagonal when `n - s` is even).
/// Signature is 1 for odd `n - s`, else 0 or 2 by the sign of `r_s`.
pub fn power_block_inertia(n: usize, s: usize, r_s: &Rational, xi: &Rational) -> Result<Inertia> {
    if s < 1 || n <= s {
        return Err(Error::DegreeOrder { n, s: s as i64 });
    }
    if r_s.is_zero() {
        return Err(Error::DegenerateFamily);
    }
    if !xi.is_positive() {
        return Err(Error::BadSign { xi: xi.to_string() });
    }
    let d = n - s;
    let mut m = SqMatrix::zero(d);
    m.set(0, 0, Rational::one());
    let value = -(Rational::from_integer(d as i64) * r_s.clone() * xi.clone());
    for i in 1..d {
        m.set(i, d - i, value.clone());
    }
    Ok(inertia_by_congruence(
        &SymMatrix::new(m).expect("anti-diagonal block is symmetric"),
    ))
}

/// Checks that the seed Bezoutian and its corrected form stay congruent
/// after the `xi^2` scaling and that both signatures equal the seed's
/// distinct-real-root count.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct SeedEquivalenceReport {
    pub gamma: usize,
    pub scaled_bezout_signature: i64,
    pub scaled_corrected_signature: i64,
    pub pass: bool,
}

pub fn seed_equivalence_check(spec: &FamilySpec, xi: &Rational) -> Result<SeedEquivalenceReport> {
    if xi.is_zero() {
        return Err(Error::ZeroXi);
    }
    let xi_sq = xi.mul(xi);
    let g = spec.seed_poly();
    let b = bezout_of(&g, spec.s())?.scale(&xi_sq);
    let b_bar = corrected_bezout(spec).scale(&xi_sq);
    let gamma = spec.gamma();
    let sig_b = inertia_by_congruence(&b).signature();
    let sig_bar = inertia_by_congruence(&b_bar).signature();
    let pass = sig_b == gamma as i64 && sig_bar == gamma as i64;
    Ok(SeedEquivalenceReport {
        gamma,
        scaled_bezout_signature: sig_b,
        scaled_corrected_signature: sig_bar,
        pass,
    })
}

/// Expected entry pattern of `M_n(f(xi; x))`: the power-part skeleton
/// (top-left `n`, the linear anti-diagonals) plus the seed Bezoutian
/// scaled by `xi^2` embedded bottom-right.
fn expected_member_bezout(spec: &FamilySpec, xi: &Rational) -> SymMatrix<Rational> {
    let n = spec.n();
    let s = spec.s();
    let b = bezout_of(&spec.seed_poly(), s).expect("spec validated");
    let xi_sq = xi.mul(xi);
    let mut m = SqMatrix::zero(n);
    m.set(0, 0, Rational::from_integer(n as i64));
    for k in 0..s {
        // first row and column carry (s-k) * r_{s-k} * xi at column n-s+k
        let value = Rational::from_integer((s - k) as i64)
            .mul(&spec.r[s - k])
            .mul(xi);
        m.set(0, n - s + k, value.clone());
        m.set(n - s + k, 0, value);
    }
    for i in 1..n {
        for j in 1..n {
            let mut value = Rational::zero();
            if i + j >= n - s && i + j <= n {
                let k = i + j - (n - s);
                // anti-diagonal band: -(n-s+k) * r_{s-k} * xi while both
                // indices stay strictly inside the band's corners
                if i < n - s + k && j < n - s + k {
                    value = -(Rational::from_integer((n - s + k) as i64)
                        .mul(&spec.r[s - k])
                        .mul(xi));
                }
            }
            if i >= n - s && j >= n - s {
                value = value.add(&b.get(i - (n - s), j - (n - s)).mul(&xi_sq));
            }
            m.set(i, j, value);
        }
    }
    SymMatrix::new(m).expect("pattern is symmetric")
}

/// Result of running the first sweep on `M_n(f(xi; x))` and checking its
/// published structure: entry pattern before the sweep, the cleared first
/// row/column, the rank-one update identity, preserved inertia, and the
/// corrected-Bezoutian bottom block.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct FirstSweepReport {
    pub pattern_ok: bool,
    pub first_row_cleared: bool,
    pub schur_ok: bool,
    pub inertia_preserved: bool,
    pub corrected_block_ok: bool,
    pub pass: bool,
}

/// Sweeps the first row/column of `M_n(f(xi; x))` by congruence with the
/// pivot `n` and returns the swept matrix.
fn sweep_first(spec: &FamilySpec, xi: &Rational) -> (SymMatrix<Rational>, SymMatrix<Rational>) {
    let n = spec.n();
    let s = spec.s();
    let a = bezout_of(&spec.member_at(xi), n).expect("spec validated");
    let mut shear = SqMatrix::identity(n);
    let pivot = Rational::from_integer(n as i64);
    for k in 0..s {
        let col = n - s + k;
        shear.set(0, col, -(a.get(0, col).clone() / pivot.clone()));
    }
    let swept = a.congruence(&shear);
    (a, swept)
}

pub fn first_sweep_check(spec: &FamilySpec, xi: &Rational) -> Result<FirstSweepReport> {
    if xi.is_zero() {
        return Err(Error::ZeroXi);
    }
    let n = spec.n();
    let s = spec.s();
    let (a, swept) = sweep_first(spec, xi);

    let pattern_ok = a == expected_member_bezout(spec, xi);

    let nq = Rational::from_integer(n as i64);
    let mut first_row_cleared = swept.get(0, 0) == &nq;
    for j in 1..n {
        if !swept.get(0, j).is_zero() || !swept.get(j, 0).is_zero() {
            first_row_cleared = false;
        }
    }

    // swept[i][j] = a[i][j] - a[0][i] * a[0][j] / n for i, j >= 1
    let mut schur_ok = true;
    for i in 1..n {
        for j in 1..n {
            let expected = a
                .get(i, j)
                .sub(&(a.get(0, i).mul(a.get(0, j)) / nq.clone()));
            if swept.get(i, j) != &expected {
                schur_ok = false;
            }
        }
    }

    let inertia_preserved = inertia_by_congruence(&a) == inertia_by_congruence(&swept);

    // The bottom-right s x s block of the swept matrix is
    // b_bar * xi^2 + (linear in xi); averaging the sweeps at xi and -xi
    // cancels the linear part exactly.
    let (_, swept_neg) = sweep_first(spec, &-xi);
    let b_bar = corrected_bezout(spec);
    let xi_sq = xi.mul(xi);
    let half = Rational::new(1, 2);
    let mut corrected_block_ok = true;
    for i in 0..s {
        for j in 0..s {
            let avg = swept
                .get(n - s + i, n - s + j)
                .add(swept_neg.get(n - s + i, n - s + j))
                .mul(&half);
            if avg != b_bar.get(i, j).mul(&xi_sq) {
                corrected_block_ok = false;
            }
        }
    }

    let pass =
        pattern_ok && first_row_cleared && schur_ok && inertia_preserved && corrected_block_ok;
    Ok(FirstSweepReport {
        pattern_ok,
        first_row_cleared,
        schur_ok,
        inertia_preserved,
        corrected_block_ok,
        pass,
    })
}

/// Certificate of a totally-complex construction: both independent root
/// counts must be zero.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct TotallyComplexCertificate {
    pub sturm_count: usize,
    pub bezout_signature: i64,
    pub pass: bool,
}

#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct TotallyComplexOutcome {
    pub beta: Rational,
    pub f: UniPoly<Rational>,
    pub certificate: TotallyComplexCertificate,
}

/// Builds `f = x^n + beta * g(x)` with no real roots, for a separable
/// totally-complex seed `g` with positive leading coefficient and
/// `n - deg g` even, taking `beta` strictly above every real root of the
/// discriminant of the family in `t`.
pub fn construct_totally_complex(n: usize, g: &UniPoly<Rational>) -> Result<TotallyComplexOutcome> {
    let s = match g.degree() {
        Some(s) if s >= 1 => s,
        _ => return Err(Error::DegenerateFamily),
    };
    if n <= s {
        return Err(Error::DegreeOrder { n, s: s as i64 });
    }
    if count_real_roots(g, None, None)? != 0 {
        return Err(Error::NotTotallyComplex);
    }
    if discriminant(g)?.is_zero() {
        return Err(Error::NotSeparable);
    }
    if (n - s) % 2 == 1 {
        return Err(Error::BadParity { n, s });
    }
    if !g.leading().expect("nonzero").is_positive() {
        return Err(Error::BadLeadingSign);
    }
    let d = disc_in_t(n, g)?;
    let beta = strict_upper_rational(&d.full, RootBoundMode::MaxRoot)?;
    let f = {
        let mut coeffs = vec![Rational::zero(); n + 1];
        for (k, c) in g.coeffs().iter().enumerate() {
            coeffs[k] = c.mul(&beta);
        }
        coeffs[n] = Rational::one();
        UniPoly::new(coeffs)
    };
    let sturm_count = count_real_roots(&f, None, None)?;
    let bezout_signature = inertia_by_congruence(&bezout_of(&f, n)?).signature();
    let pass = sturm_count == 0 && bezout_signature == 0;
    Ok(TotallyComplexOutcome {
        beta,
        f,
        certificate: TotallyComplexCertificate {
            sturm_count,
            bezout_signature,
            pass,
        },
    })
}

/// Configuration of the randomized prediction sweep.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct SweepConfig {
    /// Inclusive range of family degrees `n`.
    pub n_range: (usize, usize),
    /// Inclusive range of seed degrees `s`; clamped to `1..=n-1` per `n`.
    /// `None` means all admissible seed degrees.
    pub s_range: Option<(usize, usize)>,
    pub trials: usize,
    pub seed: u64,
    pub mode: ThresholdMode,
}

#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct CellSummary {
    pub n: usize,
    pub s: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct Counterexample {
    pub n: usize,
    pub s: usize,
    pub trial: usize,
    pub spec: FamilySpec,
    pub report: VerifyReport,
}

#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct SweepReport {
    pub seed: u64,
    pub mode: ThresholdMode,
    pub trials_per_cell: usize,
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub cells: Vec<CellSummary>,
    pub counterexamples: Vec<Counterexample>,
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = x;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn trial_rng(seed: u64, n: usize, s: usize, trial: usize) -> ChaCha8Rng {
    let mix = splitmix64(seed) ^ splitmix64((n as u64) << 42 | (s as u64) << 21 | trial as u64);
    ChaCha8Rng::seed_from_u64(splitmix64(mix))
}

/// Uniform over numerators -9..=9 and denominators 1..=9.
pub fn random_rational(rng: &mut impl Rng) -> Rational {
    Rational::new(rng.random_range(-9..=9), rng.random_range(1..=9))
}

/// Rejection-samples a separable seed of degree `s` with nonzero leading
/// coefficient and returns the validated family.
pub fn random_family(rng: &mut impl Rng, n: usize, s: usize) -> (FamilySpec, usize) {
    loop {
        let coeffs: Vec<Rational> = (0..=s).map(|_| random_rational(rng)).collect();
        if coeffs[s].is_zero() {
            continue;
        }
        if let Ok(found) = build_family(n, &UniPoly::new(coeffs)) {
            return found;
        }
    }
}

/// Runs `trials` random families per `(n, s)` cell, verifying the
/// prediction at `threshold + 1`, `threshold + 2`, and
/// `1000 * (threshold + 1)`. Trials are keyed by `(n, s, trial)` and may
/// run in parallel; the report is deterministic in the seed.
pub fn sweep_harness(config: &SweepConfig) -> Result<SweepReport> {
    if config.trials == 0 {
        return Err(Error::InvalidSweep {
            reason: "trials must be >= 1".into(),
        });
    }
    let (n_lo, n_hi) = config.n_range;
    if n_lo < 2 || n_lo > n_hi {
        return Err(Error::InvalidSweep {
            reason: format!("need 2 <= n_lo <= n_hi, got {n_lo}..{n_hi}"),
        });
    }
    if let Some((s_lo, s_hi)) = config.s_range {
        if s_lo < 1 || s_lo > s_hi {
            return Err(Error::InvalidSweep {
                reason: format!("need 1 <= s_lo <= s_hi, got {s_lo}..{s_hi}"),
            });
        }
    }
    let mut tasks = Vec::new();
    for n in n_lo..=n_hi {
        let (s_lo, s_hi) = match config.s_range {
            Some((lo, hi)) => (lo.max(1), hi.min(n - 1)),
            None => (1, n - 1),
        };
        for s in s_lo..=s_hi {
            for trial in 0..config.trials {
                tasks.push((n, s, trial));
            }
        }
    }
    if tasks.is_empty() {
        return Err(Error::InvalidSweep {
            reason: "the (n, s) grid is empty".into(),
        });
    }

    let seed = config.seed;
    let mode = config.mode;
    let mut outcomes: Vec<(usize, usize, usize, FamilySpec, VerifyReport)> = tasks
        .into_par_iter()
        .map(|(n, s, trial)| {
            let mut rng = trial_rng(seed, n, s, trial);
            let (spec, _gamma) = random_family(&mut rng, n, s);
            let prediction = predict(&spec, mode).expect("validated spec");
            let witness = prediction.threshold.clone() + Rational::one();
            let xis = vec![
                witness.clone(),
                witness.clone() + Rational::one(),
                Rational::from_integer(1000) * witness,
            ];
            let report = verify_prediction(&spec, &xis, mode).expect("xi > threshold");
            (n, s, trial, spec, report)
        })
        .collect();
    outcomes.sort_by_key(|(n, s, trial, _, _)| (*n, *s, *trial));

    let mut cells: Vec<CellSummary> = Vec::new();
    let mut counterexamples = Vec::new();
    let (mut passed, mut failed) = (0, 0);
    for (n, s, trial, spec, report) in outcomes {
        if cells.last().map(|c| (c.n, c.s)) != Some((n, s)) {
            cells.push(CellSummary {
                n,
                s,
                passed: 0,
                failed: 0,
            });
        }
        let cell = cells.last_mut().expect("pushed above");
        if report.pass {
            passed += 1;
            cell.passed += 1;
        } else {
            failed += 1;
            cell.failed += 1;
            counterexamples.push(Counterexample {
                n,
                s,
                trial,
                spec,
                report,
            });
        }
    }
    Ok(SweepReport {
        seed,
        mode,
        trials_per_cell: config.trials,
        total: passed + failed,
        passed,
        failed,
        cells,
        counterexamples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn spec(n: usize, g: &[i64]) -> FamilySpec {
        build_family(n, &UniPoly::from_ints(g)).unwrap().0
    }

    #[test]
    fn build_family_examples() {
        let (_, gamma) = build_family(4, &UniPoly::from_ints(&[1, 0, 1])).unwrap();
        assert_eq!(gamma, 0);
        let (_, gamma) = build_family(3, &UniPoly::from_ints(&[-1, 0, 1])).unwrap();
        assert_eq!(gamma, 2);
        assert_eq!(
            build_family(3, &UniPoly::from_ints(&[1, -2, 1])),
            Err(Error::NotSeparable)
        );
        assert_eq!(
            build_family(2, &UniPoly::from_ints(&[0, 0, 1])),
            Err(Error::DegreeOrder { n: 2, s: 2 })
        );
        assert_eq!(
            build_family(4, &UniPoly::from_ints(&[7])),
            Err(Error::DegenerateFamily)
        );
    }

    #[test]
    fn det_in_t_smallest_family() {
        // n = 2, g = x: M = [[2, t], [t, t^2]], det = t^2
        let sp = spec(2, &[0, 1]);
        assert_eq!(bezout_det_in_t(&sp), UniPoly::from_ints(&[0, 0, 1]));
        let top = det_max_root(&sp).unwrap();
        assert!(top.interval.exact);
        assert_eq!(top.interval.lo, q("0"));
        assert_eq!(top.witness_above, q("1"));
    }

    #[test]
    fn det_in_t_vanishes_at_zero() {
        for (n, g) in [(3, vec![1, 1]), (4, vec![1, 0, 1]), (5, vec![-2, 3, 1])] {
            let sp = spec(n, &g);
            let p = bezout_det_in_t(&sp);
            assert!(p.eval(&q("0")).is_zero(), "P(0) != 0 for n={n}");
        }
    }

    #[test]
    fn predict_three_branches() {
        let p = predict(&spec(5, &[1, 0, 1]), ThresholdMode::MaxAbsRoot).unwrap();
        assert_eq!((p.gamma, p.predicted_count), (0, 1));
        assert_eq!(p.parity, Parity::Odd);

        let p = predict(&spec(4, &[1, 0, 1]), ThresholdMode::MaxAbsRoot).unwrap();
        assert_eq!((p.gamma, p.predicted_count), (0, 0));
        assert_eq!((p.parity, p.sign_rs), (Parity::Even, CoeffSign::Positive));

        let p = predict(&spec(4, &[-1, 0, -1]), ThresholdMode::MaxAbsRoot).unwrap();
        assert_eq!((p.gamma, p.predicted_count), (0, 2));
        assert_eq!((p.parity, p.sign_rs), (Parity::Even, CoeffSign::Negative));
    }

    #[test]
    fn verify_prediction_examples() {
        // x^4 + 10x^2 + 10 has no real roots
        let sp = spec(4, &[1, 0, 1]);
        let report = verify_prediction(&sp, &[q("10")], ThresholdMode::MaxAbsRoot).unwrap();
        assert!(report.pass);
        assert_eq!(report.checks[0].sturm_count, 0);

        // x^5 + 7x^2 + 7 has exactly one real root
        let sp = spec(5, &[1, 0, 1]);
        let report = verify_prediction(&sp, &[q("7")], ThresholdMode::MaxAbsRoot).unwrap();
        assert!(report.pass);
        assert_eq!(report.checks[0].sturm_count, 1);

        // x^3 + x has exactly one real root; gamma = 1, n - s even, r_s > 0
        let sp = spec(3, &[0, 1]);
        let report = verify_prediction(&sp, &[q("1")], ThresholdMode::MaxRoot).unwrap();
        assert!(report.pass);
        assert_eq!(report.prediction.predicted_count, 1);

        let err = verify_prediction(&sp, &[q("0")], ThresholdMode::MaxRoot);
        assert!(matches!(err, Err(Error::ThresholdViolation { .. })));
    }

    #[test]
    fn corrected_bezout_small_cases() {
        // s = 1, g = x + 1, n = 2: [(n-1)/n * r_1^2] = [1/2]
        let sp = spec(2, &[1, 1]);
        let m = corrected_bezout(&sp);
        assert_eq!(m.get(0, 0), &q("1/2"));

        // s = 2, g = x^2 + x + 1, n = 4: [[1, 1/2], [1/2, -5/4]]
        let sp = spec(4, &[1, 1, 1]);
        let m = corrected_bezout(&sp);
        assert_eq!(m.get(0, 0), &q("1"));
        assert_eq!(m.get(0, 1), &q("1/2"));
        assert_eq!(m.get(1, 0), &q("1/2"));
        assert_eq!(m.get(1, 1), &q("-5/4"));
    }

    #[test]
    fn corrected_bezout_first_row_closed_form() {
        // first row: (s-j+1)(1 - s/n) r_s r_{s-j+1} (1-based j)
        let sp = spec(7, &[2, -1, 3, 5]);
        let s = sp.s();
        let n = sp.n();
        let m = corrected_bezout(&sp);
        for j in 0..s {
            let expected = Rational::from_integer((s - j) as i64)
                * (q("1") - Rational::from_integer(s as i64) / Rational::from_integer(n as i64))
                * sp.coeffs()[s].clone()
                * sp.coeffs()[s - j].clone();
            assert_eq!(m.get(0, j), &expected, "column {j}");
        }
    }

    #[test]
    fn probe_charpoly_quadratic_closed_form() {
        for n in 3..=8 {
            let phi = probe_charpoly(2, n).unwrap();
            let nq = Rational::from_integer(n as i64);
            // x^2 - ((n-1)c^2 - 4)/n x + ((n-2)c^2 - 4n + 8)/n
            let x1_expected = UniPoly::new(vec![
                q("4") / nq.clone(),
                q("0"),
                -(Rational::from_integer((n - 1) as i64) / nq.clone()),
            ]);
            let x0_expected = UniPoly::new(vec![
                (q("8") - q("4") * nq.clone()) / nq.clone(),
                q("0"),
                Rational::from_integer((n - 2) as i64) / nq.clone(),
            ]);
            assert_eq!(phi.coeff(2), UniPoly::one(), "n = {n}");
            assert_eq!(phi.coeff(1), x1_expected, "n = {n}");
            assert_eq!(phi.coeff(0), x0_expected, "n = {n}");
        }
    }

    #[test]
    fn probe_charpoly_s1() {
        // x - (n-1)/n c^2
        let phi = probe_charpoly(1, 3).unwrap();
        assert_eq!(phi.coeff(1), UniPoly::one());
        assert_eq!(phi.coeff(0), UniPoly::new(vec![q("0"), q("0"), q("-2/3")]));
    }

    #[test]
    fn leading_term_reference_points() {
        // odd s, k = s: matches the constant term of probe_charpoly(7, 10)
        let t = probe_leading_term(7, 10, 7).unwrap();
        assert_eq!(t.degree, 7);
        assert_eq!(t.coefficient, q("69984/5"));

        // even s, k = s: matches the constant term of probe_charpoly(8, 12)
        let t = probe_leading_term(8, 12, 8).unwrap();
        assert_eq!(t.degree, 8);
        assert_eq!(t.coefficient, q("-823543/3"));

        assert!(probe_leading_term(2, 5, 1).is_err());
        assert!(probe_leading_term(5, 5, 1).is_err());
        assert!(probe_leading_term(5, 7, 0).is_err());
        assert!(probe_leading_term(5, 7, 6).is_err());
    }

    #[test]
    fn power_block_signature_table() {
        for d in 1..=8usize {
            let n = d + 1;
            for r_s in [q("1"), q("-1"), q("3/2"), q("-2/7")] {
                for xi in [q("1"), q("7")] {
                    let inertia = power_block_inertia(n, 1, &r_s, &xi).unwrap();
                    let expected = if d % 2 == 1 {
                        1
                    } else if r_s.is_positive() {
                        0
                    } else {
                        2
                    };
                    assert_eq!(inertia.signature(), expected, "d={d}, r_s={r_s}, xi={xi}");
                }
            }
        }
        assert!(matches!(
            power_block_inertia(4, 2, &q("1"), &q("0")),
            Err(Error::BadSign { .. })
        ));
        assert!(matches!(
            power_block_inertia(4, 2, &q("1"), &q("-3")),
            Err(Error::BadSign { .. })
        ));
    }

    #[test]
    fn seed_equivalence_examples() {
        let report = seed_equivalence_check(&spec(4, &[-1, 0, 1]), &q("1")).unwrap();
        assert!(report.pass);
        assert_eq!(report.gamma, 2);

        let report = seed_equivalence_check(&spec(4, &[1, 0, 1]), &q("3")).unwrap();
        assert!(report.pass);
        assert_eq!(report.gamma, 0);

        // sign of xi is irrelevant after the xi^2 scaling
        let report = seed_equivalence_check(&spec(5, &[0, -1, 0, 1]), &q("-2")).unwrap();
        assert!(report.pass);
        assert_eq!(report.gamma, 3);

        assert_eq!(
            seed_equivalence_check(&spec(4, &[1, 0, 1]), &q("0")),
            Err(Error::ZeroXi)
        );
    }

    #[test]
    fn first_sweep_structure() {
        for (n, g) in [
            (3usize, vec![1i64, 1]),
            (4, vec![1, 0, 1]),
            (5, vec![-2, 3, 1]),
            (6, vec![1, -1, 0, 2]),
            (7, vec![3, 0, 0, 0, 0, -2]),
        ] {
            let sp = spec(n, &g);
            for xi in [q("2"), q("-3/2")] {
                let report = first_sweep_check(&sp, &xi).unwrap();
                assert!(report.pass, "n={n}, g={g:?}, xi={xi}: {report:?}");
            }
        }
        assert_eq!(
            first_sweep_check(&spec(3, &[1, 1]), &q("0")),
            Err(Error::ZeroXi)
        );
    }

    #[test]
    fn totally_complex_construction() {
        let out = construct_totally_complex(4, &UniPoly::from_ints(&[1, 0, 1])).unwrap();
        assert!(out.certificate.pass);
        assert!(out.beta.is_positive());
        assert_eq!(out.f.degree(), Some(4));

        let out = construct_totally_complex(6, &UniPoly::from_ints(&[1, 0, 1, 0, 1])).unwrap();
        assert!(out.certificate.pass);

        assert_eq!(
            construct_totally_complex(5, &UniPoly::from_ints(&[1, 0, 1])),
            Err(Error::BadParity { n: 5, s: 2 })
        );
        assert_eq!(
            construct_totally_complex(4, &UniPoly::from_ints(&[-1, 0, 1])),
            Err(Error::NotTotallyComplex)
        );
        assert_eq!(
            construct_totally_complex(4, &UniPoly::from_ints(&[-1, 0, -1])),
            Err(Error::BadLeadingSign)
        );
    }

    #[test]
    fn sweep_rejects_bad_config() {
        let bad = SweepConfig {
            n_range: (2, 4),
            s_range: None,
            trials: 0,
            seed: 42,
            mode: ThresholdMode::MaxAbsRoot,
        };
        assert!(matches!(
            sweep_harness(&bad),
            Err(Error::InvalidSweep { .. })
        ));
    }

    #[test]
    fn sweep_small_grid_passes_and_is_deterministic() {
        let config = SweepConfig {
            n_range: (2, 4),
            s_range: None,
            trials: 3,
            seed: 42,
            mode: ThresholdMode::MaxAbsRoot,
        };
        let a = sweep_harness(&config).unwrap();
        assert_eq!(a.failed, 0, "{:?}", a.counterexamples);
        assert_eq!(a.total, (1 + 2 + 3) * 3);
        let b = sweep_harness(&config).unwrap();
        assert_eq!(a, b);
    }
}
