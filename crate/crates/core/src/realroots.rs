//! Real-root counting and isolation over the rationals.
//!
//! Sturm's theorem drives everything: the sign-variation difference of the
//! signed-remainder chain between two points counts the distinct real
//! roots in the half-open interval `(lo, hi]`. Root multiplicities are
//! collapsed up front by dividing out `gcd(f, f')`, and the chain used for
//! counting is rescaled to primitive integer coefficients, which changes
//! no signs but keeps the arithmetic small.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::UniPoly;
use crate::rational::Rational;

/// An interval `(lo, hi]` containing exactly one distinct real root of the
/// subject polynomial; `exact` marks the degenerate case `lo == hi`, which
/// pins a rational root.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct IsolatingInterval {
    pub lo: Rational,
    pub hi: Rational,
    pub exact: bool,
}

impl IsolatingInterval {
    fn pinned(root: Rational) -> Self {
        IsolatingInterval {
            lo: root.clone(),
            hi: root,
            exact: true,
        }
    }

    pub fn width(&self) -> Rational {
        self.hi.clone() - self.lo.clone()
    }

    pub fn contains(&self, x: &Rational) -> bool {
        if self.exact {
            x == &self.lo
        } else {
            x > &self.lo && x <= &self.hi
        }
    }
}

/// Which root bound `strict_upper_rational` produces.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RootBoundMode {
    /// Strictly above the largest real root.
    MaxRoot,
    /// Strictly above the largest absolute value of a real root.
    MaxAbsRoot,
}

/// The literal signed-remainder chain
/// `p0 = f, p1 = f', p_{k+1} = -rem(p_{k-1}, p_k)`, stopping before the
/// zero remainder. For repeated roots it therefore ends at a multiple of
/// `gcd(f, f')` rather than a constant.
pub fn sturm_sequence(f: &UniPoly<Rational>) -> Result<Vec<UniPoly<Rational>>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut seq = vec![f.clone()];
    let d = f.derivative();
    if d.is_zero() {
        return Ok(seq);
    }
    seq.push(d);
    loop {
        let r = seq[seq.len() - 2].rem(&seq[seq.len() - 1])?.neg();
        if r.is_zero() {
            return Ok(seq);
        }
        seq.push(r);
    }
}

/// Rescales by a positive rational so coefficients become coprime integers.
fn primitive_scaled(p: &UniPoly<Rational>) -> UniPoly<Rational> {
    if p.is_zero() {
        return UniPoly::zero();
    }
    let mut den_lcm = BigInt::one();
    for c in p.coeffs() {
        den_lcm = den_lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&den_lcm / c.denom()))
        .collect();
    let mut gcd = BigInt::zero();
    for i in &ints {
        gcd = gcd.gcd(i);
    }
    debug_assert!(gcd.is_positive());
    UniPoly::new(
        ints.into_iter()
            .map(|i| Rational::from_big(i / &gcd, BigInt::one()))
            .collect(),
    )
}

/// Sturm chain of a squarefree polynomial, with every member scaled to
/// primitive integer coefficients (positive rescaling preserves all signs).
struct SturmChain {
    polys: Vec<UniPoly<Rational>>,
}

impl SturmChain {
    /// `f` must be squarefree; see `UniPoly::squarefree_part`.
    fn new(f: &UniPoly<Rational>) -> Self {
        let mut polys = vec![primitive_scaled(f)];
        let d = f.derivative();
        if !d.is_zero() {
            polys.push(primitive_scaled(&d));
            loop {
                let r = polys[polys.len() - 2]
                    .rem(&polys[polys.len() - 1])
                    .expect("nonzero divisor")
                    .neg();
                if r.is_zero() {
                    break;
                }
                polys.push(primitive_scaled(&r));
            }
        }
        SturmChain { polys }
    }

    fn subject(&self) -> &UniPoly<Rational> {
        &self.polys[0]
    }

    fn variations(signs: impl Iterator<Item = i32>) -> usize {
        let mut count = 0;
        let mut last = 0;
        for s in signs {
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    fn variations_at(&self, x: &Rational) -> usize {
        Self::variations(self.polys.iter().map(|p| p.eval(x).signum()))
    }

    fn variations_pos_inf(&self) -> usize {
        Self::variations(self.polys.iter().map(|p| match p.leading() {
            Some(c) => c.signum(),
            None => 0,
        }))
    }

    fn variations_neg_inf(&self) -> usize {
        Self::variations(self.polys.iter().map(|p| match (p.leading(), p.degree()) {
            (Some(c), Some(d)) => {
                if d % 2 == 0 {
                    c.signum()
                } else {
                    -c.signum()
                }
            }
            _ => 0,
        }))
    }

    /// Distinct roots in `(lo, hi]`; `None` bounds mean the whole ray.
    fn count(&self, lo: Option<&Rational>, hi: Option<&Rational>) -> usize {
        if let (Some(a), Some(b)) = (lo, hi) {
            if a >= b {
                return 0;
            }
        }
        let va = lo.map_or_else(|| self.variations_neg_inf(), |a| self.variations_at(a));
        let vb = hi.map_or_else(|| self.variations_pos_inf(), |b| self.variations_at(b));
        va.saturating_sub(vb)
    }
}

/// `1 + max |a_i| / |a_n|`: every real root lies strictly inside
/// `(-bound, bound)`.
pub fn cauchy_bound(f: &UniPoly<Rational>) -> Result<Rational> {
    match f.degree() {
        None => Err(Error::ZeroPolynomial),
        Some(0) => Ok(Rational::one()),
        Some(d) => {
            let lead = f.coeff(d).abs();
            let mut max = Rational::zero();
            for k in 0..d {
                let a = f.coeff(k).abs();
                if a > max {
                    max = a;
                }
            }
            Ok(Rational::one() + max / lead)
        }
    }
}

/// Number of distinct real roots of `f` in `(lo, hi]`, the whole line when
/// both bounds are `None`.
pub fn count_real_roots(
    f: &UniPoly<Rational>,
    lo: Option<&Rational>,
    hi: Option<&Rational>,
) -> Result<usize> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let sf = f.squarefree_part();
    if sf.degree() == Some(0) {
        return Ok(0);
    }
    Ok(SturmChain::new(&sf).count(lo, hi))
}

const DEFAULT_REFINE_WIDTH: (i64, i64) = (1, 2);

/// Disjoint isolating intervals, ascending, one per distinct real root.
/// Each interval is refined to width at most 1/2; rational roots hit by
/// the bisection are returned pinned.
pub fn isolate_real_roots(f: &UniPoly<Rational>) -> Result<Vec<IsolatingInterval>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let sf = f.squarefree_part();
    if sf.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let chain = SturmChain::new(&sf);
    let bound = cauchy_bound(&sf)?;
    let lo = -&bound;
    let v_lo = chain.variations_at(&lo);
    let v_hi = chain.variations_at(&bound);
    let mut out = Vec::new();
    let default_width = Rational::new(DEFAULT_REFINE_WIDTH.0, DEFAULT_REFINE_WIDTH.1);
    split(&chain, lo, bound, v_lo, v_hi, &default_width, &mut out);
    Ok(out)
}

fn split(
    chain: &SturmChain,
    lo: Rational,
    hi: Rational,
    v_lo: usize,
    v_hi: usize,
    width: &Rational,
    out: &mut Vec<IsolatingInterval>,
) {
    let count = v_lo.saturating_sub(v_hi);
    if count == 0 {
        return;
    }
    if count == 1 {
        out.push(refine(chain, lo, hi, v_lo, width));
        return;
    }
    let mid = (lo.clone() + hi.clone()) / Rational::from_integer(2);
    let v_mid = chain.variations_at(&mid);
    split(chain, lo, mid.clone(), v_lo, v_mid, width, out);
    split(chain, mid, hi, v_mid, v_hi, width, out);
}

/// Narrows `(lo, hi]` (known to hold exactly one root) below `width`,
/// pinning the root if a bisection point ever hits it.
fn refine(
    chain: &SturmChain,
    mut lo: Rational,
    mut hi: Rational,
    mut v_lo: usize,
    width: &Rational,
) -> IsolatingInterval {
    if chain.subject().eval(&hi).is_zero() {
        return IsolatingInterval::pinned(hi);
    }
    while hi.clone() - lo.clone() > *width {
        let mid = (lo.clone() + hi.clone()) / Rational::from_integer(2);
        if chain.subject().eval(&mid).is_zero() {
            return IsolatingInterval::pinned(mid);
        }
        let v_mid = chain.variations_at(&mid);
        if v_lo - v_mid == 1 {
            hi = mid;
        } else {
            lo = mid;
            v_lo = v_mid;
        }
    }
    IsolatingInterval {
        lo,
        hi,
        exact: false,
    }
}

/// Shrinks an isolating interval of `f` to width at most `width` without
/// changing the root it contains.
pub fn refine_interval(
    f: &UniPoly<Rational>,
    interval: &IsolatingInterval,
    width: &Rational,
) -> Result<IsolatingInterval> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if interval.exact {
        return Ok(interval.clone());
    }
    let sf = f.squarefree_part();
    let chain = SturmChain::new(&sf);
    let v_lo = chain.variations_at(&interval.lo);
    let v_hi = chain.variations_at(&interval.hi);
    if v_lo.saturating_sub(v_hi) != 1 {
        return Err(Error::OutOfRange {
            what: format!(
                "({}, {}] does not isolate exactly one root",
                interval.lo, interval.hi
            ),
        });
    }
    Ok(refine(
        &chain,
        interval.lo.clone(),
        interval.hi.clone(),
        v_lo,
        width,
    ))
}

/// A rational strictly above the largest real root (`MaxRoot`) or above
/// the largest absolute value of a real root (`MaxAbsRoot`); 0 when `f`
/// has no real roots.
pub fn strict_upper_rational(f: &UniPoly<Rational>, mode: RootBoundMode) -> Result<Rational> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    match mode {
        RootBoundMode::MaxRoot => {
            let intervals = isolate_real_roots(f)?;
            Ok(match intervals.last() {
                None => Rational::zero(),
                Some(iv) if iv.exact => iv.hi.clone() + Rational::one(),
                // isolation guarantees f(hi) != 0, so the root is < hi
                Some(iv) => iv.hi.clone(),
            })
        }
        RootBoundMode::MaxAbsRoot => {
            // roots of f(x) * f(-x) are the roots of f and their negatives,
            // so its largest real root is the largest |root| of f
            let h = f.mul(&f.reflect());
            strict_upper_rational(&h, RootBoundMode::MaxRoot)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn sturm_sequence_examples() {
        let seq = sturm_sequence(&UniPoly::from_ints(&[-1, 0, 1])).unwrap();
        assert_eq!(
            seq,
            vec![
                UniPoly::from_ints(&[-1, 0, 1]),
                UniPoly::from_ints(&[0, 2]),
                UniPoly::from_ints(&[1]),
            ]
        );

        // repeated root: the chain stops at the gcd multiple 2x
        let seq = sturm_sequence(&UniPoly::from_ints(&[0, 0, 1])).unwrap();
        assert_eq!(
            seq,
            vec![UniPoly::from_ints(&[0, 0, 1]), UniPoly::from_ints(&[0, 2])]
        );

        let seq = sturm_sequence(&UniPoly::from_ints(&[0, 1])).unwrap();
        assert_eq!(
            seq,
            vec![UniPoly::from_ints(&[0, 1]), UniPoly::from_ints(&[1])]
        );

        assert_eq!(sturm_sequence(&UniPoly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn count_whole_line() {
        assert_eq!(
            count_real_roots(&UniPoly::from_ints(&[1, 0, 1]), None, None).unwrap(),
            0
        );
        assert_eq!(
            count_real_roots(&UniPoly::from_ints(&[0, -1, 0, 1]), None, None).unwrap(),
            3
        );
        assert_eq!(
            count_real_roots(&UniPoly::from_ints(&[1, -2, 1]), None, None).unwrap(),
            1
        );
    }

    #[test]
    fn count_respects_half_open_convention() {
        // roots of x^2 - 1 are -1 and 1
        let f = UniPoly::from_ints(&[-1, 0, 1]);
        let one = q("1");
        let neg_one = q("-1");
        // (-1, 1] contains only the root 1
        assert_eq!(count_real_roots(&f, Some(&neg_one), Some(&one)).unwrap(), 1);
        // (-2, -1] contains only -1
        assert_eq!(
            count_real_roots(&f, Some(&q("-2")), Some(&neg_one)).unwrap(),
            1
        );
        // (1, 5] contains nothing
        assert_eq!(count_real_roots(&f, Some(&one), Some(&q("5"))).unwrap(), 0);
        // empty interval
        assert_eq!(count_real_roots(&f, Some(&one), Some(&one)).unwrap(), 0);
    }

    #[test]
    fn isolate_examples() {
        let ivs = isolate_real_roots(&UniPoly::from_ints(&[-2, 0, 1])).unwrap();
        assert_eq!(ivs.len(), 2);
        assert!(ivs[0].lo >= q("-2") && ivs[0].hi <= q("-1"));
        assert!(ivs[1].lo >= q("1") && ivs[1].hi <= q("2"));
        assert!(!ivs[0].exact && !ivs[1].exact);

        assert!(isolate_real_roots(&UniPoly::from_ints(&[1, 0, 1]))
            .unwrap()
            .is_empty());

        let ivs = isolate_real_roots(&UniPoly::<Rational>::var()).unwrap();
        assert_eq!(
            ivs,
            vec![IsolatingInterval {
                lo: q("0"),
                hi: q("0"),
                exact: true
            }]
        );
    }

    #[test]
    fn isolate_agrees_with_count() {
        let f = UniPoly::from_ints(&[6, -5, -2, 1]); // (x-1)(x+2)(x-3)
        let ivs = isolate_real_roots(&f).unwrap();
        assert_eq!(ivs.len(), 3);
        assert_eq!(count_real_roots(&f, None, None).unwrap(), 3);
        for iv in &ivs {
            if !iv.exact {
                assert_eq!(count_real_roots(&f, Some(&iv.lo), Some(&iv.hi)).unwrap(), 1);
            }
        }
        // sorted and disjoint
        for pair in ivs.windows(2) {
            assert!(pair[0].hi <= pair[1].lo);
        }
    }

    #[test]
    fn refine_keeps_the_root() {
        let f = UniPoly::from_ints(&[-2, 0, 1]);
        let ivs = isolate_real_roots(&f).unwrap();
        let tight = refine_interval(&f, &ivs[1], &q("1/1024")).unwrap();
        assert!(tight.width() <= q("1/1024"));
        assert_eq!(
            count_real_roots(&f, Some(&tight.lo), Some(&tight.hi)).unwrap(),
            1
        );
        // sqrt(2) = 1.41421356...
        assert!(tight.lo < q("14143/10000") && tight.hi > q("14142/10000"));
    }

    #[test]
    fn strict_upper_bounds() {
        let f = UniPoly::from_ints(&[-2, 0, 1]);
        let up = strict_upper_rational(&f, RootBoundMode::MaxRoot).unwrap();
        assert!(up.clone() * up.clone() > q("2"));
        let up_abs = strict_upper_rational(&f, RootBoundMode::MaxAbsRoot).unwrap();
        assert!(up_abs.clone() * up_abs.clone() > q("2"));

        let g = UniPoly::from_ints(&[5, 1]); // root -5
        let up = strict_upper_rational(&g, RootBoundMode::MaxRoot).unwrap();
        assert!(up > q("-5"));
        let up_abs = strict_upper_rational(&g, RootBoundMode::MaxAbsRoot).unwrap();
        assert!(up_abs > q("5"));

        // no real roots: the conventional bound is 0
        assert_eq!(
            strict_upper_rational(&UniPoly::from_ints(&[1, 0, 1]), RootBoundMode::MaxRoot).unwrap(),
            q("0")
        );
    }

    #[test]
    fn all_roots_inside_cauchy_bound() {
        let f = UniPoly::from_ints(&[6, -5, -2, 1]);
        let b = cauchy_bound(&f).unwrap();
        let total = count_real_roots(&f, None, None).unwrap();
        let inside = count_real_roots(&f, Some(&(-&b)), Some(&b)).unwrap();
        assert_eq!(total, inside);
    }
}
