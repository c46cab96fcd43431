//! Real roots: Sturm counting, isolation, exact signs at algebraic points, and the
//! nonnegativity oracle on unions of closed intervals.

mod oracle;
mod point;
mod sturm;
mod surd;

pub(crate) use oracle::{check_nonneg, nonneg_everywhere};
pub use oracle::{is_nonneg_on, zeros_in, NonnegReport, Region, RegionComponent, ZeroLocation};
pub use point::{AlgebraicRoot, RealPoint};
pub use sturm::{sturm_count, Bound, SturmChain};
pub use surd::{compare_rational_surd, rational_approx_surd, sign_at, Side};

use num_traits::Zero;

use crate::arith::{factor_over_rationals, Polynomial, Rational};
use crate::error::Result;
use crate::semialg::Endpoint;

/// A closed interval containing exactly one real root of `poly`.
///
/// Rational roots come back degenerate (`lo == hi`) with `poly = x - root`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsolatingInterval {
    pub lo: Rational,
    pub hi: Rational,
    pub poly: Polynomial,
}

impl IsolatingInterval {
    pub fn is_degenerate(&self) -> bool {
        self.lo == self.hi
    }

    pub fn to_point(&self) -> RealPoint {
        if self.is_degenerate() {
            RealPoint::Rational(self.lo.clone())
        } else {
            RealPoint::Algebraic(AlgebraicRoot::new(self.poly.clone(), self.lo.clone(), self.hi.clone()))
        }
    }
}

/// Roots of a monic irreducible polynomial of degree >= 2, in increasing order.
pub(crate) fn isolate_irreducible(g: &Polynomial) -> Vec<AlgebraicRoot> {
    let chain = SturmChain::new(g);
    let b = sturm::cauchy_bound(g);
    let mut out = Vec::new();
    let mut stack = vec![(-b.clone(), b)];
    while let Some((lo, hi)) = stack.pop() {
        let c = chain.count_rational(&lo, &hi);
        if c == 0 {
            continue;
        }
        if c == 1 {
            out.push(AlgebraicRoot::new(g.clone(), lo, hi));
            continue;
        }
        let mid = (&lo + &hi) / Rational::from_integer(2.into());
        // Right half first so that the left half pops first.
        stack.push((mid.clone(), hi));
        stack.push((lo, mid));
    }
    out
}

/// Distinct real roots with multiplicities, sorted.
pub fn real_roots_with_multiplicity(f: &Polynomial) -> Result<Vec<(RealPoint, usize)>> {
    if f.deg() == 0 {
        return Ok(Vec::new());
    }
    let (_, factors) = factor_over_rationals(f)?;
    let mut pts = Vec::new();
    for (g, m) in factors {
        if g.deg() == 1 {
            pts.push((RealPoint::Rational(-g.coeff(0)), m));
        } else {
            for r in isolate_irreducible(&g) {
                pts.push((RealPoint::Algebraic(r), m));
            }
        }
    }
    pts.sort_by(|a, b| a.0.cmp_exact(&b.0));
    for i in 1..pts.len() {
        let (left, right) = pts.split_at_mut(i);
        RealPoint::separate(&mut left[i - 1].0, &mut right[0].0);
    }
    Ok(pts)
}

/// Distinct real roots, sorted, with pairwise disjoint isolating data.
pub fn real_roots(f: &Polynomial) -> Result<Vec<RealPoint>> {
    Ok(real_roots_with_multiplicity(f)?.into_iter().map(|(p, _)| p).collect())
}

/// Isolating intervals for the distinct real roots of `f`, in increasing order.
pub fn isolate_roots(f: &Polynomial) -> Result<Vec<IsolatingInterval>> {
    Ok(real_roots(f)?
        .into_iter()
        .map(|p| match p {
            RealPoint::Rational(q) => IsolatingInterval { lo: q.clone(), hi: q.clone(), poly: Polynomial::linear_root(&q) },
            RealPoint::Algebraic(a) => IsolatingInterval { lo: a.lo().clone(), hi: a.hi().clone(), poly: a.poly().clone() },
        })
        .collect())
}

/// Bisects until the width is at most `width`; the endpoint signs of `poly` keep differing.
pub fn refine(interval: &IsolatingInterval, width: &Rational) -> IsolatingInterval {
    if interval.is_degenerate() {
        return interval.clone();
    }
    let mut p = interval.to_point();
    p.refine_to(width);
    IsolatingInterval { lo: p.lower_bound(), hi: p.upper_bound(), poly: interval.poly.clone() }
}

/// A rational strictly between two endpoints `a < b`.
pub fn rational_between(a: &Endpoint, b: &Endpoint) -> Rational {
    RealPoint::rational_between(&a.to_point(), &b.to_point())
}

/// A rational strictly between two bounds, which may be infinite.
pub fn rational_between_bounds(a: &Bound, b: &Bound) -> Rational {
    let one = Rational::from_integer(1.into());
    match (a, b) {
        (Bound::NegInfinity, Bound::PosInfinity) => Rational::zero(),
        (Bound::NegInfinity, Bound::At(e)) => e.to_point().lower_bound().floor() - one,
        (Bound::At(e), Bound::PosInfinity) => e.to_point().upper_bound().ceil() + one,
        (Bound::At(x), Bound::At(y)) => rational_between(x, y),
        _ => panic!("empty interval between bounds"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use crate::semialg::Branch;
    use std::cmp::Ordering;

    #[test]
    fn isolation_with_rational_roots() {
        // (x - 1/2)(x^2 - 2)(x + 3)
        let f = Polynomial::from_coeffs(vec![rat(-1, 2), int(1)]) * Polynomial::from_ints(&[-2, 0, 1]) * Polynomial::from_ints(&[3, 1]);
        let iv = isolate_roots(&f).unwrap();
        assert_eq!(iv.len(), 4);
        assert!(iv[0].is_degenerate() && iv[0].lo == int(-3));
        assert!(!iv[1].is_degenerate());
        assert!(iv[2].is_degenerate() && iv[2].lo == rat(1, 2));
        for w in iv.windows(2) {
            assert!(w[0].hi < w[1].lo);
        }
        let r = refine(&iv[3], &rat(1, 1000));
        assert!(&r.hi - &r.lo <= rat(1, 1000));
        assert_ne!(r.poly.eval(&r.lo).cmp(&int(0)), r.poly.eval(&r.hi).cmp(&int(0)));
    }

    #[test]
    fn between() {
        assert_eq!(rational_between(&Endpoint::Rational(int(1)), &Endpoint::Rational(int(2))), rat(3, 2));
        let r2 = Endpoint::surd(int(0), int(-2), Branch::Upper).unwrap();
        let q = rational_between(&r2, &Endpoint::Rational(rat(3, 2)));
        assert_eq!(compare_rational_surd(&q, &r2), Ordering::Greater);
        assert!(q < rat(3, 2));
        assert_eq!(rational_between_bounds(&Bound::NegInfinity, &Bound::rational(int(0))), int(-1));
    }

    #[test]
    fn signs_at_algebraic_points() {
        let roots = real_roots(&Polynomial::from_ints(&[-2, 0, 0, 1])).unwrap();
        assert_eq!(roots.len(), 1);
        let c = &roots[0];
        assert_eq!(c.sign_of(&Polynomial::from_ints(&[-1, 1])), Ordering::Greater);
        assert_eq!(c.sign_of(&Polynomial::from_coeffs(vec![rat(-5, 4), int(1)])), Ordering::Greater);
        assert_eq!(c.sign_of(&Polynomial::from_coeffs(vec![rat(-13, 10), int(1)])), Ordering::Less);
        assert_eq!(c.sign_of(&Polynomial::from_ints(&[-2, 0, 0, 1]).pow(2)), Ordering::Equal);
        assert_eq!(c.degree(), 3);
        assert!(c.to_endpoint().is_none());
    }

    #[test]
    fn endpoint_round_trip_through_points() {
        let e = Endpoint::from_radical(&int(-4), &int(1), &int(2), false).unwrap();
        assert_eq!(e.to_point().to_endpoint(), Some(e));
    }
}
