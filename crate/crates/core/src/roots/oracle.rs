use std::cmp::Ordering;

use num_traits::One;

use super::point::RealPoint;
use super::real_roots_with_multiplicity;
use super::sturm::{sturm_count, Bound};
use crate::arith::{Polynomial, Rational};
use crate::error::Result;
use crate::semialg::{Endpoint, SemiAlgSet};

/// Closed interval with possibly infinite ends; `lo == hi` is a point.
#[derive(Debug, Clone)]
pub struct RegionComponent {
    pub lo: Option<RealPoint>,
    pub hi: Option<RealPoint>,
}

impl RegionComponent {
    pub fn is_point(&self) -> bool {
        match (&self.lo, &self.hi) {
            (Some(a), Some(b)) => a.cmp_exact(b) == Ordering::Equal,
            _ => false,
        }
    }

    pub fn contains(&self, x: &RealPoint) -> bool {
        let above = self.lo.as_ref().is_none_or(|l| l.cmp_exact(x) != Ordering::Greater);
        let below = self.hi.as_ref().is_none_or(|h| h.cmp_exact(x) != Ordering::Less);
        above && below
    }

    pub fn contains_rational(&self, x: &Rational) -> bool {
        let above = self.lo.as_ref().is_none_or(|l| l.cmp_rational(x) != Ordering::Greater);
        let below = self.hi.as_ref().is_none_or(|h| h.cmp_rational(x) != Ordering::Less);
        above && below
    }
}

/// A finite union of disjoint closed intervals over real algebraic endpoints, sorted.
#[derive(Debug, Clone, Default)]
pub struct Region {
    pub comps: Vec<RegionComponent>,
}

impl Region {
    pub fn from_set(k: &SemiAlgSet) -> Self {
        k.to_region()
    }

    pub fn contains(&self, x: &RealPoint) -> bool {
        self.comps.iter().any(|c| c.contains(x))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonnegReport {
    pub nonnegative: bool,
    pub witness: Option<Endpoint>,
}

/// Where a zero of the target sits relative to the set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZeroLocation {
    Interior,
    Boundary { isolated: bool },
}

/// Zeros of `f` lying in the region, with multiplicity and location.
pub fn zeros_in(f: &Polynomial, region: &Region) -> Result<Vec<(RealPoint, usize, ZeroLocation)>> {
    let mut out = Vec::new();
    for (r, m) in real_roots_with_multiplicity(f)? {
        for c in &region.comps {
            if !c.contains(&r) {
                continue;
            }
            let at_lo = c.lo.as_ref().is_some_and(|l| l.cmp_exact(&r) == Ordering::Equal);
            let at_hi = c.hi.as_ref().is_some_and(|h| h.cmp_exact(&r) == Ordering::Equal);
            let loc = if at_lo && at_hi {
                ZeroLocation::Boundary { isolated: true }
            } else if at_lo || at_hi {
                ZeroLocation::Boundary { isolated: false }
            } else {
                ZeroLocation::Interior
            };
            out.push((r.clone(), m, loc));
            break;
        }
    }
    Ok(out)
}

/// `f >= 0` on the line: the odd-multiplicity part has no real root and `f` has a positive leading coefficient.
/// One Sturm count, with no root isolation.
pub(crate) fn nonneg_everywhere(f: &Polynomial) -> bool {
    if f.deg() % 2 == 1 || f.leading_coefficient() < Rational::from_integer(0.into()) {
        return false;
    }
    let (_, parts) = f.squarefree_decomposition();
    let odd = parts.iter().filter(|(_, i)| i % 2 == 1).fold(Polynomial::one(), |acc, (p, _)| acc * p.clone());
    odd.deg() == 0 || sturm_count(&odd, &Bound::NegInfinity, &Bound::PosInfinity) == 0
}

/// A point of the region where `f < 0`, preferring rational points.
pub(crate) fn check_nonneg(f: &Polynomial, region: &Region) -> Result<Option<RealPoint>> {
    if f.is_zero() {
        return Ok(None);
    }
    if f.deg() == 0 {
        let neg = f.leading_coefficient() < Rational::from_integer(0.into());
        return Ok(if neg { region_sample(region) } else { None });
    }
    if nonneg_everywhere(f) {
        return Ok(None);
    }
    let roots: Vec<RealPoint> = real_roots_with_multiplicity(f)?.into_iter().map(|(p, _)| p).collect();
    let one = Rational::one();
    for c in &region.comps {
        if c.is_point() {
            let p = c.lo.as_ref().unwrap();
            if p.sign_of(f) == Ordering::Less {
                return Ok(Some(p.clone()));
            }
            continue;
        }
        let inside: Vec<&RealPoint> = roots
            .iter()
            .filter(|r| {
                c.lo.as_ref().is_none_or(|l| l.cmp_exact(r) == Ordering::Less)
                    && c.hi.as_ref().is_none_or(|h| h.cmp_exact(r) == Ordering::Greater)
            })
            .collect();
        let mut breaks: Vec<Option<&RealPoint>> = vec![c.lo.as_ref()];
        breaks.extend(inside.iter().map(|r| Some(*r)));
        breaks.push(c.hi.as_ref());
        for w in breaks.windows(2) {
            let q = match (w[0], w[1]) {
                (None, None) => Rational::from_integer(0.into()),
                (None, Some(b)) => b.lower_bound().floor() - &one,
                (Some(a), None) => a.upper_bound().ceil() + &one,
                (Some(a), Some(b)) => RealPoint::rational_between(a, b),
            };
            if f.eval(&q) < Rational::from_integer(0.into()) {
                return Ok(Some(RealPoint::Rational(q)));
            }
        }
    }
    Ok(None)
}

fn region_sample(region: &Region) -> Option<RealPoint> {
    let c = region.comps.first()?;
    match (&c.lo, &c.hi) {
        (Some(a), Some(b)) if !c.is_point() => Some(RealPoint::Rational(RealPoint::rational_between(a, b))),
        (Some(a), _) => Some(a.clone()),
        (None, Some(b)) => Some(RealPoint::Rational(b.lower_bound().floor() - Rational::one())),
        (None, None) => Some(RealPoint::Rational(Rational::from_integer(0.into()))),
    }
}

/// Exact decision of `f >= 0` on `K`, with a witness of negativity.
pub fn is_nonneg_on(f: &Polynomial, k: &SemiAlgSet) -> Result<NonnegReport> {
    let w = check_nonneg(f, &k.to_region())?;
    Ok(NonnegReport { nonnegative: w.is_none(), witness: w.map(|p| p.to_endpoint().expect("witnesses are rational or set endpoints")) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use crate::semialg::{Branch, Component};

    fn seg(a: i64, b: i64) -> Component {
        Component::Segment(Endpoint::Rational(int(a)), Endpoint::Rational(int(b)))
    }

    #[test]
    fn spec_examples() {
        // x^2 - 3x + 2 on [0,1] U [2,3]: nonnegative.
        let k = SemiAlgSet::new(vec![seg(0, 1), seg(2, 3)]);
        let f = Polynomial::from_ints(&[2, -3, 1]);
        assert!(is_nonneg_on(&f, &k).unwrap().nonnegative);
        // On [0,3] the witness lies in (1,2).
        let k = SemiAlgSet::new(vec![seg(0, 3)]);
        let r = is_nonneg_on(&f, &k).unwrap();
        assert!(!r.nonnegative);
        let w = r.witness.unwrap();
        let w = w.as_rational().unwrap();
        assert!(f.eval(w) < int(0) && *w > int(1) && *w < int(2));
    }

    #[test]
    fn surd_endpoints() {
        let r2 = Endpoint::surd(int(0), int(-2), Branch::Upper).unwrap();
        let k = SemiAlgSet::new(vec![Component::Segment(r2.conjugate().unwrap(), r2.clone())]);
        // 2 - x^2 >= 0 exactly on the disk.
        assert!(is_nonneg_on(&Polynomial::from_ints(&[2, 0, -1]), &k).unwrap().nonnegative);
        // x + 1.41 fails near -sqrt2.
        let f = Polynomial::from_coeffs(vec![rat(141, 100), int(1)]);
        let r = is_nonneg_on(&f, &k).unwrap();
        assert!(!r.nonnegative);
        let w = r.witness.unwrap();
        assert!(f.eval(w.as_rational().unwrap()) < int(0));
    }

    #[test]
    fn isolated_points() {
        let k = SemiAlgSet::new(vec![Component::RayBelow(Endpoint::Rational(int(0))), Component::Point(Endpoint::Rational(int(1)))]);
        // -x(x-1) is negative on (-inf, 0) only
        let f = Polynomial::from_ints(&[0, 1, -1]);
        assert!(!is_nonneg_on(&f, &k).unwrap().nonnegative);
        let g = Polynomial::from_ints(&[0, -1, 1]);
        assert!(is_nonneg_on(&g, &k).unwrap().nonnegative);
        let h = Polynomial::from_ints(&[-1, 0, 1]).scale(&int(-1)) * Polynomial::from_ints(&[0, -1]);
        // h = x(x^2 - 1)... negative on (-inf,-1) so witness there
        let r = is_nonneg_on(&h, &k).unwrap();
        assert!(!r.nonnegative);
    }
}
