use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Signed, ToPrimitive, Zero};

use super::sturm::SturmChain;
use crate::arith::{simplest_between, Polynomial, Rational};
use crate::semialg::{Branch, Endpoint};

/// A root of a monic irreducible polynomial of degree at least 2, isolated in `(lo, hi)`.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraicRoot {
    poly: Polynomial,
    lo: Rational,
    hi: Rational,
    lo_sign: Ordering,
}

impl AlgebraicRoot {
    /// `poly` must be irreducible with exactly one root in `(lo, hi)`.
    pub(crate) fn new(poly: Polynomial, lo: Rational, hi: Rational) -> Self {
        let lo_sign = poly.eval(&lo).cmp(&Rational::zero());
        debug_assert!(lo_sign != Ordering::Equal);
        AlgebraicRoot { poly, lo, hi, lo_sign }
    }

    pub fn poly(&self) -> &Polynomial {
        &self.poly
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn bisect(&mut self) {
        let mid = (&self.lo + &self.hi) / Rational::from_integer(2.into());
        if self.poly.eval(&mid).cmp(&Rational::zero()) == self.lo_sign {
            self.lo = mid;
        } else {
            self.hi = mid;
        }
    }

    /// Order of the root relative to `r`; exact, no refinement needed.
    pub fn cmp_rational(&self, r: &Rational) -> Ordering {
        if r <= &self.lo {
            return Ordering::Greater;
        }
        if r >= &self.hi {
            return Ordering::Less;
        }
        if self.poly.eval(r).cmp(&Rational::zero()) == self.lo_sign {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }
}

/// A real algebraic number.
#[derive(Clone, PartialEq, Eq)]
pub enum RealPoint {
    Rational(Rational),
    Algebraic(AlgebraicRoot),
}

impl RealPoint {
    pub fn from_endpoint(e: &Endpoint) -> Self {
        match e {
            Endpoint::Rational(q) => RealPoint::Rational(q.clone()),
            Endpoint::QuadSurd { branch, .. } => {
                let roots = super::isolate_irreducible(&e.minimal_polynomial());
                debug_assert_eq!(roots.len(), 2);
                let idx = match branch {
                    Branch::Lower => 0,
                    Branch::Upper => 1,
                };
                RealPoint::Algebraic(roots.into_iter().nth(idx).unwrap())
            }
        }
    }

    /// Rational or quadratic points as endpoints; `None` for higher degree.
    pub fn to_endpoint(&self) -> Option<Endpoint> {
        match self {
            RealPoint::Rational(q) => Some(Endpoint::Rational(q.clone())),
            RealPoint::Algebraic(a) if a.poly.deg() == 2 => {
                let s = -a.poly.coeff(1);
                let p = a.poly.coeff(0);
                let mid = &s / Rational::from_integer(2.into());
                let branch = if a.cmp_rational(&mid) == Ordering::Less { Branch::Lower } else { Branch::Upper };
                Some(Endpoint::QuadSurd { s, p, branch })
            }
            _ => None,
        }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            RealPoint::Rational(q) => Some(q),
            _ => None,
        }
    }

    pub fn degree(&self) -> usize {
        match self {
            RealPoint::Rational(_) => 1,
            RealPoint::Algebraic(a) => a.poly.deg(),
        }
    }

    pub fn minimal_polynomial(&self) -> Polynomial {
        match self {
            RealPoint::Rational(q) => Polynomial::linear_root(q),
            RealPoint::Algebraic(a) => a.poly.clone(),
        }
    }

    /// A rational `<=` the point, strictly below unless the point is rational.
    pub fn lower_bound(&self) -> Rational {
        match self {
            RealPoint::Rational(q) => q.clone(),
            RealPoint::Algebraic(a) => a.lo.clone(),
        }
    }

    pub fn upper_bound(&self) -> Rational {
        match self {
            RealPoint::Rational(q) => q.clone(),
            RealPoint::Algebraic(a) => a.hi.clone(),
        }
    }

    pub fn refine(&mut self) {
        if let RealPoint::Algebraic(a) = self {
            a.bisect();
        }
    }

    pub fn refine_to(&mut self, width: &Rational) {
        if let RealPoint::Algebraic(a) = self {
            while &a.width() > width {
                a.bisect();
            }
        }
    }

    pub fn cmp_rational(&self, r: &Rational) -> Ordering {
        match self {
            RealPoint::Rational(q) => q.cmp(r),
            RealPoint::Algebraic(a) => a.cmp_rational(r),
        }
    }

    /// Exact order; refines private copies.
    pub fn cmp_exact(&self, other: &RealPoint) -> Ordering {
        match (self, other) {
            (RealPoint::Rational(a), RealPoint::Rational(b)) => a.cmp(b),
            (a, RealPoint::Rational(b)) => a.cmp_rational(b),
            (RealPoint::Rational(a), b) => b.cmp_rational(a).reverse(),
            (RealPoint::Algebraic(a), RealPoint::Algebraic(b)) => {
                if a.poly == b.poly {
                    let l = if a.lo > b.lo { &a.lo } else { &b.lo };
                    let h = if a.hi < b.hi { &a.hi } else { &b.hi };
                    if l < h {
                        let sl = a.poly.eval(l).cmp(&Rational::zero());
                        let sh = a.poly.eval(h).cmp(&Rational::zero());
                        if sl != sh {
                            return Ordering::Equal;
                        }
                    }
                }
                let mut a = a.clone();
                let mut b = b.clone();
                loop {
                    if a.hi <= b.lo {
                        return Ordering::Less;
                    }
                    if b.hi <= a.lo {
                        return Ordering::Greater;
                    }
                    a.bisect();
                    b.bisect();
                }
            }
        }
    }

    /// Refines both so that their isolating intervals are disjoint; requires `a != b`.
    pub fn separate(a: &mut RealPoint, b: &mut RealPoint) {
        loop {
            if a.upper_bound() < b.lower_bound() || b.upper_bound() < a.lower_bound() {
                return;
            }
            if a.lower_bound() == a.upper_bound() && b.lower_bound() == b.upper_bound() {
                return;
            }
            a.refine();
            b.refine();
        }
    }

    /// Exact sign of `f` at the point.
    pub fn sign_of(&self, f: &Polynomial) -> Ordering {
        match self {
            RealPoint::Rational(q) => f.eval(q).cmp(&Rational::zero()),
            RealPoint::Algebraic(a) => {
                if f.is_zero() || f.rem(&a.poly).expect("nonzero").is_zero() {
                    return Ordering::Equal;
                }
                let chain = SturmChain::new(f);
                let mut a = a.clone();
                loop {
                    let slo = f.eval(&a.lo);
                    if !slo.is_zero() && chain.count_rational(&a.lo, &a.hi) == 0 {
                        return slo.cmp(&Rational::zero());
                    }
                    a.bisect();
                }
            }
        }
    }

    /// A rational strictly between `a < b`, as simple as the isolating data allow.
    pub fn rational_between(a: &RealPoint, b: &RealPoint) -> Rational {
        let mut a = a.clone();
        let mut b = b.clone();
        loop {
            let ua = a.upper_bound();
            let lb = b.lower_bound();
            if ua < lb {
                return simplest_between(&ua, &lb);
            }
            if ua == lb {
                // Equal bounds are hit only if at most one side is rational.
                if a.as_rational().is_none() || b.as_rational().is_none() {
                    a.refine();
                    b.refine();
                    continue;
                }
                panic!("rational_between called with equal points");
            }
            a.refine();
            b.refine();
        }
    }

    /// A rational on the requested side within `tol`.
    pub fn approx_from(&self, tol: &Rational, below: bool) -> Rational {
        match self {
            RealPoint::Rational(q) => {
                if below {
                    simplest_between(&(q - tol), q)
                } else {
                    simplest_between(q, &(q + tol))
                }
            }
            RealPoint::Algebraic(a) => {
                let mut a = a.clone();
                while &a.width() >= tol {
                    a.bisect();
                }
                if below {
                    a.lo.clone()
                } else {
                    a.hi.clone()
                }
            }
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            RealPoint::Rational(q) => q.to_f64().unwrap_or(f64::NAN),
            RealPoint::Algebraic(a) => {
                let mut a = a.clone();
                let tol = Rational::new(One::one(), num_bigint::BigInt::from(1u64 << 60));
                while a.width() > &tol * (a.lo.abs() + Rational::one()) {
                    a.bisect();
                }
                ((&a.lo + &a.hi) / Rational::from_integer(2.into())).to_f64().unwrap_or(f64::NAN)
            }
        }
    }
}

impl fmt::Debug for RealPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RealPoint::Rational(q) => write!(f, "{q}"),
            RealPoint::Algebraic(a) => write!(f, "root of {} in ({}, {})", a.poly, a.lo, a.hi),
        }
    }
}

impl fmt::Debug for AlgebraicRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "root of {} in ({}, {})", self.poly, self.lo, self.hi)
    }
}
