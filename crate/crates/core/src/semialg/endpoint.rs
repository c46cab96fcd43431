use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{is_rational_square, Polynomial, Rational};
use crate::error::{Error, Result};
use crate::roots::RealPoint;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Branch {
    Lower,
    Upper,
}

/// A boundary point: a rational, or one root of an irreducible rational quadratic.
///
/// `QuadSurd { s, p, branch }` is a root of `x^2 - s*x + p`; `Lower` is `(s - sqrt(s^2 - 4p))/2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Endpoint {
    Rational(Rational),
    QuadSurd { s: Rational, p: Rational, branch: Branch },
}

impl Endpoint {
    pub fn rational(q: Rational) -> Self {
        Endpoint::Rational(q)
    }

    pub fn surd(s: Rational, p: Rational, branch: Branch) -> Result<Self> {
        let disc = &s * &s - Rational::from_integer(4.into()) * &p;
        if !disc.is_positive() {
            return Err(Error::InvalidArgument(format!("x^2 - ({s})x + ({p}) has no two real roots")));
        }
        if is_rational_square(&disc) {
            return Err(Error::InvalidArgument(format!("x^2 - ({s})x + ({p}) has rational roots")));
        }
        Ok(Endpoint::QuadSurd { s, p, branch })
    }

    /// `u + sign * v * sqrt(d)` with `v > 0`, `d > 0` not a rational square.
    pub fn from_radical(u: &Rational, v: &Rational, d: &Rational, upper: bool) -> Result<Self> {
        if !v.is_positive() {
            return Err(Error::InvalidArgument("radical coefficient must be positive".into()));
        }
        let two = Rational::from_integer(2.into());
        let s = u * &two;
        let p = u * u - v * v * d;
        Endpoint::surd(s, p, if upper { Branch::Upper } else { Branch::Lower })
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Endpoint::Rational(q) => Some(q),
            _ => None,
        }
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, Endpoint::Rational(_))
    }

    /// `x^2 - s*x + p` for a surd, `x - a` for a rational.
    pub fn minimal_polynomial(&self) -> Polynomial {
        match self {
            Endpoint::Rational(a) => Polynomial::linear_root(a),
            Endpoint::QuadSurd { s, p, .. } => Polynomial::from_coeffs(vec![p.clone(), -s.clone(), Rational::one()]),
        }
    }

    /// The other root of the minimal polynomial of a surd.
    pub fn conjugate(&self) -> Option<Endpoint> {
        match self {
            Endpoint::Rational(_) => None,
            Endpoint::QuadSurd { s, p, branch } => Some(Endpoint::QuadSurd {
                s: s.clone(),
                p: p.clone(),
                branch: match branch {
                    Branch::Lower => Branch::Upper,
                    Branch::Upper => Branch::Lower,
                },
            }),
        }
    }

    pub fn is_conjugate_of(&self, other: &Endpoint) -> bool {
        self.conjugate().as_ref() == Some(other)
    }

    /// `(u, v, d)` with value `u + v*sqrt(d)`.
    pub fn radical_form(&self) -> (Rational, Rational, Rational) {
        match self {
            Endpoint::Rational(a) => (a.clone(), Rational::zero(), Rational::zero()),
            Endpoint::QuadSurd { s, p, branch } => {
                let two = Rational::from_integer(2.into());
                let four = Rational::from_integer(4.into());
                let d = (s * s - &four * p) / &four;
                let v = match branch {
                    Branch::Lower => -Rational::one(),
                    Branch::Upper => Rational::one(),
                };
                (s / &two, v, d)
            }
        }
    }

    pub fn to_point(&self) -> RealPoint {
        RealPoint::from_endpoint(self)
    }

    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        let (u, v, d) = self.radical_form();
        u.to_f64().unwrap_or(f64::NAN) + v.to_f64().unwrap_or(f64::NAN) * d.to_f64().unwrap_or(f64::NAN).sqrt()
    }

    /// Exact comparison.
    pub fn cmp_exact(&self, other: &Endpoint) -> Ordering {
        match (self, other) {
            (Endpoint::Rational(a), Endpoint::Rational(b)) => a.cmp(b),
            (Endpoint::Rational(a), b) => crate::roots::compare_rational_surd(a, b),
            (a, Endpoint::Rational(b)) => crate::roots::compare_rational_surd(b, a).reverse(),
            _ => {
                if self == other {
                    return Ordering::Equal;
                }
                self.to_point().cmp_exact(&other.to_point())
            }
        }
    }
}

impl PartialOrd for Endpoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp_exact(other))
    }
}

impl fmt::Display for Endpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::io::render_endpoint(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    #[test]
    fn validation() {
        assert!(Endpoint::surd(int(0), int(-2), Branch::Upper).is_ok());
        assert!(Endpoint::surd(int(3), int(2), Branch::Upper).is_err());
        assert!(Endpoint::surd(int(0), int(1), Branch::Upper).is_err());
    }

    #[test]
    fn ordering() {
        let r2 = Endpoint::surd(int(0), int(-2), Branch::Upper).unwrap();
        let m2 = r2.conjugate().unwrap();
        assert_eq!(m2.cmp_exact(&r2), Ordering::Less);
        assert_eq!(Endpoint::Rational(rat(7, 5)).cmp_exact(&r2), Ordering::Less);
        assert_eq!(Endpoint::Rational(rat(3, 2)).cmp_exact(&r2), Ordering::Greater);
        let r3 = Endpoint::surd(int(0), int(-3), Branch::Upper).unwrap();
        assert_eq!(r2.cmp_exact(&r3), Ordering::Less);
        // -4 + sqrt(2) vs -sqrt(2)
        let a = Endpoint::from_radical(&int(-4), &int(1), &int(2), true).unwrap();
        assert_eq!(a.cmp_exact(&m2), Ordering::Less);
    }

    #[test]
    fn radical_roundtrip() {
        let e = Endpoint::from_radical(&rat(1, 2), &int(3), &int(5), false).unwrap();
        let (u, v, d) = e.radical_form();
        assert_eq!(u, rat(1, 2));
        assert_eq!(&v * &v * d, int(45));
    }
}
