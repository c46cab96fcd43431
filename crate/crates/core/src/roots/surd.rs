use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::{Polynomial, Rational};
use crate::semialg::Endpoint;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Below,
    Above,
}

/// Sign of `a + b*sqrt(d)` for `d > 0` not a rational square.
pub(crate) fn sign_radical(a: &Rational, b: &Rational, d: &Rational) -> Ordering {
    let sa = a.cmp(&Rational::zero());
    let sb = b.cmp(&Rational::zero());
    if sb == Ordering::Equal {
        return sa;
    }
    if sa == Ordering::Equal || sa == sb {
        return sb;
    }
    // Opposite signs: compare a^2 with b^2 d.
    match (a * a).cmp(&(b * b * d)) {
        Ordering::Greater => sa,
        Ordering::Less => sb,
        Ordering::Equal => Ordering::Equal,
    }
}

/// Exact sign of `f` at an endpoint, by reduction modulo the minimal polynomial.
pub fn sign_at(f: &Polynomial, c: &Endpoint) -> Ordering {
    match c {
        Endpoint::Rational(a) => f.eval(a).cmp(&Rational::zero()),
        Endpoint::QuadSurd { .. } => {
            let r = f.rem(&c.minimal_polynomial()).expect("monic modulus");
            let (u, v, d) = c.radical_form();
            // r0 + r1*(u + v*sqrt(d))
            let r0 = r.coeff(0);
            let r1 = r.coeff(1);
            sign_radical(&(&r0 + &r1 * &u), &(&r1 * &v), &d)
        }
    }
}

/// Order of rational `a` relative to endpoint `c`.
pub fn compare_rational_surd(a: &Rational, c: &Endpoint) -> Ordering {
    match c {
        Endpoint::Rational(b) => a.cmp(b),
        Endpoint::QuadSurd { .. } => {
            let (u, v, d) = c.radical_form();
            // sign(a - u - v sqrt d)
            sign_radical(&(a - &u), &-v, &d)
        }
    }
}

/// A convergent of the continued fraction of `c` lying strictly on `side` within `tol`.
///
/// Rational `c` yields the simplest rational in the half-open window of width `tol`.
pub fn rational_approx_surd(c: &Endpoint, tol: &Rational, side: Side) -> Rational {
    assert!(tol.is_positive(), "tolerance must be positive");
    if let Endpoint::Rational(a) = c {
        return match side {
            Side::Below => crate::arith::simplest_between(&(a - tol), a),
            Side::Above => crate::arith::simplest_between(a, &(a + tol)),
        };
    }
    let (u0, v0, d) = c.radical_form();
    let mut u = u0;
    let mut v = v0;
    // Convergents h/k with the usual seeds h_{-2}/k_{-2} = 0/1, h_{-1}/k_{-1} = 1/0.
    let (mut hm2, mut hm1) = (BigInt::zero(), BigInt::one());
    let (mut km2, mut km1) = (BigInt::one(), BigInt::zero());
    loop {
        let a = floor_radical(&u, &v, &d);
        let hn = &a * &hm1 + &hm2;
        let kn = &a * &km1 + &km2;
        let q = Rational::new(hn.clone(), kn.clone());
        let ord = compare_rational_surd(&q, c);
        let ok = match side {
            Side::Below => ord == Ordering::Less && compare_rational_surd(&(&q + tol), c) == Ordering::Greater,
            Side::Above => ord == Ordering::Greater && compare_rational_surd(&(&q - tol), c) == Ordering::Less,
        };
        if ok {
            return q;
        }
        hm2 = hm1;
        hm1 = hn;
        km2 = km1;
        km1 = kn;
        // theta <- 1 / (theta - a)
        let ua = &u - Rational::from_integer(a);
        let den = &ua * &ua - &v * &v * &d;
        u = &ua / &den;
        v = -&v / &den;
    }
}

/// `floor(u + v*sqrt(d))` for irrational values.
fn floor_radical(u: &Rational, v: &Rational, d: &Rational) -> BigInt {
    use num_traits::ToPrimitive;
    let approx = u.to_f64().unwrap_or(0.0) + v.to_f64().unwrap_or(0.0) * d.to_f64().unwrap_or(0.0).sqrt();
    let mut n = if approx.is_finite() { BigInt::from(approx.floor() as i64) } else { u.floor().to_integer() };
    // Adjust until n <= theta < n + 1.
    loop {
        let below = sign_radical(&(u - Rational::from_integer(n.clone())), v, d);
        if below == Ordering::Less {
            n -= 1;
            continue;
        }
        let above = sign_radical(&(u - Rational::from_integer(&n + 1)), v, d);
        if above != Ordering::Less {
            n += 1;
            continue;
        }
        return n;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use crate::semialg::Branch;

    fn sqrt2() -> Endpoint {
        Endpoint::surd(int(0), int(-2), Branch::Upper).unwrap()
    }

    #[test]
    fn sign_at_sqrt2() {
        let f = Polynomial::from_ints(&[-2, 0, 1]);
        assert_eq!(sign_at(&f, &sqrt2()), Ordering::Equal);
        let g = Polynomial::from_ints(&[-3, 2]);
        assert_eq!(sign_at(&g, &sqrt2()), Ordering::Less);
        let h = Polynomial::from_ints(&[0, 0, 0, 1]);
        assert_eq!(sign_at(&h, &sqrt2().conjugate().unwrap()), Ordering::Less);
    }

    #[test]
    fn continued_fraction_sides() {
        let tol = rat(1, 100);
        assert_eq!(rational_approx_surd(&sqrt2(), &tol, Side::Above), rat(17, 12));
        assert_eq!(rational_approx_surd(&sqrt2(), &tol, Side::Below), rat(41, 29));
        let q = rational_approx_surd(&sqrt2().conjugate().unwrap(), &rat(1, 1000), Side::Below);
        assert!(compare_rational_surd(&q, &sqrt2().conjugate().unwrap()) == Ordering::Less);
    }

    #[test]
    fn floor_of_radicals() {
        assert_eq!(floor_radical(&int(0), &int(1), &int(2)), BigInt::from(1));
        assert_eq!(floor_radical(&int(0), &int(-1), &int(2)), BigInt::from(-2));
        assert_eq!(floor_radical(&rat(1, 2), &rat(1, 2), &int(5)), BigInt::from(1));
    }
}
