//! Exact rational numbers and dense univariate polynomials.

mod factor;
mod modp;
mod poly;

pub use factor::{factor_over_rationals, is_irreducible, set_factor_seed, FACTOR_DEGREE_LIMIT};
pub use poly::Polynomial;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `-?[0-9]+(/[1-9][0-9]*)?` exactly; anything else is rejected.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let digits = num.strip_prefix('-').unwrap_or(num);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let n: BigInt = num.parse().ok()?;
    let d: BigInt = match den {
        Some(d) => {
            if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) || d.starts_with('0') {
                return None;
            }
            d.parse().ok()?
        }
        None => BigInt::one(),
    };
    Some(Rational::new(n, d))
}

pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}

pub fn rational_abs(q: &Rational) -> Rational {
    q.abs()
}

/// Largest integer not exceeding `q`.
pub fn floor(q: &Rational) -> BigInt {
    q.floor().to_integer()
}

/// Exact square root of a nonnegative rational, if it is a perfect square.
pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    if &(&n * &n) == q.numer() && &(&d * &d) == q.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

pub fn is_rational_square(q: &Rational) -> bool {
    rational_sqrt(q).is_some()
}

/// The simplest rational strictly between `a < b`: smallest denominator, then closest to zero.
pub fn simplest_between(a: &Rational, b: &Rational) -> Rational {
    debug_assert!(a < b);
    if a.is_negative() && b.is_positive() {
        return Rational::zero();
    }
    if !a.is_positive() && !b.is_positive() {
        return -simplest_between(&-b, &-a);
    }
    // 0 <= a < b
    simplest_open(a, b)
}

fn simplest_open(a: &Rational, b: &Rational) -> Rational {
    // Continued-fraction descent on 0 <= a < b.
    let fl = a.floor();
    let next = &fl + Rational::one();
    if next < *b {
        return next;
    }
    let fa = a - &fl;
    let fb = b - &fl;
    if fa.is_zero() {
        let k = fb.recip().floor() + Rational::one();
        return fl + k.recip();
    }
    let inner = simplest_open(&fb.recip(), &fa.recip());
    fl + inner.recip()
}

pub(crate) fn gcd_int(a: &BigInt, b: &BigInt) -> BigInt {
    a.gcd(b)
}

pub(crate) fn lcm_int(a: &BigInt, b: &BigInt) -> BigInt {
    a.lcm(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_strict() {
        assert_eq!(parse_rational("-3/4"), Some(rat(-3, 4)));
        assert_eq!(parse_rational("6/8"), Some(rat(3, 4)));
        assert_eq!(parse_rational("12"), Some(int(12)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("1/05"), None);
        assert_eq!(parse_rational("+1"), None);
        assert_eq!(parse_rational("1.5"), None);
        assert_eq!(parse_rational(""), None);
        assert_eq!(parse_rational("-"), None);
    }

    #[test]
    fn simplest() {
        assert_eq!(simplest_between(&int(1), &int(2)), rat(3, 2));
        assert_eq!(simplest_between(&int(-1), &int(1)), int(0));
        assert_eq!(simplest_between(&rat(1, 3), &rat(1, 2)), rat(2, 5));
        assert_eq!(simplest_between(&int(0), &rat(1, 10)), rat(1, 11));
        assert_eq!(simplest_between(&rat(-5, 2), &rat(-1, 2)), int(-1));
        assert_eq!(simplest_between(&rat(7, 5), &rat(3, 2)), rat(10, 7));
        assert_eq!(simplest_between(&rat(1, 2), &int(3)), int(1));
    }

    #[test]
    fn sqrt() {
        assert_eq!(rational_sqrt(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(rational_sqrt(&int(2)), None);
        assert!(!is_rational_square(&rat(1, 2)));
    }
}
