use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{gcd_int, lcm_int, Rational};
use crate::error::{Error, Result};

/// Dense polynomial in one variable, coefficients in ascending order.
///
/// The coefficient vector never ends in a zero, so the zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| Rational::from_integer(BigInt::from(c))).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn x() -> Self {
        Self::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut v = vec![Rational::zero(); k + 1];
        v[k] = c;
        Self::from_coeffs(v)
    }

    /// `x - a`.
    pub fn linear_root(a: &Rational) -> Self {
        Self::from_coeffs(vec![-a.clone(), Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0; handy for bounds.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading_coefficient(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * Rational::from_integer(BigInt::from(i))).collect())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let lc = self.leading_coefficient();
        self.scale(&lc.recip())
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn div_rem(&self, d: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let Some(nd) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if nd < dd {
            return Ok((Self::zero(), self.clone()));
        }
        let lc_inv = d.leading_coefficient().recip();
        let mut r = self.coeffs.clone();
        let mut q = vec![Rational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &r[k + dd] * &lc_inv;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[k + j] -= &c * dc;
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        Ok((Self::from_coeffs(q), Self::from_coeffs(r)))
    }

    /// Quotient if `d` divides `self` exactly.
    pub fn exact_div(&self, d: &Polynomial) -> Option<Polynomial> {
        let (q, r) = self.div_rem(d).ok()?;
        r.is_zero().then_some(q)
    }

    pub fn rem(&self, d: &Polynomial) -> Result<Polynomial> {
        Ok(self.div_rem(d)?.1)
    }

    /// Monic greatest common divisor; zero only when both inputs are zero.
    pub fn gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
        let mut a = a.clone();
        let mut b = b.clone();
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r.primitive_part_rational();
        }
        a.monic()
    }

    /// `self` scaled so that its coefficients are coprime integers with positive leading coefficient.
    pub fn primitive_part_rational(&self) -> Polynomial {
        if self.is_zero() {
            return Self::zero();
        }
        let (_, ints) = self.to_primitive_integer();
        Self::from_coeffs(ints.into_iter().map(Rational::from_integer).collect())
    }

    /// `self = content * P` with `P` a primitive integer polynomial with positive leading coefficient.
    pub fn to_primitive_integer(&self) -> (Rational, Vec<BigInt>) {
        if self.is_zero() {
            return (Rational::zero(), Vec::new());
        }
        let mut den = BigInt::one();
        for c in &self.coeffs {
            den = lcm_int(&den, c.denom());
        }
        let mut ints: Vec<BigInt> = self.coeffs.iter().map(|c| (c * Rational::from_integer(den.clone())).to_integer()).collect();
        let mut g = BigInt::zero();
        for c in &ints {
            g = gcd_int(&g, c);
        }
        if ints.last().unwrap().is_negative() {
            g = -g;
        }
        for c in ints.iter_mut() {
            *c = &*c / &g;
        }
        (Rational::new(g, den), ints)
    }

    pub fn from_integers(ints: &[BigInt]) -> Self {
        Self::from_coeffs(ints.iter().cloned().map(Rational::from_integer).collect())
    }

    /// `f(g(x))`.
    pub fn compose(&self, g: &Polynomial) -> Polynomial {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * g) + &Self::constant(c.clone());
        }
        acc
    }

    /// `f(alpha*x + beta)`.
    pub fn affine_substitute(&self, alpha: &Rational, beta: &Rational) -> Polynomial {
        self.compose(&Self::from_coeffs(vec![beta.clone(), alpha.clone()]))
    }

    /// `f(x + a)`; its coefficients are the Taylor coefficients of `f` at `a`.
    pub fn shift(&self, a: &Rational) -> Polynomial {
        self.affine_substitute(&Rational::one(), a)
    }

    /// `f(x^2)`.
    pub fn substitute_square(&self) -> Polynomial {
        let mut v = vec![Rational::zero(); 2 * self.coeffs.len()];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[2 * i] = c.clone();
        }
        Self::from_coeffs(v)
    }

    /// `(alpha, beta)` with `f(x) = alpha(x^2) + x*beta(x^2)`.
    pub fn even_odd_split(&self) -> (Polynomial, Polynomial) {
        let even = self.coeffs.iter().step_by(2).cloned().collect();
        let odd = self.coeffs.iter().skip(1).step_by(2).cloned().collect();
        (Self::from_coeffs(even), Self::from_coeffs(odd))
    }

    /// Yun's algorithm: monic pairwise coprime `(p_i, i)` with `f = lc * prod p_i^i`.
    pub fn squarefree_decomposition(&self) -> (Rational, Vec<(Polynomial, usize)>) {
        let lc = self.leading_coefficient();
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return (lc, out);
        }
        let f = self.monic();
        let fp = f.derivative();
        let a = Self::gcd(&f, &fp);
        let mut b = f.exact_div(&a).expect("gcd divides");
        let mut c = fp.exact_div(&a).expect("gcd divides");
        let mut d = &c - &b.derivative();
        let mut i = 1;
        loop {
            let g = Self::gcd(&b, &d);
            if !g.is_constant() {
                out.push((g.clone(), i));
            }
            b = b.exact_div(&g).expect("gcd divides");
            if b.is_constant() {
                break;
            }
            c = d.exact_div(&g).expect("gcd divides");
            d = &c - &b.derivative();
            i += 1;
        }
        (lc, out)
    }

    /// Monic product of the distinct irreducible factors.
    pub fn squarefree_part(&self) -> Polynomial {
        if self.degree().unwrap_or(0) == 0 {
            return Self::one();
        }
        let g = Self::gcd(self, &self.derivative());
        self.exact_div(&g).expect("gcd divides").monic()
    }

    /// Multiplicity of `a` as a root.
    pub fn root_multiplicity(&self, a: &Rational) -> usize {
        if self.is_zero() {
            return usize::MAX;
        }
        let t = self.shift(a);
        t.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    pub fn is_even(&self) -> bool {
        self.coeffs.iter().skip(1).step_by(2).all(|c| c.is_zero())
    }

    /// Sum of the coefficients' sizes; a rough cost measure.
    pub fn bit_size(&self) -> u64 {
        self.coeffs.iter().map(|c| c.numer().bits() + c.denom().bits()).sum()
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::io::render_poly(self, "x"))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::io::render_poly(self, "x"))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Polynomial::from_coeffs(v)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut v = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        Polynomial::from_coeffs(v)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: &Polynomial) -> Polynomial {
                (&self).$m(rhs)
            }
        }
        impl $tr<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    #[test]
    fn trailing_zeros_trimmed() {
        assert_eq!(p(&[1, 2, 0, 0]).coeffs().len(), 2);
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(Polynomial::zero().degree(), None);
    }

    #[test]
    fn division() {
        let f = p(&[2, -3, 1]);
        let (q, r) = f.div_rem(&p(&[-1, 1])).unwrap();
        assert_eq!(q, p(&[-2, 1]));
        assert!(r.is_zero());
        assert_eq!(f.div_rem(&Polynomial::zero()), Err(Error::DivisionByZero));
        let (q, r) = p(&[1, 0, 1]).div_rem(&p(&[0, 2])).unwrap();
        assert_eq!(q, Polynomial::from_coeffs(vec![int(0), rat(1, 2)]));
        assert_eq!(r, p(&[1]));
    }

    #[test]
    fn gcd_is_monic() {
        let a = p(&[-2, 2]) * p(&[3, 1]);
        let b = p(&[-1, 1]) * p(&[5, 1]);
        assert_eq!(Polynomial::gcd(&a, &b), p(&[-1, 1]));
        assert_eq!(Polynomial::gcd(&p(&[4]), &p(&[6])), p(&[1]));
    }

    #[test]
    fn yun() {
        // (x-1)^2 (x+2)^3 x
        let f = p(&[-1, 1]).pow(2) * p(&[2, 1]).pow(3) * p(&[0, 3]);
        let (lc, parts) = f.squarefree_decomposition();
        assert_eq!(lc, int(3));
        assert_eq!(parts, vec![(p(&[0, 1]), 1), (p(&[-1, 1]), 2), (p(&[2, 1]), 3)]);
        assert_eq!(f.squarefree_part(), p(&[0, 1]) * p(&[-1, 1]) * p(&[2, 1]));
    }

    #[test]
    fn affine_and_split() {
        let f = p(&[2, -3, 1]);
        assert_eq!(f.affine_substitute(&int(2), &int(1)), p(&[0, -2, 4]));
        let (a, b) = p(&[1, 2, 3, 4, 5]).even_odd_split();
        assert_eq!(a, p(&[1, 3, 5]));
        assert_eq!(b, p(&[2, 4]));
        assert_eq!(p(&[1, 2]).substitute_square(), p(&[1, 0, 2]));
        assert_eq!(f.root_multiplicity(&int(1)), 1);
        assert_eq!(p(&[-1, 1]).pow(3).root_multiplicity(&int(1)), 3);
    }

    #[test]
    fn primitive() {
        let f = Polynomial::from_coeffs(vec![rat(-1, 2), rat(3, 4)]);
        let (c, ints) = f.to_primitive_integer();
        assert_eq!(c, rat(1, 4));
        assert_eq!(ints, vec![BigInt::from(-2), BigInt::from(3)]);
    }
}
