//! Numeric root approximation used to seed exact two-square decompositions.
//!
//! Nothing here is trusted: callers round and verify every identity exactly.

use num_bigint::{BigInt, Sign};
use num_complex::Complex64;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::arith::{Polynomial, Rational};

/// Aberth iteration in `f64` on a polynomial with real coefficients (ascending).
pub(crate) fn aberth_f64(coeffs: &[f64]) -> Option<Vec<Complex64>> {
    let n = coeffs.len() - 1;
    let lc = coeffs[n];
    if n == 0 || lc == 0.0 || coeffs.iter().any(|c| !c.is_finite()) {
        return None;
    }
    let a: Vec<f64> = coeffs.iter().map(|c| c / lc).collect();
    let radius = 1.0 + a[..n].iter().fold(0.0f64, |m, c| m.max(c.abs()));
    let r0 = radius.min(1e150);
    let mut z: Vec<Complex64> =
        (0..n).map(|k| Complex64::from_polar(r0 * 0.5, 2.0 * std::f64::consts::PI * (k as f64 + 0.25) / n as f64 + 0.4)).collect();
    let eval = |x: Complex64| -> (Complex64, Complex64) {
        let mut p = Complex64::new(a[n], 0.0);
        let mut dp = Complex64::new(0.0, 0.0);
        for c in a[..n].iter().rev() {
            dp = dp * x + p;
            p = p * x + c;
        }
        (p, dp)
    };
    for _ in 0..2000 {
        let mut moved = 0.0f64;
        for k in 0..n {
            let (p, dp) = eval(z[k]);
            if p == Complex64::new(0.0, 0.0) {
                continue;
            }
            let ratio = p / dp;
            let mut s = Complex64::new(0.0, 0.0);
            for j in 0..n {
                if j != k {
                    s += Complex64::new(1.0, 0.0) / (z[k] - z[j]);
                }
            }
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
            if w.is_finite() {
                z[k] -= w;
                moved = moved.max(w.norm() / (1.0 + z[k].norm()));
            }
        }
        if moved < 1e-15 {
            break;
        }
    }
    z.iter().all(|w| w.is_finite()).then_some(z)
}

/// Fixed-point complex number with implicit scale `2^prec`.
#[derive(Clone, Debug)]
pub(crate) struct Fx {
    pub re: BigInt,
    pub im: BigInt,
}

pub(crate) struct FxCtx {
    pub prec: u32,
}

impl FxCtx {
    pub fn from_rational(&self, q: &Rational) -> BigInt {
        let num = q.numer() << self.prec as usize;
        round_div(&num, q.denom())
    }

    pub fn from_f64(&self, x: f64) -> BigInt {
        match Rational::from_float(x) {
            Some(q) => self.from_rational(&q),
            None => BigInt::zero(),
        }
    }

    pub fn one(&self) -> BigInt {
        BigInt::from(1) << self.prec as usize
    }

    pub fn mul(&self, a: &Fx, b: &Fx) -> Fx {
        Fx { re: (&a.re * &b.re - &a.im * &b.im) >> self.prec as usize, im: (&a.re * &b.im + &a.im * &b.re) >> self.prec as usize }
    }

    pub fn div(&self, a: &Fx, b: &Fx) -> Option<Fx> {
        let den = &b.re * &b.re + &b.im * &b.im;
        if den.is_zero() {
            return None;
        }
        let nre = &a.re * &b.re + &a.im * &b.im;
        let nim = &a.im * &b.re - &a.re * &b.im;
        Some(Fx { re: (nre << self.prec as usize) / &den, im: (nim << self.prec as usize) / &den })
    }

    pub fn sub(&self, a: &Fx, b: &Fx) -> Fx {
        Fx { re: &a.re - &b.re, im: &a.im - &b.im }
    }

    pub fn add(&self, a: &Fx, b: &Fx) -> Fx {
        Fx { re: &a.re + &b.re, im: &a.im + &b.im }
    }

    pub fn real(&self, r: BigInt) -> Fx {
        Fx { re: r, im: BigInt::zero() }
    }

    /// `sqrt(q)` for `q >= 0`, scaled.
    pub fn sqrt(&self, q: &Rational) -> BigInt {
        let scaled = (q.numer() << (2 * self.prec as usize)) / q.denom();
        scaled.sqrt()
    }
}

fn round_div(n: &BigInt, d: &BigInt) -> BigInt {
    let two = BigInt::from(2);
    let r = (n.abs() * &two + d) / (d * &two);
    if n.sign() == Sign::Minus {
        -r
    } else {
        r
    }
}

/// Aberth refinement in fixed point starting from `seeds`.
pub(crate) fn aberth_fixed(p: &Polynomial, seeds: &[Complex64], ctx: &FxCtx) -> Option<Vec<Fx>> {
    let n = p.deg();
    let coeffs: Vec<BigInt> = p.coeffs().iter().map(|c| ctx.from_rational(c)).collect();
    let mut z: Vec<Fx> = seeds.iter().map(|s| Fx { re: ctx.from_f64(s.re), im: ctx.from_f64(s.im) }).collect();
    let eval = |x: &Fx| -> (Fx, Fx) {
        let mut v = ctx.real(coeffs[n].clone());
        let mut dv = ctx.real(BigInt::zero());
        for c in coeffs[..n].iter().rev() {
            dv = ctx.add(&ctx.mul(&dv, x), &v);
            v = ctx.add(&ctx.mul(&v, x), &ctx.real(c.clone()));
        }
        (v, dv)
    };
    let tiny = BigInt::from(1) << 8usize;
    let one = ctx.real(ctx.one());
    let max_iter = 60 + 4 * ctx.prec as usize;
    for _ in 0..max_iter {
        let mut done = true;
        for k in 0..n {
            let (v, dv) = eval(&z[k]);
            if v.re.is_zero() && v.im.is_zero() {
                continue;
            }
            let ratio = ctx.div(&v, &dv)?;
            let mut s = ctx.real(BigInt::zero());
            for j in 0..n {
                if j != k {
                    s = ctx.add(&s, &ctx.div(&one, &ctx.sub(&z[k], &z[j]))?);
                }
            }
            let w = ctx.div(&ratio, &ctx.sub(&one, &ctx.mul(&ratio, &s)))?;
            if w.re.abs() > tiny || w.im.abs() > tiny {
                done = false;
            }
            z[k] = ctx.sub(&z[k], &w);
        }
        if done {
            return Some(z);
        }
    }
    Some(z)
}

pub(crate) fn to_f64_coeffs(p: &Polynomial) -> Vec<f64> {
    p.coeffs().iter().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect()
}

/// For `g > 0` on the line, rational `s1, s2` with `s1^2 + s2^2` close to `g`.
pub(crate) fn two_squares(g: &Polynomial, seeds: &[Complex64], prec: u32, round_bits: u32) -> Option<(Polynomial, Polynomial)> {
    let ctx = FxCtx { prec };
    let roots = aberth_fixed(g, seeds, &ctx)?;
    let m = g.deg() / 2;
    let upper: Vec<&Fx> = roots.iter().filter(|z| z.im.is_positive()).collect();
    if upper.len() != m {
        return None;
    }
    // q = sqrt(lc) * prod (x - z_j), coefficients ascending.
    let mut q: Vec<Fx> = vec![ctx.real(ctx.sqrt(&g.leading_coefficient()))];
    for z in upper {
        let mut next = vec![ctx.real(BigInt::zero()); q.len() + 1];
        for (i, c) in q.iter().enumerate() {
            next[i + 1] = ctx.add(&next[i + 1], c);
            let prod = ctx.mul(c, z);
            next[i] = ctx.sub(&next[i], &prod);
        }
        q = next;
    }
    let drop = prec.saturating_sub(round_bits) as usize;
    let denom = BigInt::from(1) << round_bits as usize;
    let round = |v: &BigInt| -> Rational {
        let half = if drop > 0 { BigInt::from(1) << (drop - 1) } else { BigInt::zero() };
        Rational::new((v + half) >> drop, denom.clone())
    };
    let s1 = Polynomial::from_coeffs(q.iter().map(|c| round(&c.re)).collect());
    let s2 = Polynomial::from_coeffs(q.iter().map(|c| round(&c.im)).collect());
    Some((s1, s2))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f64_roots_of_quartic() {
        // x^4 + 1
        let z = aberth_f64(&[1.0, 0.0, 0.0, 0.0, 1.0]).unwrap();
        for r in z {
            assert!((r.powu(4) + 1.0).norm() < 1e-9);
        }
    }

    #[test]
    fn fixed_point_two_squares() {
        let g = Polynomial::from_ints(&[2, 0, 3, 0, 1]); // (x^2+1)(x^2+2)
        let seeds = aberth_f64(&to_f64_coeffs(&g)).unwrap();
        let (s1, s2) = two_squares(&g, &seeds, 128, 100).unwrap();
        let r = &g - &(&s1 * &s1 + &s2 * &s2);
        let tol = Rational::new(1.into(), BigInt::from(1) << 80usize);
        assert!(r.coeffs().iter().all(|c| c.abs() < tol));
        assert_eq!(s1.deg(), 2);
    }
}
