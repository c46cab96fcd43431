use std::cmp::Ordering;

use num_traits::{Signed, Zero};

use super::surd::sign_at;
use crate::arith::{Polynomial, Rational};
use crate::semialg::Endpoint;

/// An endpoint of a counting interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bound {
    NegInfinity,
    At(Endpoint),
    PosInfinity,
}

impl Bound {
    pub fn rational(q: Rational) -> Self {
        Bound::At(Endpoint::Rational(q))
    }
}

/// Scale by a positive constant so coefficients are coprime integers; the sign is kept.
pub(crate) fn normalize_positive(p: &Polynomial) -> Polynomial {
    if p.is_zero() {
        return Polynomial::zero();
    }
    let (c, ints) = p.to_primitive_integer();
    let q = Polynomial::from_integers(&ints);
    if c.is_negative() {
        -q
    } else {
        q
    }
}

/// Signed remainder sequence of the squarefree part.
#[derive(Debug, Clone)]
pub struct SturmChain {
    seq: Vec<Polynomial>,
}

impl SturmChain {
    pub fn new(f: &Polynomial) -> Self {
        let p = normalize_positive(&f.squarefree_part());
        let mut seq = vec![p.clone()];
        if p.deg() == 0 {
            return SturmChain { seq };
        }
        let mut a = p;
        let mut b = normalize_positive(&a.derivative());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero");
            seq.push(b.clone());
            a = b;
            b = normalize_positive(&-r);
        }
        SturmChain { seq }
    }

    pub fn base(&self) -> &Polynomial {
        &self.seq[0]
    }

    fn signs_at(&self, x: &Bound) -> Vec<Ordering> {
        self.seq
            .iter()
            .map(|p| match x {
                Bound::NegInfinity => {
                    let lc = p.leading_coefficient().cmp(&Rational::zero());
                    if p.deg() % 2 == 1 {
                        lc.reverse()
                    } else {
                        lc
                    }
                }
                Bound::PosInfinity => p.leading_coefficient().cmp(&Rational::zero()),
                Bound::At(e) => sign_at(p, e),
            })
            .collect()
    }

    fn signs_at_rational(&self, x: &Rational) -> Vec<Ordering> {
        self.seq.iter().map(|p| p.eval(x).cmp(&Rational::zero())).collect()
    }

    fn variations(signs: &[Ordering]) -> usize {
        let nz: Vec<_> = signs.iter().filter(|s| **s != Ordering::Equal).collect();
        nz.windows(2).filter(|w| w[0] != w[1]).count()
    }

    pub fn variations_at(&self, x: &Bound) -> usize {
        Self::variations(&self.signs_at(x))
    }

    pub fn variations_at_rational(&self, x: &Rational) -> usize {
        Self::variations(&self.signs_at_rational(x))
    }

    /// Distinct roots in `(lo, hi]`.
    pub fn count(&self, lo: &Bound, hi: &Bound) -> usize {
        self.variations_at(lo).saturating_sub(self.variations_at(hi))
    }

    pub fn count_rational(&self, lo: &Rational, hi: &Rational) -> usize {
        self.variations_at_rational(lo).saturating_sub(self.variations_at_rational(hi))
    }
}

/// Number of distinct real roots of `f` in `(lo, hi]`.
pub fn sturm_count(f: &Polynomial, lo: &Bound, hi: &Bound) -> usize {
    if f.is_zero() {
        return usize::MAX;
    }
    SturmChain::new(f).count(lo, hi)
}

/// Cauchy bound: every root has absolute value below it.
pub(crate) fn cauchy_bound(f: &Polynomial) -> Rational {
    let lc = f.leading_coefficient().abs();
    let mut m = Rational::zero();
    for c in &f.coeffs()[..f.deg()] {
        let r = c.abs() / &lc;
        if r > m {
            m = r;
        }
    }
    m + Rational::from_integer(1.into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use crate::semialg::Branch;

    #[test]
    fn counts() {
        let f = Polynomial::from_ints(&[-2, 0, 1]);
        let all = sturm_count(&f, &Bound::NegInfinity, &Bound::PosInfinity);
        assert_eq!(all, 2);
        assert_eq!(sturm_count(&f, &Bound::rational(int(0)), &Bound::PosInfinity), 1);
        let r2 = Endpoint::surd(int(0), int(-2), Branch::Upper).unwrap();
        // (0, sqrt2] contains sqrt2; (sqrt2, inf) does not.
        assert_eq!(sturm_count(&f, &Bound::rational(int(0)), &Bound::At(r2.clone())), 1);
        assert_eq!(sturm_count(&f, &Bound::At(r2), &Bound::PosInfinity), 0);
    }

    #[test]
    fn half_open_convention() {
        let f = Polynomial::from_ints(&[0, -1, 1]); // x(x-1)
        assert_eq!(sturm_count(&f, &Bound::rational(int(0)), &Bound::rational(int(1))), 1);
        assert_eq!(sturm_count(&f, &Bound::rational(rat(-1, 2)), &Bound::rational(int(0))), 1);
        let g = Polynomial::from_ints(&[0, 0, 1]); // double root counted once
        assert_eq!(sturm_count(&g, &Bound::NegInfinity, &Bound::PosInfinity), 1);
    }
}
