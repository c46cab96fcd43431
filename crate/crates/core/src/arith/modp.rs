//! Polynomials over a word-sized prime field, used by the factorizer.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rand::Rng;

pub(crate) type Fp = Vec<u64>;

#[derive(Clone, Copy, Debug)]
pub(crate) struct Field {
    pub p: u64,
}

impl Field {
    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(a % self.p != 0);
        self.pow(a, self.p - 2)
    }

    pub fn trim(&self, mut v: Fp) -> Fp {
        while v.last() == Some(&0) {
            v.pop();
        }
        v
    }

    pub fn padd(&self, a: &Fp, b: &Fp) -> Fp {
        let n = a.len().max(b.len());
        let v = (0..n).map(|i| self.add(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0))).collect();
        self.trim(v)
    }

    pub fn psub(&self, a: &Fp, b: &Fp) -> Fp {
        let n = a.len().max(b.len());
        let v = (0..n).map(|i| self.sub(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0))).collect();
        self.trim(v)
    }

    pub fn pmul(&self, a: &Fp, b: &Fp) -> Fp {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut v = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                v[i + j] = self.add(v[i + j], self.mul(x, y));
            }
        }
        self.trim(v)
    }

    pub fn scale(&self, a: &Fp, c: u64) -> Fp {
        self.trim(a.iter().map(|&x| self.mul(x, c)).collect())
    }

    pub fn monic(&self, a: &Fp) -> Fp {
        match a.last() {
            Some(&lc) => self.scale(a, self.inv(lc)),
            None => Vec::new(),
        }
    }

    pub fn divrem(&self, a: &Fp, b: &Fp) -> (Fp, Fp) {
        assert!(!b.is_empty(), "division by zero polynomial mod p");
        if a.len() < b.len() {
            return (Vec::new(), a.clone());
        }
        let inv = self.inv(*b.last().unwrap());
        let mut r = a.clone();
        let db = b.len() - 1;
        let mut q = vec![0u64; a.len() - db];
        for k in (0..q.len()).rev() {
            let c = self.mul(r[k + db], inv);
            q[k] = c;
            if c != 0 {
                for (j, &bj) in b.iter().enumerate() {
                    r[k + j] = self.sub(r[k + j], self.mul(c, bj));
                }
            }
        }
        r.truncate(db);
        (self.trim(q), self.trim(r))
    }

    pub fn rem(&self, a: &Fp, b: &Fp) -> Fp {
        self.divrem(a, b).1
    }

    pub fn gcd(&self, a: &Fp, b: &Fp) -> Fp {
        let mut a = a.clone();
        let mut b = b.clone();
        while !b.is_empty() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    /// `(g, s, t)` with `s*a + t*b = g`, `g` monic.
    pub fn ext_gcd(&self, a: &Fp, b: &Fp) -> (Fp, Fp, Fp) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (vec![1u64], Vec::new());
        let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
        while !r1.is_empty() {
            let (q, r) = self.divrem(&r0, &r1);
            let s2 = self.psub(&s0, &self.pmul(&q, &s1));
            let t2 = self.psub(&t0, &self.pmul(&q, &t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s2;
            t0 = t1;
            t1 = t2;
        }
        let inv = self.inv(*r0.last().expect("nonzero gcd"));
        (self.scale(&r0, inv), self.scale(&s0, inv), self.scale(&t0, inv))
    }

    pub fn deriv(&self, a: &Fp) -> Fp {
        self.trim(a.iter().enumerate().skip(1).map(|(i, &c)| self.mul(c, i as u64 % self.p)).collect())
    }

    pub fn powmod(&self, base: &Fp, e: &BigUint, m: &Fp) -> Fp {
        let mut result = vec![1u64];
        let b = self.rem(base, m);
        for i in (0..e.bits()).rev() {
            result = self.rem(&self.pmul(&result, &result), m);
            if e.bit(i) {
                result = self.rem(&self.pmul(&result, &b), m);
            }
        }
        self.rem(&result, m)
    }

    /// Distinct-degree factorization of a monic squarefree polynomial.
    pub fn ddf(&self, f: &Fp) -> Vec<(Fp, usize)> {
        let mut out = Vec::new();
        let mut f = f.clone();
        let x: Fp = vec![0, 1];
        let mut h = x.clone();
        let mut i = 1;
        let p = BigUint::from(self.p);
        while f.len() > 2 * i {
            h = self.powmod(&h, &p, &f);
            let g = self.gcd(&f, &self.psub(&h, &x));
            if g.len() > 1 {
                out.push((g.clone(), i));
                f = self.divrem(&f, &g).0;
                h = self.rem(&h, &f);
            }
            i += 1;
        }
        if f.len() > 1 {
            let d = f.len() - 1;
            out.push((f, d));
        }
        out
    }

    /// Equal-degree splitting (Cantor-Zassenhaus), `p` odd.
    pub fn edf<R: Rng>(&self, g: &Fp, d: usize, rng: &mut R, out: &mut Vec<Fp>) {
        let n = g.len() - 1;
        if n == d {
            out.push(g.clone());
            return;
        }
        let e = (BigUint::from(self.p).pow(d as u32) - BigUint::one()) >> 1;
        loop {
            let a: Fp = self.trim((0..n).map(|_| rng.gen_range(0..self.p)).collect());
            if a.len() < 2 {
                continue;
            }
            let b = self.psub(&self.powmod(&a, &e, g), &vec![1u64]);
            let h = self.gcd(g, &b);
            if h.len() > 1 && h.len() < g.len() {
                let q = self.divrem(g, &h).0;
                self.edf(&h, d, rng, out);
                self.edf(&self.monic(&q), d, rng, out);
                return;
            }
        }
    }

    pub fn factor_squarefree<R: Rng>(&self, f: &Fp, rng: &mut R) -> Vec<Fp> {
        let mut out = Vec::new();
        for (g, d) in self.ddf(f) {
            self.edf(&g, d, rng, &mut out);
        }
        out
    }

    pub fn is_squarefree(&self, f: &Fp) -> bool {
        let d = self.deriv(f);
        !d.is_empty() && self.gcd(f, &d).len() == 1
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[allow(dead_code)]
pub(crate) fn is_zero_poly(a: &Fp) -> bool {
    a.iter().all(|c| c.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn factors_mod_7() {
        let f = Field { p: 7 };
        // (x+1)(x+2)(x^2+1) mod 7; x^2+1 is irreducible since 7 = 3 mod 4.
        let poly = f.pmul(&f.pmul(&vec![1, 1], &vec![2, 1]), &vec![1, 0, 1]);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let mut fs = f.factor_squarefree(&poly, &mut rng);
        fs.sort();
        assert_eq!(fs, vec![vec![1, 0, 1], vec![1, 1], vec![2, 1]]);
    }

    #[test]
    fn ext_gcd_identity() {
        let f = Field { p: 101 };
        let a = vec![3, 0, 1];
        let b = vec![5, 1];
        let (g, s, t) = f.ext_gcd(&a, &b);
        assert_eq!(g, vec![1]);
        assert_eq!(f.padd(&f.pmul(&s, &a), &f.pmul(&t, &b)), vec![1]);
    }
}
