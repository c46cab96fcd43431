//! Factorization over the rationals: squarefree decomposition, then Zassenhaus
//! (Cantor-Zassenhaus mod p, linear Hensel lifting, subset recombination).

use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::modp::{is_prime, Field, Fp};
use super::{Polynomial, Rational};
use crate::error::{Error, Result};

pub const FACTOR_DEGREE_LIMIT: usize = 64;

/// `f = c * prod g_i^{m_i}` with monic irreducible `g_i`, sorted by degree then coefficients.
pub fn factor_over_rationals(f: &Polynomial) -> Result<(Rational, Vec<(Polynomial, usize)>)> {
    let Some(n) = f.degree() else {
        return Err(Error::InvalidArgument("cannot factor the zero polynomial".into()));
    };
    if n > FACTOR_DEGREE_LIMIT {
        return Err(Error::DegreeLimitExceeded { degree: n, limit: FACTOR_DEGREE_LIMIT });
    }
    let (lc, parts) = f.squarefree_decomposition();
    let mut out = Vec::new();
    for (p, m) in parts {
        for g in factor_squarefree_monic(&p) {
            out.push((g, m));
        }
    }
    out.sort_by(|a, b| (a.0.deg(), a.0.coeffs()).cmp(&(b.0.deg(), b.0.coeffs())));
    Ok((lc, out))
}

pub fn is_irreducible(f: &Polynomial) -> Result<bool> {
    if f.deg() == 0 {
        return Ok(false);
    }
    let (_, fs) = factor_over_rationals(f)?;
    Ok(fs.len() == 1 && fs[0].1 == 1)
}

fn factor_squarefree_monic(p: &Polynomial) -> Vec<Polynomial> {
    let n = p.deg();
    if n <= 1 {
        return vec![p.monic()];
    }
    let mut out = Vec::new();
    let mut p = p.clone();
    if p.coeff(0).is_zero() {
        out.push(Polynomial::x());
        p = p.exact_div(&Polynomial::x()).expect("x divides");
        if p.deg() <= 1 {
            if p.deg() == 1 {
                out.push(p.monic());
            }
            return out;
        }
    }
    let (_, ints) = p.to_primitive_integer();
    for g in zassenhaus(&ints) {
        out.push(Polynomial::from_integers(&g).monic());
    }
    out
}

fn to_fp(f: &[BigInt], field: &Field) -> Fp {
    let p = BigInt::from(field.p);
    field.trim(f.iter().map(|c| c.mod_floor(&p).to_u64().unwrap()).collect())
}

fn fp_to_int(f: &Fp) -> Vec<BigInt> {
    f.iter().map(|&c| BigInt::from(c)).collect()
}

fn int_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut v = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            v[i + j] += x * y;
        }
    }
    v
}

fn int_sub(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    (0..n).map(|i| a.get(i).cloned().unwrap_or_default() - b.get(i).cloned().unwrap_or_default()).collect()
}

fn reduce(a: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let mut v: Vec<BigInt> = a.iter().map(|c| c.mod_floor(m)).collect();
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn symmetric(a: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let half = m >> 1;
    a.iter()
        .map(|c| {
            let r = c.mod_floor(m);
            if r > half {
                r - m
            } else {
                r
            }
        })
        .collect()
}

/// Lifts `f = g*h mod p` to `f = G*H mod p^k`, with `g` monic and `G` monic.
fn hensel_pair(f: &[BigInt], g: &Fp, h: &Fp, field: &Field, k: u32) -> (Vec<BigInt>, Vec<BigInt>) {
    let (_, s, t) = field.ext_gcd(g, h);
    let p = BigInt::from(field.p);
    let mut big_g = fp_to_int(g);
    let mut big_h = fp_to_int(h);
    let mut pj = p.clone();
    for _ in 1..k {
        let err = int_sub(f, &int_mul(&big_g, &big_h));
        let e: Vec<BigInt> = err.iter().map(|c| c / &pj).collect();
        let e = to_fp(&e, field);
        let (q, dg) = field.divrem(&field.pmul(&t, &e), g);
        let dh = field.padd(&field.pmul(&s, &e), &field.pmul(&q, h));
        let next = &pj * &p;
        let shift = |base: &[BigInt], d: &Fp| -> Vec<BigInt> {
            let n = base.len().max(d.len());
            let v: Vec<BigInt> =
                (0..n).map(|i| base.get(i).cloned().unwrap_or_default() + &pj * BigInt::from(*d.get(i).unwrap_or(&0))).collect();
            reduce(&v, &next)
        };
        big_g = shift(&big_g, &dg);
        big_h = shift(&big_h, &dh);
        pj = next;
    }
    (big_g, big_h)
}

fn choose_prime(f: &[BigInt], rng: &mut ChaCha8Rng) -> (Field, Vec<Fp>) {
    let lc = f.last().unwrap();
    let mut best: Option<(Field, Vec<Fp>)> = None;
    let mut tried = 0;
    let mut p = 3u64;
    while tried < 5 {
        if is_prime(p) && !(lc % BigInt::from(p)).is_zero() {
            let field = Field { p };
            let fp = to_fp(f, &field);
            if field.is_squarefree(&fp) {
                let facs = field.factor_squarefree(&field.monic(&fp), rng);
                tried += 1;
                let better = best.as_ref().is_none_or(|b| facs.len() < b.1.len());
                if better {
                    let done = facs.len() == 1;
                    best = Some((field, facs));
                    if done {
                        break;
                    }
                }
            }
        }
        p += 2;
    }
    best.expect("some prime works for a squarefree polynomial")
}

static SEED: AtomicU64 = AtomicU64::new(0x5eed);

/// Seeds the random splitting used by modular factorization. The factors returned do not
/// depend on the seed; only the work done to find them does.
pub fn set_factor_seed(seed: u64) {
    SEED.store(seed, AtomicOrdering::Relaxed);
}

/// Irreducible factors (primitive, positive leading coefficient) of a squarefree primitive `f`.
fn zassenhaus(f: &[BigInt]) -> Vec<Vec<BigInt>> {
    let n = f.len() - 1;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED.load(AtomicOrdering::Relaxed));
    let (field, facs) = choose_prime(f, &mut rng);
    if facs.len() == 1 {
        return vec![f.to_vec()];
    }
    let lc = f.last().unwrap().clone();
    let norm2: BigInt = f.iter().map(|c| c * c).sum();
    let norm = norm2.sqrt() + BigInt::one();
    let bound = (BigInt::one() << n) * norm * lc.abs() * BigInt::from(2);
    let p = BigInt::from(field.p);
    let mut k = 1u32;
    let mut m = p.clone();
    while m <= bound {
        m *= &p;
        k += 1;
    }

    // Multifactor lifting, one factor at a time.
    let r = facs.len();
    let lc_p = to_fp(&[lc.clone()], &field)[0];
    let mut lifted: Vec<Vec<BigInt>> = Vec::with_capacity(r);
    let mut target = reduce(f, &m);
    for i in 0..r - 1 {
        let mut rest: Fp = vec![lc_p];
        for g in &facs[i + 1..] {
            rest = field.pmul(&rest, g);
        }
        let (gi, hi) = hensel_pair(&target, &facs[i], &rest, &field, k);
        lifted.push(gi);
        target = hi;
    }
    let lc_inv = mod_inverse(&lc, &m);
    lifted.push(reduce(&target.iter().map(|c| c * &lc_inv).collect::<Vec<_>>(), &m));

    recombine(f, lifted, &m)
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let g = a.extended_gcd(m);
    debug_assert!(g.gcd.is_one());
    g.x.mod_floor(m)
}

fn primitive(v: &[BigInt]) -> Vec<BigInt> {
    let mut v = v.to_vec();
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    let mut g = BigInt::zero();
    for c in &v {
        g = g.gcd(c);
    }
    if v.last().is_some_and(|c| c.sign() == Sign::Minus) {
        g = -g;
    }
    if g.is_zero() {
        return v;
    }
    v.iter().map(|c| c / &g).collect()
}

fn recombine(f: &[BigInt], mut lifted: Vec<Vec<BigInt>>, m: &BigInt) -> Vec<Vec<BigInt>> {
    let mut out = Vec::new();
    let mut cur = f.to_vec();
    let mut s = 1;
    'outer: while 2 * s <= lifted.len() {
        let idx_sets = combinations(lifted.len(), s);
        for set in idx_sets {
            let lc = cur.last().unwrap().clone();
            let mut cand = vec![lc];
            for &i in &set {
                cand = reduce(&int_mul(&cand, &lifted[i]), m);
            }
            let cand = primitive(&symmetric(&cand, m));
            if cand.len() < 2 {
                continue;
            }
            let cp = Polynomial::from_integers(&cand);
            let fp = Polynomial::from_integers(&cur);
            if let Some(q) = fp.exact_div(&cp) {
                if q.coeffs().iter().all(|c| c.is_integer()) {
                    out.push(cand);
                    cur = q.coeffs().iter().map(|c| c.to_integer()).collect();
                    let mut keep = Vec::new();
                    for (i, g) in lifted.into_iter().enumerate() {
                        if !set.contains(&i) {
                            keep.push(g);
                        }
                    }
                    lifted = keep;
                    continue 'outer;
                }
            }
        }
        s += 1;
    }
    if cur.len() > 1 {
        out.push(primitive(&cur));
    }
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    #[test]
    fn combos() {
        assert_eq!(combinations(4, 2).len(), 6);
        assert_eq!(combinations(3, 3), vec![vec![0, 1, 2]]);
        assert_eq!(combinations(3, 1), vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn spec_example() {
        // x^4 - 1 = (x - 1)(x + 1)(x^2 + 1)
        let (c, fs) = factor_over_rationals(&p(&[-1, 0, 0, 0, 1])).unwrap();
        assert_eq!(c, int(1));
        assert_eq!(fs, vec![(p(&[-1, 1]), 1), (p(&[1, 1]), 1), (p(&[1, 0, 1]), 1)]);
    }

    #[test]
    fn swinnerton_dyer_like() {
        // x^4 - 10x^2 + 1 is irreducible over Q but splits mod every prime.
        let f = p(&[1, 0, -10, 0, 1]);
        assert!(is_irreducible(&f).unwrap());
        let g = &f * &p(&[-2, 0, 1]);
        let (_, fs) = factor_over_rationals(&g).unwrap();
        assert_eq!(fs, vec![(p(&[-2, 0, 1]), 1), (f, 1)]);
    }

    #[test]
    fn repeated_and_scaled() {
        let f = (p(&[1, 2]).pow(3) * p(&[-3, 0, 1])).scale(&int(-5));
        let (c, fs) = factor_over_rationals(&f).unwrap();
        assert_eq!(c, int(-40));
        assert_eq!(fs.len(), 2);
        assert_eq!(fs[0].1, 3);
        assert_eq!(fs[1].0, p(&[-3, 0, 1]));
    }

    #[test]
    fn degree_limit() {
        let f = Polynomial::monomial(int(1), 65) + Polynomial::one();
        assert!(matches!(factor_over_rationals(&f), Err(Error::DegreeLimitExceeded { .. })));
    }

    #[test]
    fn cubic_irreducible() {
        assert!(is_irreducible(&p(&[-2, 0, 0, 1])).unwrap());
        assert!(!is_irreducible(&p(&[-8, 0, 0, 1])).unwrap());
    }
}
