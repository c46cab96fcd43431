//! Base decompositions: weighted SOS on the line, half-lines, intervals, points, the
//! single-gap identity (rational and conjugate-surd gaps) and linear forms on a disk.

mod numeric;

use num_traits::{One, Signed, Zero};

use crate::arith::{Polynomial, Rational};
use crate::certificate::{Certificate, ExponentVector, WeightedSos};
use crate::error::{Error, Refusal, RefusalReason};
use crate::roots::{check_nonneg, nonneg_everywhere, rational_approx_surd, sturm_count, Bound, Side};
use crate::semialg::{Branch, Component, Endpoint, GeneratorSet, Role, SemiAlgSet};

type Res<T> = std::result::Result<T, Refusal>;

/// Refuses with a witness unless `f >= 0` on `k`.
pub(crate) fn ensure_nonneg(f: &Polynomial, k: &SemiAlgSet) -> Res<()> {
    match check_nonneg(f, &k.to_region())? {
        None => Ok(()),
        Some(w) => {
            let mut r = Refusal::new(RefusalReason::NotNonnegative, format!("{f} is negative somewhere on the set"));
            if let Some(e) = w.to_endpoint() {
                r.detail = format!("{f} is negative at {e}");
                r = r.with_witness(e);
            }
            Err(r)
        }
    }
}

fn q(e: &Rational) -> Endpoint {
    Endpoint::Rational(e.clone())
}

fn two() -> Rational {
    Rational::from_integer(2.into())
}

/// `f = sum a_i f_i^2` for `f >= 0` on the line.
pub fn sos_on_line(f: &Polynomial) -> Res<WeightedSos> {
    ensure_nonneg(f, &SemiAlgSet::line())?;
    sos_unchecked(f)
}

pub(crate) fn sos_unchecked(f: &Polynomial) -> Res<WeightedSos> {
    if f.is_zero() {
        return Ok(WeightedSos::zero());
    }
    if f.deg() == 0 {
        return Ok(WeightedSos::constant(f.coeff(0)));
    }
    let (c, parts) = f.squarefree_decomposition();
    let mut s = Polynomial::one();
    let mut g = Polynomial::one();
    for (p, i) in parts {
        s = s * p.pow(i / 2);
        if i % 2 == 1 {
            g = g * p;
        }
    }
    let base = sos_positive_definite(&g)?;
    let out = base.scale(&c).mul_square(&s).simplify();
    if out.expand() != *f {
        return Err(Refusal::internal(format!("sum of squares for {f} failed to verify")));
    }
    Ok(out)
}

/// Leading part `h` of `sqrt(g)` for monic `g` of degree `2m`, so that `deg(g - h^2) < m`.
fn sqrt_head(g: &Polynomial) -> Polynomial {
    let m = g.deg() / 2;
    let mut h = vec![Rational::zero(); m + 1];
    h[m] = Rational::one();
    for k in (0..m).rev() {
        let mut acc = g.coeff(m + k);
        for i in (k + 1)..=m {
            let j = m + k - i;
            if j > k && j <= m {
                acc -= &h[i] * &h[j];
            }
        }
        h[k] = acc / two();
    }
    Polynomial::from_coeffs(h)
}

/// `g` monic, squarefree and without real roots.
fn sos_positive_definite(g: &Polynomial) -> Res<WeightedSos> {
    match g.deg() {
        0 => return Ok(WeightedSos::constant(Rational::one())),
        2 => {
            let b = g.coeff(1) / two();
            let k = g.coeff(0) - &b * &b;
            let mut s = WeightedSos::single(Rational::one(), Polynomial::from_coeffs(vec![b, Rational::one()]));
            s.push(k, Polynomial::one());
            return Ok(s);
        }
        _ => {}
    }
    let h = sqrt_head(g);
    let r = g - &(&h * &h);
    if nonneg_everywhere(&r) {
        let mut s = WeightedSos::single(Rational::one(), h);
        s.extend(sos_unchecked(&r)?);
        return Ok(s);
    }
    sos_numeric(g)
}

/// Rounded two-square approximation of `g - eps*E`, residual absorbed into the cushion.
fn sos_numeric(g: &Polynomial) -> Res<WeightedSos> {
    let m = g.deg() / 2;
    let cushion = Polynomial::from_coeffs((0..=2 * m).map(|i| if i % 2 == 0 { Rational::one() } else { Rational::zero() }).collect());
    let mut eps = Rational::one();
    let mut found = false;
    for _ in 0..400 {
        eps /= two();
        let h = g - &cushion.scale(&eps);
        if h.coeff(0).is_positive() && sturm_count(&h, &Bound::NegInfinity, &Bound::PosInfinity) == 0 {
            found = true;
            break;
        }
    }
    if !found {
        return Err(Refusal::internal(format!("no cushion found for {g}")));
    }
    let g_eps = g - &cushion.scale(&(eps / two()));
    let seeds = numeric::aberth_f64(&numeric::to_f64_coeffs(&g_eps))
        .ok_or_else(|| Refusal::internal(format!("numeric root finding failed for {g_eps}")))?;
    let mut prec = 64u32;
    while prec <= 8192 {
        if let Some((s1, s2)) = numeric::two_squares(&g_eps, &seeds, prec, prec - 8) {
            let u = g - &(&(&s1 * &s1) + &(&s2 * &s2));
            if let Some(rest) = absorb(&u, m) {
                let mut out = WeightedSos::new(vec![(Rational::one(), s1), (Rational::one(), s2)]);
                out.extend(rest);
                return Ok(out);
            }
        }
        prec *= 2;
    }
    Err(Refusal::internal(format!("numeric sum of squares did not converge for {g}")))
}

/// Writes `u` of degree `<= 2m` as a weighted SOS using `(x^(i+1) +- x^i)^2` and `x^(2i)`.
fn absorb(u: &Polynomial, m: usize) -> Option<WeightedSos> {
    if u.degree().is_some_and(|d| d > 2 * m) {
        return None;
    }
    let half = |k: usize| -> Rational {
        if k % 2 == 1 && k < 2 * m {
            u.coeff(k).abs() / two()
        } else {
            Rational::zero()
        }
    };
    let mut out = WeightedSos::zero();
    for i in 0..=m {
        let left = if i > 0 { half(2 * i - 1) } else { Rational::zero() };
        let w = u.coeff(2 * i) - left - half(2 * i + 1);
        if w.is_negative() {
            return None;
        }
        if !w.is_zero() {
            out.push(w, Polynomial::monomial(Rational::one(), i));
        }
    }
    for i in 0..m {
        let e = u.coeff(2 * i + 1);
        if e.is_zero() {
            continue;
        }
        let sign = if e.is_negative() { -Rational::one() } else { Rational::one() };
        let mut c = vec![Rational::zero(); i + 2];
        c[i] = sign;
        c[i + 1] = Rational::one();
        out.push(e.abs() / two(), Polynomial::from_coeffs(c));
    }
    Some(out)
}

/// `f = sigma0 + x*sigma1` for `f >= 0` on `[0, inf)`.
pub fn decompose_halfline(f: &Polynomial) -> Res<(WeightedSos, WeightedSos)> {
    ensure_nonneg(f, &SemiAlgSet::new(vec![Component::RayAbove(q(&Rational::zero()))]))?;
    halfline_unchecked(f)
}

fn halfline_unchecked(f: &Polynomial) -> Res<(WeightedSos, WeightedSos)> {
    let s = sos_unchecked(&f.substitute_square())?;
    let mut s0 = WeightedSos::zero();
    let mut s1 = WeightedSos::zero();
    for (w, p) in s.terms {
        let (a, b) = p.even_odd_split();
        if !a.is_zero() {
            s0.push(w.clone(), a);
        }
        if !b.is_zero() {
            s1.push(w, b);
        }
    }
    let (s0, s1) = (s0.simplify(), s1.simplify());
    if &s0.expand() + &(&Polynomial::x() * &s1.expand()) != *f {
        return Err(Refusal::internal(format!("half-line split failed to verify for {f}")));
    }
    Ok((s0, s1))
}

/// `(1+x)^m f((1-x)/(1+x))`.
pub fn goursat(f: &Polynomial, m: usize) -> crate::error::Result<Polynomial> {
    if !f.is_zero() && f.deg() > m {
        return Err(Error::InvalidArgument(format!("Goursat degree {m} is below deg f = {}", f.deg())));
    }
    Ok(homogenize(f, m))
}

/// `sum_i c_i (1-x)^i (1+x)^(k-i)`.
fn homogenize(f: &Polynomial, k: usize) -> Polynomial {
    let one_minus = Polynomial::from_ints(&[1, -1]);
    let one_plus = Polynomial::from_ints(&[1, 1]);
    let mut acc = Polynomial::zero();
    for (i, c) in f.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        acc = acc + (one_minus.pow(i) * one_plus.pow(k - i)).scale(c);
    }
    acc
}

pub fn interval_generators(a: &Rational, b: &Rational) -> GeneratorSet {
    GeneratorSet::new(vec![Polynomial::linear_root(a), -Polynomial::linear_root(b)], vec![Role::LowerLinear, Role::UpperLinear])
}

/// Certificate over `{x - a, b - x}` for `f >= 0` on `[a, b]`.
pub fn decompose_interval(f: &Polynomial, a: &Rational, b: &Rational) -> Res<Certificate> {
    if a >= b {
        return Err(Refusal::from(Error::InvalidArgument(format!("interval [{a}, {b}] is not proper"))));
    }
    ensure_nonneg(f, &SemiAlgSet::new(vec![Component::Segment(q(a), q(b))]))?;
    interval_unchecked(f, a, b)
}

pub(crate) fn interval_unchecked(f: &Polynomial, a: &Rational, b: &Rational) -> Res<Certificate> {
    let gens = interval_generators(a, b);
    if f.is_zero() || f.deg() == 0 {
        return Ok(Certificate::sos(&gens, WeightedSos::constant(f.coeff(0))).with_provenance("constant"));
    }
    let len = b - a;
    // x = (len*y + a + b)/2 maps [-1, 1] onto [a, b].
    let big_f = f.affine_substitute(&(&len / two()), &((a + b) / two()));
    let m = big_f.deg();
    let g = homogenize(&big_f, m);
    let (s0, s1) = halfline_unchecked(&g)?;
    let k0 = m / 2;
    let k1 = m.saturating_sub(1) / 2;
    let e0 = m - 2 * k0;
    let e1 = (m - 1) - 2 * k1;
    let alpha = two() / &len;
    let beta = -(a + b) / &len;
    let scale = Rational::new(One::one(), num_bigint::BigInt::from(1) << m);
    let lin = &alpha; // (1+y) = alpha (x-a), (1-y) = alpha (b-x)
    let mut terms: Vec<(ExponentVector, WeightedSos)> = Vec::new();
    let mut t0 = WeightedSos::zero();
    let w0 = &scale * pow(lin, e0);
    for (w, p) in &s0.terms {
        let big_a = homogenize(p, k0).affine_substitute(&alpha, &beta);
        t0.push(w * &w0, big_a);
    }
    terms.push((ExponentVector(vec![e0 as u8, 0]), t0));
    let mut t1 = WeightedSos::zero();
    let w1 = &scale * pow(lin, 1 + e1);
    for (w, p) in &s1.terms {
        let big_b = homogenize(p, k1).affine_substitute(&alpha, &beta);
        t1.push(w * &w1, big_b);
    }
    terms.push((ExponentVector(vec![e1 as u8, 1]), t1));
    let cert = Certificate::from_terms(&gens, terms).with_provenance("interval");
    if cert.target != *f {
        return Err(Refusal::internal(format!("interval certificate for {f} on [{a}, {b}] failed to verify")));
    }
    Ok(cert)
}

fn pow(q: &Rational, k: usize) -> Rational {
    let mut r = Rational::one();
    for _ in 0..k {
        r *= q;
    }
    r
}

/// Certificate over `{x - a}` for `f >= 0` on `[a, inf)`.
pub fn decompose_ray_above(f: &Polynomial, a: &Rational) -> Res<Certificate> {
    ensure_nonneg(f, &SemiAlgSet::new(vec![Component::RayAbove(q(a))]))?;
    ray_above_unchecked(f, a)
}

pub(crate) fn ray_above_unchecked(f: &Polynomial, a: &Rational) -> Res<Certificate> {
    let gens = GeneratorSet::new(vec![Polynomial::linear_root(a)], vec![Role::LowerLinear]);
    let (s0, s1) = halfline_unchecked(&f.shift(a))?;
    let minus_a = -a;
    let one = Rational::one();
    let c = Certificate::from_terms(
        &gens,
        vec![(ExponentVector(vec![0]), s0.affine(&one, &minus_a)), (ExponentVector(vec![1]), s1.affine(&one, &minus_a))],
    )
    .with_provenance("half-line");
    if c.target != *f {
        return Err(Refusal::internal(format!("half-line certificate for {f} failed to verify")));
    }
    Ok(c)
}

/// Certificate over `{b - x}` for `f >= 0` on `(-inf, b]`.
pub fn decompose_ray_below(f: &Polynomial, b: &Rational) -> Res<Certificate> {
    ensure_nonneg(f, &SemiAlgSet::new(vec![Component::RayBelow(q(b))]))?;
    ray_below_unchecked(f, b)
}

pub(crate) fn ray_below_unchecked(f: &Polynomial, b: &Rational) -> Res<Certificate> {
    let gens = GeneratorSet::new(vec![-Polynomial::linear_root(b)], vec![Role::UpperLinear]);
    let m1 = -Rational::one();
    // y = b - x >= 0
    let (s0, s1) = halfline_unchecked(&f.affine_substitute(&m1, b))?;
    let c =
        Certificate::from_terms(&gens, vec![(ExponentVector(vec![0]), s0.affine(&m1, b)), (ExponentVector(vec![1]), s1.affine(&m1, b))])
            .with_provenance("half-line");
    if c.target != *f {
        return Err(Refusal::internal(format!("half-line certificate for {f} failed to verify")));
    }
    Ok(c)
}

/// Certificate over `{x - a, a - x}` for `f(a) >= 0`, from the Taylor expansion at `a`.
pub fn decompose_point(f: &Polynomial, a: &Rational) -> Res<Certificate> {
    let gens = interval_generators(a, a);
    let t = f.shift(a);
    if t.coeff(0).is_negative() {
        return Err(Refusal::new(RefusalReason::NotNonnegative, format!("{f} is negative at {a}")).with_witness(q(a)));
    }
    let lin = Polynomial::linear_root(a);
    let mut terms = Vec::new();
    for (k, c) in t.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let (e, w, sq) = if k % 2 == 0 {
            if !c.is_negative() {
                (vec![0, 0], c.clone(), lin.pow(k / 2))
            } else {
                // c (x-a)^(2j) = |c| (x-a)^(2j-2) (x-a)(a-x)
                (vec![1, 1], c.abs(), lin.pow(k / 2 - 1))
            }
        } else if c.is_positive() {
            (vec![1, 0], c.clone(), lin.pow(k / 2))
        } else {
            (vec![0, 1], c.abs(), lin.pow(k / 2))
        };
        terms.push((ExponentVector(e), WeightedSos::single(w, sq)));
    }
    let c = Certificate::from_terms(&gens, terms).with_provenance("point");
    if c.target != *f {
        return Err(Refusal::internal(format!("point certificate for {f} failed to verify")));
    }
    Ok(c)
}

/// `(x-c)(x-d) = sigma0 + t (x-a)(x-b)` with `t in [0, 1]`; `a, b` rational or conjugate surds.
pub fn berg_maserick(c: &Rational, d: &Rational, a: &Endpoint, b: &Endpoint) -> crate::error::Result<(Rational, WeightedSos)> {
    if c >= d {
        return Err(Error::InvalidArgument(format!("need c < d, got {c} and {d}")));
    }
    match (a, b) {
        (Endpoint::Rational(a), Endpoint::Rational(b)) => {
            if !(a <= c && d <= b) {
                return Err(Error::InvalidArgument(format!("need {a} <= {c} < {d} <= {b}")));
            }
            Ok(bm_rational(c, d, a, b))
        }
        (Endpoint::QuadSurd { s, p, branch: Branch::Lower }, _) if a.is_conjugate_of(b) => {
            let cp = q(c).cmp_exact(a);
            let dp = q(d).cmp_exact(b);
            if cp == std::cmp::Ordering::Less || dp == std::cmp::Ordering::Greater {
                return Err(Error::InvalidArgument(format!("need {a} <= {c} < {d} <= {b}")));
            }
            Ok(bm_surd(c, d, s, p))
        }
        _ => Err(Error::InvalidArgument("gap ends must be rational or a conjugate pair (lower first)".into())),
    }
}

fn bm_rational(c: &Rational, d: &Rational, a: &Rational, b: &Rational) -> (Rational, WeightedSos) {
    if c == a && d == b {
        return (Rational::one(), WeightedSos::zero());
    }
    let s = c + d;
    let aa = a + b;
    let p = c * d;
    let bb = a * b;
    let gap = (a - b) * (a - b);
    let mut t = (&s * &aa - two() * &bb - two() * &p) / gap;
    if t.is_negative() {
        t = Rational::zero();
    }
    let one = Rational::one();
    // The vertex lies in [0, 1) except for (c, d) = (a, b).
    debug_assert!(t < one);
    let lin = &s - &t * &aa;
    let cst = &p - &t * &bb;
    let u = &one - &t;
    let delta = &lin * &lin - Rational::from_integer(4.into()) * &u * &cst;
    debug_assert!(!delta.is_positive());
    let m = &lin / (two() * &u);
    let kappa = -delta / (Rational::from_integer(4.into()) * &u);
    let mut sos = WeightedSos::single(u, Polynomial::from_coeffs(vec![-m, one.clone()]));
    if !kappa.is_zero() {
        sos.push(kappa, Polynomial::one());
    }
    (t, sos)
}

/// Gap `x^2 - s x + p` with irrational roots.
fn bm_surd(c: &Rational, d: &Rational, s: &Rational, p: &Rational) -> (Rational, WeightedSos) {
    let h = s / two();
    let alpha = &h * &h - p;
    let ct = c - &h;
    let dt = d - &h;
    let mx = if ct.abs() > dt.abs() { ct.abs() } else { dt.abs() };
    let root = Endpoint::QuadSurd { s: Rational::zero(), p: -alpha.clone(), branch: Branch::Upper };
    let r = crate::roots::rational_between(&q(&mx), &root);
    // (y - ct)(y - dt) = sigma' + t' (y^2 - r^2),  y^2 - r^2 = (r^2/alpha)(y^2 - alpha) + (1 - r^2/alpha) y^2
    let (tp, sp) = bm_rational(&ct, &dt, &-r.clone(), &r);
    let ratio = &r * &r / &alpha;
    let mut sos = sp;
    let extra = &tp * (Rational::one() - &ratio);
    if !extra.is_zero() {
        sos.push(extra, Polynomial::x());
    }
    let t = &tp * &ratio;
    (t, sos.affine(&Rational::one(), &-h).simplify())
}

/// Single-term certificate `(x-c)(x-d) = sigma0 + t*g_idx` over `gens`, where `gens[idx]` is the
/// monic gap quadratic of the gap `(a, b)`.
pub fn gap_certificate(c: &Rational, d: &Rational, a: &Endpoint, b: &Endpoint, gens: &GeneratorSet, idx: usize) -> Res<Certificate> {
    let (t, s0) = berg_maserick(c, d, a, b)?;
    let mut terms = vec![(ExponentVector::empty(gens.len()), s0)];
    if !t.is_zero() {
        terms.push((ExponentVector::unit(gens.len(), idx), WeightedSos::constant(t)));
    }
    let cert = Certificate::from_terms(gens, terms).with_provenance("single gap");
    let want = Polynomial::linear_root(c) * Polynomial::linear_root(d);
    if cert.target != want {
        return Err(Refusal::internal(format!("gap identity for ({c}, {d}) failed to verify")));
    }
    Ok(cert)
}

/// `x - a` (for `a < -sqrt d`) or `a - x` (for `a > sqrt d`) over `{d - x^2}`.
pub fn disk_linear(a: &Rational, d: &Rational) -> Res<Certificate> {
    let root = Endpoint::surd(Rational::zero(), -d.clone(), Branch::Upper)?;
    let lower = a.is_negative();
    let target = if lower { root.conjugate().expect("surd") } else { root };
    let a_sq = a * a;
    if &a_sq <= d {
        return Err(Refusal::from(Error::InvalidArgument(format!("{a} lies inside the disk of radius sqrt({d})"))));
    }
    let mut tol = Rational::one();
    for _ in 0..256 {
        let r = rational_approx_surd(&target, &tol, if lower { Side::Above } else { Side::Below });
        if !r.is_zero() {
            let ap = (&r * &r + d) / (two() * &r);
            if (lower && &ap > a) || (!lower && &ap < a) {
                return disk_linear_with(a, d, &r);
            }
        }
        tol /= two();
    }
    Err(Refusal::internal(format!("no radius found for disk_linear({a}, {d})")))
}

/// The same identity with an explicit `r` (`r < 0` for the lower side, `r > 0` for the upper side).
pub fn disk_linear_with(a: &Rational, d: &Rational, r: &Rational) -> Res<Certificate> {
    let gens =
        GeneratorSet::new(vec![Polynomial::from_coeffs(vec![d.clone(), Rational::zero(), -Rational::one()])], vec![Role::DiskQuadratic]);
    if r.is_zero() {
        return Err(Refusal::from(Error::InvalidArgument("r must be nonzero".into())));
    }
    let ap = (r * r + d) / (two() * r);
    let w = (two() * r).abs().recip();
    let (target, rest) = if r.is_negative() { (Polynomial::linear_root(a), &ap - a) } else { (-Polynomial::linear_root(a), a - &ap) };
    if rest.is_negative() {
        return Err(Refusal::from(Error::InvalidArgument(format!("r = {r} does not reach past {a}"))));
    }
    let mut s0 = WeightedSos::single(w.clone(), Polynomial::linear_root(r));
    if !rest.is_zero() {
        s0.push(rest, Polynomial::one());
    }
    let cert = Certificate::from_terms(&gens, vec![(ExponentVector(vec![0]), s0), (ExponentVector(vec![1]), WeightedSos::constant(w))])
        .with_provenance("disk linear")
        .with_note("r", r.to_string());
    if cert.target != target {
        return Err(Refusal::internal("disk identity failed to verify"));
    }
    Ok(cert)
}

/// `x - a` or `a - x` over `{-(x^2 - s x + p)}` for the disk `[c, c']` bounded by conjugate surds.
pub fn disk_linear_surd(a: &Rational, s: &Rational, p: &Rational) -> Res<Certificate> {
    let h = s / two();
    let dd = &h * &h - p;
    let c = disk_linear(&(a - &h), &dd)?;
    let mut out = c.affine(&Rational::one(), &-h)?;
    out.generators.roles = vec![Role::DiskQuadratic];
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use crate::certificate::verify;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    #[test]
    fn sos_examples() {
        let s = sos_on_line(&p(&[1, 0, 1])).unwrap();
        assert_eq!(s.terms, vec![(int(1), p(&[0, 1])), (int(1), p(&[1]))]);
        let s = sos_on_line(&p(&[1, 0, -1, 0, 1])).unwrap();
        assert_eq!(s.terms, vec![(int(1), Polynomial::from_coeffs(vec![rat(-1, 2), int(0), int(1)])), (rat(3, 4), p(&[1]))]);
        let s = sos_on_line(&p(&[1, -2, 1])).unwrap();
        assert_eq!(s.terms, vec![(int(1), p(&[-1, 1]))]);
        assert!(sos_on_line(&p(&[-1, 0, 1])).is_err());
    }

    #[test]
    fn sos_numeric_route() {
        // (x^2 - 2x + 2)(x^2 + 2x + 5)(x^2 + 1/10) has negative remainder after the head.
        let f = p(&[2, -2, 1]) * p(&[5, 2, 1]) * Polynomial::from_coeffs(vec![rat(1, 10), int(0), int(1)]);
        let s = sos_on_line(&f).unwrap();
        assert_eq!(s.expand(), f);
        assert!(s.weights_nonnegative());
        assert!(s.terms.iter().all(|(_, q)| 2 * q.deg() <= f.deg()));
        let f = p(&[1, 0, 0, 0, 0, 0, 0, 0, 1]) + p(&[0, 0, 0, 0, 0, -1]);
        let s = sos_on_line(&f).unwrap();
        assert_eq!(s.expand(), f);
    }

    #[test]
    fn halfline_examples() {
        let (s0, s1) = decompose_halfline(&p(&[0, 1])).unwrap();
        assert!(s0.is_empty());
        assert_eq!(s1.terms, vec![(int(1), p(&[1]))]);
        let (s0, s1) = decompose_halfline(&p(&[1, 1])).unwrap();
        assert_eq!(s0.terms, vec![(int(1), p(&[1]))]);
        assert_eq!(s1.terms, vec![(int(1), p(&[1]))]);
        let (s0, s1) = decompose_halfline(&p(&[1, -2, 1])).unwrap();
        assert_eq!(s0.terms, vec![(int(1), p(&[-1, 1]))]);
        assert!(s1.is_empty());
    }

    #[test]
    fn goursat_examples() {
        assert_eq!(goursat(&p(&[1, 0, -1]), 2).unwrap(), p(&[0, 4]));
        assert_eq!(goursat(&p(&[1]), 0).unwrap(), p(&[1]));
        assert_eq!(goursat(&p(&[0, 1]), 1).unwrap(), p(&[1, -1]));
        assert!(goursat(&p(&[0, 0, 1]), 1).is_err());
    }

    #[test]
    fn interval_examples() {
        let c = decompose_interval(&p(&[1, 0, -1]), &int(-1), &int(1)).unwrap();
        assert_eq!(c.terms.len(), 1);
        let (e, s) = c.terms.iter().next().unwrap();
        assert_eq!(e.0, vec![1, 1]);
        assert_eq!(s.terms, vec![(int(1), p(&[1]))]);
        let c = decompose_interval(&p(&[1]), &int(0), &int(1)).unwrap();
        assert_eq!(c.terms.keys().next().unwrap().0, vec![0, 0]);
        let c = decompose_interval(&p(&[0, 1]), &int(0), &int(1)).unwrap();
        assert_eq!(c.terms.len(), 1);
        assert_eq!(c.terms.keys().next().unwrap().0, vec![1, 0]);
        let f = p(&[2, -3, 1]) * p(&[2, -3, 1]) * p(&[7, 1]);
        let c = decompose_interval(&f, &rat(-1, 2), &int(3)).unwrap();
        let r = verify(&c, None);
        assert!(r.valid && r.degree_bound_ok);
    }

    #[test]
    fn point_examples() {
        let c = decompose_point(&p(&[2]), &int(0)).unwrap();
        assert_eq!(c.terms.keys().next().unwrap().0, vec![0, 0]);
        let c = decompose_point(&p(&[0, 1]), &int(0)).unwrap();
        assert_eq!(c.terms.keys().next().unwrap().0, vec![1, 0]);
        let c = decompose_point(&-p(&[1, -2, 1]), &int(1)).unwrap();
        let (e, s) = c.terms.iter().next().unwrap();
        assert_eq!(e.0, vec![1, 1]);
        assert_eq!(s.terms, vec![(int(1), p(&[1]))]);
        assert!(decompose_point(&p(&[-1, 1]), &int(0)).is_err());
    }

    #[test]
    fn bm_examples() {
        let (t, s) = berg_maserick(&int(1), &int(2), &q(&int(0)), &q(&int(3))).unwrap();
        assert_eq!(t, rat(5, 9));
        assert_eq!(s.terms, vec![(rat(4, 9), Polynomial::from_coeffs(vec![rat(-3, 2), int(1)])), (int(1), p(&[1]))]);
        let (t, s) = berg_maserick(&int(0), &int(3), &q(&int(0)), &q(&int(3))).unwrap();
        assert_eq!(t, int(1));
        assert!(s.is_empty());
        let lo = Endpoint::surd(int(0), int(-2), Branch::Lower).unwrap();
        let hi = lo.conjugate().unwrap();
        let (t, s) = berg_maserick(&int(-1), &rat(1, 2), &lo, &hi).unwrap();
        assert_eq!(&s.expand() + &p(&[-2, 0, 1]).scale(&t), Polynomial::from_coeffs(vec![rat(-1, 2), rat(1, 2), int(1)]));
        assert!(t >= int(0) && t <= int(1));
        assert!(berg_maserick(&int(-2), &int(0), &lo, &hi).is_err());
    }

    #[test]
    fn disk_examples() {
        let c = disk_linear_with(&int(-2), &int(2), &rat(-3, 2)).unwrap();
        let s0 = &c.terms[&ExponentVector(vec![0])];
        assert_eq!(s0.terms, vec![(rat(1, 3), Polynomial::from_coeffs(vec![rat(3, 2), int(1)])), (rat(7, 12), p(&[1]))]);
        assert_eq!(c.terms[&ExponentVector(vec![1])].terms, vec![(rat(1, 3), p(&[1]))]);
        let c = disk_linear_with(&int(2), &int(2), &rat(3, 2)).unwrap();
        assert_eq!(c.target, p(&[2, -1]));
        assert_eq!(c.terms[&ExponentVector(vec![0])].terms[1].0, rat(7, 12));
        let c = disk_linear(&rat(-3, 2), &int(2)).unwrap();
        assert_eq!(c.target, Polynomial::from_coeffs(vec![rat(3, 2), int(1)]));
        let c = disk_linear_surd(&int(-7), &int(-8), &int(14)).unwrap();
        assert_eq!(c.gens()[0], p(&[-14, -8, -1]));
        assert!(verify(&c, None).valid);
        assert!(disk_linear(&int(1), &int(2)).is_err());
    }
}
