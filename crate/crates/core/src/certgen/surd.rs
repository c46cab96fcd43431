//! Sets whose boundary contains conjugate quadratic surds.
//!
//! `f` is certified on a rational superset `K'` on which it stays nonnegative, then each
//! generator of `K'` is rewritten over the generators of `K`: shrunken surd gaps through the
//! two-point identity, displaced extremes through the linear disk identity.

use std::cmp::Ordering;

use num_traits::{Signed, Zero};

use super::{core, fuel_for, lift, CertifyConfig, Ctx, Res};
use crate::arith::{Polynomial, Rational};
use crate::certificate::Certificate;
use crate::error::Refusal;
use crate::roots::{nonneg_everywhere, real_roots, RealPoint};
use crate::semialg::{natural_generators, Component, Endpoint, GeneratorSet, Role, SemiAlgSet};
use crate::sos::{disk_linear_surd, gap_certificate, sos_unchecked};

pub(crate) fn certify_surd(f: &Polynomial, cx: &Ctx, cfg: &CertifyConfig) -> Res<Certificate> {
    surd(f, cx, cfg, fuel_for(f))
}

fn surd(f: &Polynomial, cx: &Ctx, cfg: &CertifyConfig, fuel: usize) -> Res<Certificate> {
    if fuel == 0 {
        return Err(Refusal::internal("recursion depth exceeded"));
    }
    let n = &cx.n;
    if f.is_zero() {
        return Ok(Certificate::zero(n));
    }
    if f.deg() == 0 {
        return Ok(Certificate::constant(n, f.coeff(0)));
    }
    if nonneg_everywhere(f) {
        return Ok(Certificate::sos(n, sos_unchecked(f)?));
    }
    // A surd boundary zero: its minimal polynomial (up to sign) is a generator dividing f.
    for (i, g) in n.gens.iter().enumerate() {
        if !matches!(n.roles[i], Role::GapQuadratic | Role::DiskQuadratic) || !is_surd_quadratic(g) {
            continue;
        }
        if let Some(h) = f.exact_div(g) {
            if !cx.nonneg(&h)? {
                return Err(Refusal::internal("cofactor of a surd boundary zero is not nonnegative"));
            }
            let hc = surd(&h, cx, cfg, fuel - 1)?;
            return Ok(Certificate::generator(n, i).mul(&hc)?);
        }
    }
    if let [comp] = cx.k.components() {
        if f.deg() == 1 {
            return linear_on_segment(f, comp, n);
        }
    }
    reduce(f, cx, cfg)
}

fn is_surd_quadratic(g: &Polynomial) -> bool {
    g.deg() == 2 && {
        let (a, b, c) = (g.coeff(2), g.coeff(1), g.coeff(0));
        let disc = &b * &b - Rational::from_integer(4.into()) * &a * &c;
        disc.is_positive() && !crate::arith::is_rational_square(&disc)
    }
}

/// `x - a >= 0` (or `a - x` when `upper`) on the disk bounded by the conjugate pair of `e`.
fn disk_side(a: &Rational, e: &Endpoint, upper: bool) -> Res<Certificate> {
    let Endpoint::QuadSurd { s, p, .. } = e else {
        return Err(Refusal::internal("disk side needs a surd endpoint"));
    };
    if upper {
        Ok(disk_linear_surd(&-a, &-s, p)?.affine(&Rational::from_integer((-1).into()), &Rational::zero())?)
    } else {
        disk_linear_surd(a, s, p)
    }
}

fn linear_on_segment(f: &Polynomial, comp: &Component, n: &GeneratorSet) -> Res<Certificate> {
    let Component::Segment(lo, hi) = comp else {
        return Err(Refusal::internal("surd set with a single component must be a segment"));
    };
    let lc = f.leading_coefficient();
    let root = -f.coeff(0) / &lc;
    let (end, upper, idx) =
        if lc.is_positive() { (lo, false, n.index_of_role(Role::LowerLinear)) } else { (hi, true, n.index_of_role(Role::UpperLinear)) };
    let base = match end.as_rational() {
        Some(q) => {
            let i = idx.ok_or_else(|| Refusal::internal("linear generator missing"))?;
            let slack = if upper { &root - q } else { q - &root };
            Certificate::generator(n, i).add(&Certificate::constant(n, slack))?
        }
        None => lift(&disk_side(&root, end, upper)?, n)?,
    };
    Ok(base.scale(&lc.abs()))
}

// ---------------------------------------------------------------------------

/// A rational strictly between `e` and the nearest root of `f` on the chosen side.
fn outward(e: &Endpoint, roots: &[RealPoint], above: bool) -> Rational {
    let p = e.to_point();
    let next = if above {
        roots.iter().find(|r| r.cmp_exact(&p) == Ordering::Greater).cloned()
    } else {
        roots.iter().rev().find(|r| r.cmp_exact(&p) == Ordering::Less).cloned()
    };
    match (next, above) {
        (Some(r), true) => RealPoint::rational_between(&p, &r),
        (Some(r), false) => RealPoint::rational_between(&r, &p),
        (None, true) => RealPoint::rational_between(&p, &RealPoint::Rational(p.upper_bound() + Rational::from_integer(1.into()))),
        (None, false) => RealPoint::rational_between(&RealPoint::Rational(p.lower_bound() - Rational::from_integer(1.into())), &p),
    }
}

/// Enlarges `K` to rational boundary, certifies there, and rewrites the enlarged generators.
fn reduce(f: &Polynomial, cx: &Ctx, cfg: &CertifyConfig) -> Res<Certificate> {
    let n = &cx.n;
    let roots = real_roots(f)?;
    let comps = cx.k.components();
    // Rational replacements for the irrational endpoints.
    let mut swap: Vec<(Endpoint, Rational)> = Vec::new();
    for (a, b) in cx.k.gaps() {
        if a.is_rational() {
            continue;
        }
        let (ap, bp) = (a.to_point(), b.to_point());
        let inside: Vec<&RealPoint> =
            roots.iter().filter(|x| x.cmp_exact(&ap) == Ordering::Greater && x.cmp_exact(&bp) == Ordering::Less).collect();
        let r = RealPoint::rational_between(&ap, inside.first().copied().unwrap_or(&bp));
        let last = inside.last().map(|x| (*x).clone()).unwrap_or(RealPoint::Rational(r.clone()));
        let s = RealPoint::rational_between(&last, &bp);
        swap.push((a, r));
        swap.push((b, s));
    }
    if let Some(lo) = cx.k.min().filter(|e| !e.is_rational()) {
        swap.push((lo.clone(), outward(&lo, &roots, false)));
    }
    if let Some(hi) = cx.k.max().filter(|e| !e.is_rational()) {
        swap.push((hi.clone(), outward(&hi, &roots, true)));
    }
    let map = |e: &Endpoint| -> Endpoint {
        swap.iter().find(|(x, _)| x == e).map(|(_, q)| Endpoint::Rational(q.clone())).unwrap_or_else(|| e.clone())
    };
    let new_comps: Vec<Component> = comps
        .iter()
        .map(|c| match c {
            Component::Point(a) => Component::Point(map(a)),
            Component::Segment(a, b) => Component::Segment(map(a), map(b)),
            Component::RayBelow(b) => Component::RayBelow(map(b)),
            Component::RayAbove(a) => Component::RayAbove(map(a)),
            Component::Line => Component::Line,
        })
        .collect();
    let kp = SemiAlgSet::try_new(new_comps).map_err(Refusal::from)?;
    if kp.gaps().len() != cx.k.gaps().len() {
        return Err(Refusal::internal("enlarged set changed its gap structure"));
    }
    let np = natural_generators(&kp)?;
    let cxp = Ctx::new(&kp, np.clone(), cfg);
    if !cxp.nonneg(f)? {
        return Err(Refusal::internal("target is negative on the enlarged set"));
    }
    let cert = core(f, &cxp, fuel_for(f))?;

    let disk_idx = n.index_of_role(Role::DiskQuadratic);
    let gaps = cx.k.gaps();
    let new_gaps = kp.gaps();
    let mut gap_no = 0;
    let mut images = Vec::with_capacity(np.len());
    for (i, role) in np.roles.iter().enumerate() {
        let img = match role {
            Role::LowerLinear | Role::UpperLinear => {
                let upper = *role == Role::UpperLinear;
                let old = if upper { cx.k.max() } else { cx.k.min() }.expect("bounded side");
                match old.as_rational() {
                    Some(_) => {
                        let j = n.index_of_role(*role).ok_or_else(|| Refusal::internal("linear generator missing"))?;
                        Certificate::generator(n, j)
                    }
                    None => {
                        let q = if upper { kp.max() } else { kp.min() }.expect("bounded side");
                        let q = q.as_rational().expect("rational after enlarging").clone();
                        if disk_idx.is_none() {
                            return Err(Refusal::internal("displaced extreme without a disk generator"));
                        }
                        lift(&disk_side(&q, &old, upper)?, n)?
                    }
                }
            }
            Role::GapQuadratic => {
                let (a, b) = &gaps[gap_no];
                let (r, s) = &new_gaps[gap_no];
                let idx = cx.gap_index(gap_no).ok_or_else(|| Refusal::internal("gap generator missing"))?;
                gap_no += 1;
                if a.is_rational() {
                    Certificate::generator(n, idx)
                } else {
                    let r = r.as_rational().expect("rational").clone();
                    let s = s.as_rational().expect("rational").clone();
                    gap_certificate(&r, &s, a, b, n, idx)?
                }
            }
            _ => return Err(Refusal::internal(format!("unexpected generator role at {i}"))),
        };
        images.push(img);
    }
    Ok(cert.substitute(n, &images)?.with_note("enlarged_set", crate::io::render_set(&kp)))
}
