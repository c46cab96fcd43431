//! Rays `[c, inf)` ending at an irrational algebraic point of any degree.
//!
//! The preordering of such a ray is not finitely generated; each certificate picks its own
//! rational `r < c` and lives over `{x - r, p}`.

use std::cmp::Ordering;

use super::steps::simple_below;
use super::{lift, Res};
use crate::arith::{is_irreducible, Polynomial, Rational};
use crate::certificate::{verify, Certificate};
use crate::error::{Error, Refusal, RefusalReason};
use crate::roots::{check_nonneg, nonneg_everywhere, real_roots, RealPoint, Region, RegionComponent};
use crate::semialg::{GeneratorSet, Role, CITE_IRRATIONAL_RAY, CITE_NOT_FINITELY_GENERATED};
use crate::sos::{ray_above_unchecked, sos_unchecked};

/// A certificate over a generator list chosen for this target.
#[derive(Debug, Clone)]
pub struct DynamicCertificate {
    pub certificate: Certificate,
    /// The rational `r < c` of the linear generator, if one was needed.
    pub r: Option<Rational>,
    /// The defining polynomial, normalized to a positive leading coefficient.
    pub p: Polynomial,
}

/// Certifies `f >= 0` on `[c, inf)` for `c` the largest real root of `p`.
pub fn irrational_ray_certify(f: &Polynomial, p: &Polynomial) -> Res<DynamicCertificate> {
    let roots = real_roots(p)?;
    let Some(c) = roots.last() else {
        return Err(Error::InvalidArgument(format!("{p} has no real root")).into());
    };
    irrational_ray_certify_at(f, p, c)
}

/// As [`irrational_ray_certify`], with the endpoint named explicitly.
pub fn irrational_ray_certify_at(f: &Polynomial, p: &Polynomial, c: &RealPoint) -> Res<DynamicCertificate> {
    if p.deg() == 0 || !is_irreducible(p)? {
        return Err(Error::InvalidArgument(format!("{p} must be irreducible of positive degree")).into());
    }
    let p = if p.leading_coefficient() < Rational::from_integer(0.into()) { -p.clone() } else { p.clone() };
    let roots = real_roots(&p)?;
    if !c.sign_of(&p).is_eq() || roots.last().is_none_or(|top| top.cmp_exact(c) != Ordering::Equal) {
        return Err(Refusal::new(RefusalReason::UnsupportedEndpointDegree, "the endpoint must be the largest real root of p")
            .cite(CITE_IRRATIONAL_RAY));
    }
    let region = Region { comps: vec![RegionComponent { lo: Some(c.clone()), hi: None }] };
    if let Some(w) = check_nonneg(f, &region)? {
        let mut r = Refusal::new(RefusalReason::NotNonnegative, format!("{f} is negative on the ray"));
        if let Some(e) = witness_endpoint(f, &w, c) {
            r.detail = format!("{f} is negative at {e}");
            r = r.with_witness(e);
        }
        return Err(r);
    }

    let (cert, r) = if nonneg_everywhere(f) {
        let gens = GeneratorSet::new(vec![p.clone()], vec![Role::Foreign]);
        (Certificate::sos(&gens, sos_unchecked(f)?), None)
    } else {
        let mut m = 0;
        let mut h = f.clone();
        while let Some(q) = h.exact_div(&p) {
            h = q;
            m += 1;
        }
        let (body, r, gens) = if nonneg_everywhere(&h) {
            let gens = GeneratorSet::new(vec![p.clone()], vec![Role::Foreign]);
            (Certificate::sos(&gens, sos_unchecked(&h)?), None, gens)
        } else {
            let r = choose_r(&h, c)?;
            let gens = GeneratorSet::new(vec![Polynomial::linear_root(&r), p.clone()], vec![Role::LowerLinear, Role::Foreign]);
            (lift(&ray_above_unchecked(&h, &r)?, &gens)?, Some(r), gens)
        };
        let pi = gens.len() - 1;
        let mut out = body;
        if m % 2 == 1 {
            out = Certificate::generator(&gens, pi).mul(&out)?;
        }
        if m >= 2 {
            out = out.mul_square(&p.pow(m / 2));
        }
        (out, r)
    };
    let mut cert = cert.with_provenance("irrational ray").with_note("non_finitely_generated", CITE_NOT_FINITELY_GENERATED);
    if let Some(r) = &r {
        cert = cert.with_note("r", crate::io::render_rational(r));
    }
    cert.normalize();
    if cert.target != *f || !verify(&cert, None).valid {
        return Err(Refusal::internal("ray certificate failed verification"));
    }
    Ok(DynamicCertificate { certificate: cert, r, p })
}

/// A rational `r < c` with `h >= 0` on `[r, inf)`, as simple as possible.
fn choose_r(h: &Polynomial, c: &RealPoint) -> Res<Rational> {
    let below = real_roots(h)?.into_iter().rev().find(|x| x.cmp_exact(c) == Ordering::Less);
    let one = Rational::from_integer(1.into());
    for k in 0..200u32 {
        let tol = &one / Rational::from_integer(num_bigint::BigInt::from(1) << k as usize);
        let r = simple_below(c, &tol);
        if below.as_ref().is_some_and(|b| b.cmp_rational(&r) != Ordering::Less) {
            continue;
        }
        let region = Region { comps: vec![RegionComponent { lo: Some(RealPoint::Rational(r.clone())), hi: None }] };
        if check_nonneg(h, &region)?.is_none() {
            return Ok(r);
        }
    }
    Err(Refusal::internal("no rational left endpoint found"))
}

/// A reportable point of `[c, inf)` where `f < 0`.
fn witness_endpoint(f: &Polynomial, w: &RealPoint, c: &RealPoint) -> Option<crate::semialg::Endpoint> {
    if let Some(e) = w.to_endpoint() {
        return Some(e);
    }
    let mut w = w.clone();
    for _ in 0..400 {
        let q = w.upper_bound();
        if c.cmp_rational(&q) == Ordering::Less && f.eval(&q) < Rational::from_integer(0.into()) {
            return Some(crate::semialg::Endpoint::Rational(q));
        }
        w.refine();
    }
    None
}
