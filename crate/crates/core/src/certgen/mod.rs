//! Recursive certificate generation over the natural generators of a set.
//!
//! The recursion mirrors the constructive proof: base cases for connected sets, the hull
//! reduction, interior zeros, interior minima, a constant shift, and the boundary-zero step.
//! Sets with conjugate quadratic boundary points are reduced to rational ones first.

mod cantor;
mod ray;
mod steps;
mod surd;

pub use cantor::{cantor_certify, cantor_set, family_certify, CantorReport, FamilyKind, IntervalFn};
pub use ray::{irrational_ray_certify, irrational_ray_certify_at, DynamicCertificate};
pub use steps::{
    boundary_step, interior_min_probe, interior_min_step, interior_zero_step, select_gap_generators, GapChoice, GapContext,
    InteriorMinProbe, Selection, ShortCircuitKind, StepTriple,
};

use std::cell::Cell;
use std::cmp::Ordering;

use num_traits::Zero;

use crate::arith::{Polynomial, Rational};
use crate::certificate::{verify, Certificate, ExponentVector};
use crate::error::{Refusal, RefusalReason};
use crate::roots::{check_nonneg, zeros_in, Region, ZeroLocation};
use crate::semialg::{natural_generators, solve_generators, Component, Endpoint, GeneratorSet, Role, SemiAlgSet};
use crate::sos::{
    decompose_point, ensure_nonneg, gap_certificate, interval_unchecked, ray_above_unchecked, ray_below_unchecked, sos_unchecked,
};

use steps::{GPart, HPrimePart, Plan};

pub(crate) type Res<T> = std::result::Result<T, Refusal>;

#[derive(Debug, Clone)]
pub struct CertifyConfig {
    /// Cap on refinement rounds across all search loops of one call.
    pub max_refinements: usize,
}

impl Default for CertifyConfig {
    fn default() -> Self {
        CertifyConfig { max_refinements: 10_000 }
    }
}

/// Shared state of one certification run over a set with rational boundary.
pub(crate) struct Ctx<'a> {
    pub k: &'a SemiAlgSet,
    pub region: Region,
    pub n: GeneratorSet,
    budget: Cell<usize>,
}

impl<'a> Ctx<'a> {
    pub fn new(k: &'a SemiAlgSet, n: GeneratorSet, cfg: &CertifyConfig) -> Self {
        Ctx { k, region: k.to_region(), n, budget: Cell::new(cfg.max_refinements) }
    }

    pub fn nonneg(&self, f: &Polynomial) -> Res<bool> {
        Ok(check_nonneg(f, &self.region)?.is_none())
    }

    /// Consumes one refinement round.
    pub fn spend(&self) -> Res<()> {
        let b = self.budget.get();
        if b == 0 {
            return Err(Refusal::internal("refinement cap reached"));
        }
        self.budget.set(b - 1);
        Ok(())
    }

    fn role_index(&self, role: Role, nth: usize) -> Option<usize> {
        self.n.roles.iter().enumerate().filter(|(_, r)| **r == role).map(|(i, _)| i).nth(nth)
    }

    pub fn lower_index(&self) -> Option<usize> {
        self.role_index(Role::LowerLinear, 0)
    }

    pub fn upper_index(&self) -> Option<usize> {
        self.role_index(Role::UpperLinear, 0)
    }

    /// Generator index of the `j`-th gap.
    pub fn gap_index(&self, j: usize) -> Option<usize> {
        self.role_index(Role::GapQuadratic, j)
    }

    /// `(j, lo, hi)` for the gap whose left end is `c`.
    pub fn gap_right_of(&self, c: &Rational) -> Option<(usize, Rational, Rational)> {
        self.rational_gaps().into_iter().find(|(_, lo, _)| lo == c)
    }

    pub fn gap_left_of(&self, c: &Rational) -> Option<(usize, Rational, Rational)> {
        self.rational_gaps().into_iter().find(|(_, _, hi)| hi == c)
    }

    pub fn rational_gaps(&self) -> Vec<(usize, Rational, Rational)> {
        self.k
            .gaps()
            .into_iter()
            .enumerate()
            .filter_map(|(j, (a, b))| Some((j, a.as_rational()?.clone(), b.as_rational()?.clone())))
            .collect()
    }
}

/// A verified certificate for `f >= 0` on `K`, or a structured refusal.
pub fn certify(f: &Polynomial, k: &SemiAlgSet) -> Res<Certificate> {
    certify_with(f, k, &CertifyConfig::default())
}

pub fn certify_with(f: &Polynomial, k: &SemiAlgSet, cfg: &CertifyConfig) -> Res<Certificate> {
    if k.is_empty() {
        return Err(Refusal::new(RefusalReason::EmptySet, "every polynomial is nonnegative on the empty set; there is nothing to certify"));
    }
    let n = natural_generators(k)?;
    ensure_nonneg(f, k)?;
    let cx = Ctx::new(k, n, cfg);
    let cert = if k.boundary_is_rational() {
        core(f, &cx, fuel_for(f))?.with_provenance("rational boundary")
    } else {
        surd::certify_surd(f, &cx, cfg)?.with_provenance("quadratic boundary")
    };
    finish(cert, f, k)
}

/// Certifies over the natural generators of `K_S` for a foreign generator list `S`.
pub fn certify_generated(f: &Polynomial, s: &[Polynomial], cfg: &CertifyConfig) -> Res<Certificate> {
    let k = solve_generators(s)?;
    certify_with(f, &k, cfg)
}

fn finish(mut cert: Certificate, f: &Polynomial, k: &SemiAlgSet) -> Res<Certificate> {
    cert.normalize();
    if cert.target != *f {
        return Err(Refusal::internal("assembled certificate does not expand to the target"));
    }
    let report = verify(&cert, Some(k));
    if !report.valid {
        return Err(Refusal::internal(format!("assembled certificate failed verification: {}", report.messages.join("; "))));
    }
    Ok(cert)
}

pub(crate) fn fuel_for(f: &Polynomial) -> usize {
    3 * (f.degree().unwrap_or(0) + 2)
}

/// Recursion over a set with rational boundary; `f >= 0` on the set is a precondition.
pub(crate) fn core(f: &Polynomial, cx: &Ctx, fuel: usize) -> Res<Certificate> {
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
    if cx.k.is_connected() {
        return base(f, &cx.k.components()[0], n);
    }
    let hull = cx.k.hull();
    if check_nonneg(f, &hull.to_region())?.is_none() {
        return base(f, &hull.components()[0], n);
    }
    let zeros = zeros_in(f, &cx.region)?;
    let plan = if zeros.iter().any(|z| z.2 == ZeroLocation::Interior) {
        steps::interior_zero_plan(f, cx, &zeros)?
    } else if zeros.is_empty() {
        if let Some(plan) = steps::rational_gap_pair(f, cx)? {
            return assemble(plan, cx, fuel);
        }
        let m = boundary_minimum(f, cx.k);
        let shifted = f - &Polynomial::constant(m.clone());
        if !m.is_zero() && cx.nonneg(&shifted)? {
            let rest = core(&shifted, cx, fuel - 1)?;
            return rest.add(&Certificate::constant(n, m)).map_err(Refusal::from);
        }
        steps::interior_min_plan(f, cx)?
    } else {
        steps::boundary_plan(f, cx, &zeros)?
    };
    assemble(plan, cx, fuel)
}

/// `min f` over the (rational) boundary points.
fn boundary_minimum(f: &Polynomial, k: &SemiAlgSet) -> Rational {
    k.boundary_points()
        .iter()
        .map(|e| f.eval(e.as_rational().expect("rational boundary")))
        .min()
        .expect("a disconnected set has boundary points")
}

fn assemble(plan: Plan, cx: &Ctx, fuel: usize) -> Res<Certificate> {
    let n = &cx.n;
    let hc = core(&plan.h, cx, fuel - 1)?;
    let hp = match &plan.h_prime {
        HPrimePart::Square(q) => hc.mul_square(q),
        HPrimePart::Generator(i) => Certificate::generator(n, *i).mul(&hc)?,
        HPrimePart::GapPair { lo, hi, gap } => {
            let (a, b) = cx.k.gaps()[*gap].clone();
            let idx = cx.gap_index(*gap).ok_or_else(|| Refusal::internal("gap generator missing"))?;
            gap_certificate(lo, hi, &a, &b, n, idx)?.mul(&hc)?
        }
    };
    let g = match &plan.g {
        GPart::Zero => Certificate::zero(n),
        GPart::Product { scale, gens } => product_certificate(n, scale, gens),
        GPart::Recursive(g) => core(g, cx, fuel - 1)?,
    };
    Ok(g.add(&hp)?)
}

/// `scale * prod gens[i]`, with repeated generators folded into squares.
pub(crate) fn product_certificate(n: &GeneratorSet, scale: &Rational, gens: &[usize]) -> Certificate {
    let mut c = Certificate::constant(n, scale.clone());
    for i in gens {
        c = c.mul(&Certificate::generator(n, *i)).expect("same generator list");
    }
    c
}

/// Certificate of `f >= 0` on a connected rational component, lifted to `n`.
fn base(f: &Polynomial, comp: &Component, n: &GeneratorSet) -> Res<Certificate> {
    let q = |e: &Endpoint| e.as_rational().cloned().ok_or_else(|| Refusal::internal("irrational endpoint in the rational recursion"));
    let c = match comp {
        Component::Line => return Ok(Certificate::sos(n, sos_unchecked(f)?)),
        Component::RayAbove(a) => ray_above_unchecked(f, &q(a)?)?,
        Component::RayBelow(b) => ray_below_unchecked(f, &q(b)?)?,
        Component::Segment(a, b) => interval_unchecked(f, &q(a)?, &q(b)?)?,
        Component::Point(a) => decompose_point(f, &q(a)?)?,
    };
    lift(&c, n)
}

/// Reinterprets `c` over `n`, matching generators by equality.
pub(crate) fn lift(c: &Certificate, n: &GeneratorSet) -> Res<Certificate> {
    let mut map = Vec::with_capacity(c.generators.len());
    for (i, g) in c.gens().iter().enumerate() {
        let used = c.terms.keys().any(|e| e.0[i] == 1);
        match n.gens.iter().position(|h| h == g) {
            Some(j) => map.push(j),
            None if !used => map.push(usize::MAX),
            None => return Err(Refusal::internal(format!("generator {g} is not natural for the set"))),
        }
    }
    let mut out = Certificate::zero(n);
    for (e, s) in &c.terms {
        let idx: Vec<usize> = e.indices().iter().map(|i| map[*i]).collect();
        out.terms.entry(ExponentVector::from_indices(n.len(), &idx)).or_default().extend(s.clone());
    }
    out.target = c.target.clone();
    out.metadata.notes = c.metadata.notes.clone();
    out.normalize();
    Ok(out)
}

/// Sign of `f` just to the right (`right = true`) or left of a rational point.
pub(crate) struct SignProbe<'a> {
    f: &'a Polynomial,
    roots: Vec<crate::roots::RealPoint>,
}

impl<'a> SignProbe<'a> {
    pub fn new(f: &'a Polynomial) -> Res<Self> {
        Ok(SignProbe { f, roots: crate::roots::real_roots(f)? })
    }

    pub fn roots(&self) -> &[crate::roots::RealPoint] {
        &self.roots
    }

    pub fn beside(&self, x: &Rational, right: bool) -> Ordering {
        use crate::roots::RealPoint;
        let here = RealPoint::Rational(x.clone());
        let q = if right {
            match self.roots.iter().find(|r| r.cmp_rational(x) == Ordering::Greater) {
                Some(r) => RealPoint::rational_between(&here, r),
                None => x + Rational::from_integer(1.into()),
            }
        } else {
            match self.roots.iter().rev().find(|r| r.cmp_rational(x) == Ordering::Less) {
                Some(r) => RealPoint::rational_between(r, &here),
                None => x - Rational::from_integer(1.into()),
            }
        };
        self.f.eval(&q).cmp(&Rational::zero())
    }

    pub fn at(&self, x: &Rational) -> Ordering {
        self.f.eval(x).cmp(&Rational::zero())
    }
}

#[cfg(test)]
mod tests;
