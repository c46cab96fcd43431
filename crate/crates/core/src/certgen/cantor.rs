//! The middle-thirds Cantor set and infinite unions of intervals.
//!
//! Neither set is semialgebraic, but nonnegativity on it is decided by a finite stage
//! `K_n ⊇ K`, over whose natural generators the certificate is written.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use super::{certify, Res};
use crate::arith::{Polynomial, Rational};
use crate::certificate::Certificate;
use crate::error::{Error, Refusal, RefusalReason};
use crate::roots::{check_nonneg, real_roots, RealPoint};
use crate::semialg::{Component, Endpoint, SemiAlgSet};

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// `C_n`: the `2^n` closed intervals of length `3^-n` left after `n` removals.
pub fn cantor_set(n: u32) -> SemiAlgSet {
    let mut ivs = vec![(Rational::zero(), Rational::one())];
    for _ in 0..n {
        ivs = ivs
            .into_iter()
            .flat_map(|(a, b)| {
                let l = (&b - &a) / q(3);
                [(a.clone(), &a + &l), (&b - &l, b)]
            })
            .collect();
    }
    SemiAlgSet::from_rational_intervals(&ivs)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CantorReport {
    /// The least `n` with `f >= 0` on `C_n`.
    pub level: u32,
    /// Removed gaps containing each negativity interval of `f` that meets `[0, 1]`.
    pub negative_gaps: Vec<(Rational, Rational)>,
    /// A rational lower bound on the length of the shortest such interval.
    pub alpha: Option<Rational>,
}

enum Located {
    Misses,
    InGap { generation: u32, gap: (Rational, Rational) },
    Witness(Rational),
}

/// Places the open interval `(lo, hi)` relative to the Cantor set.
fn locate(lo: Option<&RealPoint>, hi: Option<&RealPoint>) -> Located {
    let in_j =
        |x: &Rational| lo.is_none_or(|l| l.cmp_rational(x) == Ordering::Less) && hi.is_none_or(|h| h.cmp_rational(x) == Ordering::Greater);
    let (mut u, mut v) = (Rational::zero(), Rational::one());
    let mut generation = 0;
    loop {
        for e in [&u, &v] {
            if in_j(e) {
                return Located::Witness(e.clone());
            }
        }
        if hi.is_some_and(|h| h.cmp_rational(&u) != Ordering::Greater) || lo.is_some_and(|l| l.cmp_rational(&v) != Ordering::Less) {
            return Located::Misses;
        }
        generation += 1;
        let l = (&v - &u) / q(3);
        let (p, r) = (&u + &l, &u + &l + &l);
        for e in [&p, &r] {
            if in_j(e) {
                return Located::Witness(e.clone());
            }
        }
        let after_p = lo.is_some_and(|x| x.cmp_rational(&p) != Ordering::Less);
        let before_r = hi.is_some_and(|x| x.cmp_rational(&r) != Ordering::Greater);
        if after_p && before_r {
            return Located::InGap { generation, gap: (p, r) };
        }
        if hi.is_some_and(|x| x.cmp_rational(&p) != Ordering::Greater) {
            v = p;
        } else {
            u = r;
        }
    }
}

/// A rational lower bound on `b - a > 0`.
fn length_lower_bound(a: &RealPoint, b: &RealPoint) -> Rational {
    let (mut a, mut b) = (a.clone(), b.clone());
    loop {
        let d = b.lower_bound() - a.upper_bound();
        if d > Rational::zero() {
            return d;
        }
        a.refine();
        b.refine();
    }
}

/// Decides `f >= 0` on the Cantor set and certifies on the least sufficient stage.
pub fn cantor_certify(f: &Polynomial, max_level: u32) -> Res<(CantorReport, Certificate)> {
    let roots = real_roots(f)?;
    let mut level = 0;
    let mut gaps = Vec::new();
    let mut alpha: Option<Rational> = None;
    for i in 0..=roots.len() {
        let lo = if i == 0 { None } else { Some(&roots[i - 1]) };
        let hi = roots.get(i);
        let sample = match (lo, hi) {
            (None, None) => Rational::zero(),
            (None, Some(h)) => h.lower_bound() - Rational::one(),
            (Some(l), None) => l.upper_bound() + Rational::one(),
            (Some(l), Some(h)) => RealPoint::rational_between(l, h),
        };
        if f.eval(&sample) >= Rational::zero() {
            continue;
        }
        match locate(lo, hi) {
            Located::Misses => {}
            Located::Witness(w) => {
                return Err(Refusal::new(RefusalReason::NotNonnegative, format!("{f} is negative at {w}, a point of the Cantor set"))
                    .with_witness(Endpoint::Rational(w)));
            }
            Located::InGap { generation, gap } => {
                level = level.max(generation);
                gaps.push(gap);
                let len = length_lower_bound(lo.expect("bounded"), hi.expect("bounded"));
                if alpha.as_ref().is_none_or(|a| len < *a) {
                    alpha = Some(len);
                }
            }
        }
    }
    if level > max_level {
        let mut r =
            Refusal::new(RefusalReason::LevelTooSmall, format!("f needs stage {level} of the Cantor set, above the limit {max_level}"));
        r.required_level = Some(level);
        return Err(r);
    }
    let k = cantor_set(level);
    if check_nonneg(f, &k.to_region())?.is_some() {
        return Err(Refusal::internal("the computed stage does not carry f"));
    }
    let cert = certify(f, &k)?.with_note("cantor_level", level.to_string());
    Ok((CantorReport { level, negative_gaps: gaps, alpha }, cert))
}

// ---------------------------------------------------------------------------

/// `i -> [alpha_i, beta_i]`
pub type IntervalFn = Arc<dyn Fn(i64) -> (Rational, Rational) + Send + Sync>;

/// An infinite union of closed intervals, described by its pieces.
#[derive(Clone)]
pub enum FamilyKind {
    /// `∪_{i>=0} [alpha_i, beta_i]` with `alpha_i -> inf`; `lower_ray` makes piece 0 `(-inf, beta_0]`.
    Increasing { intervals: IntervalFn, lower_ray: bool },
    /// `∪_{i<=0} [alpha_i, beta_i]` with `beta_i -> -inf`; `upper_ray` makes piece 0 `[alpha_0, inf)`.
    Decreasing { intervals: IntervalFn, upper_ray: bool },
    /// `∪_{i in Z} [alpha_i, beta_i]`, unbounded in both directions.
    Bilateral { intervals: IntervalFn },
    /// `{0} ∪ {1/i : i >= 1}`
    Harmonic,
}

impl fmt::Debug for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            FamilyKind::Increasing { .. } => "Increasing",
            FamilyKind::Decreasing { .. } => "Decreasing",
            FamilyKind::Bilateral { .. } => "Bilateral",
            FamilyKind::Harmonic => "Harmonic",
        };
        f.write_str(name)
    }
}

fn piece(a: Rational, b: Rational) -> Component {
    if a == b {
        Component::Point(Endpoint::Rational(a))
    } else {
        Component::Segment(Endpoint::Rational(a), Endpoint::Rational(b))
    }
}

impl FamilyKind {
    /// `(K_n, P_n)`: the stage `K_n ⊇ K` and a finite part `P_n ⊆ K`.
    pub fn stage(&self, n: usize) -> Result<(SemiAlgSet, SemiAlgSet), Error> {
        let n = n as i64;
        let r = |e: Rational| Endpoint::Rational(e);
        let (mut stage, mut part) = (Vec::new(), Vec::new());
        match self {
            FamilyKind::Increasing { intervals, lower_ray } => {
                for i in 0..=n {
                    let (a, b) = intervals(i);
                    part.push(if i == 0 && *lower_ray { Component::RayBelow(r(b)) } else { piece(a, b) });
                }
                stage.clone_from(&part);
                stage.push(Component::RayAbove(r(intervals(n + 1).0)));
            }
            FamilyKind::Decreasing { intervals, upper_ray } => {
                for i in 0..=n {
                    let (a, b) = intervals(-i);
                    part.push(if i == 0 && *upper_ray { Component::RayAbove(r(a)) } else { piece(a, b) });
                }
                stage.clone_from(&part);
                stage.push(Component::RayBelow(r(intervals(-(n + 1)).1)));
            }
            FamilyKind::Bilateral { intervals } => {
                for i in -n..=n {
                    let (a, b) = intervals(i);
                    part.push(piece(a, b));
                }
                stage.clone_from(&part);
                stage.push(Component::RayBelow(r(intervals(-(n + 1)).1)));
                stage.push(Component::RayAbove(r(intervals(n + 1).0)));
            }
            FamilyKind::Harmonic => {
                part.push(Component::Point(r(Rational::zero())));
                for i in 1..=n + 1 {
                    part.push(Component::Point(r(Rational::new(1.into(), i.into()))));
                }
                stage.push(Component::Segment(r(Rational::zero()), r(Rational::new(1.into(), (n + 1).into()))));
                for i in 1..=n {
                    stage.push(Component::Point(r(Rational::new(1.into(), i.into()))));
                }
            }
        }
        Ok((SemiAlgSet::try_new(stage)?, SemiAlgSet::try_new(part)?))
    }
}

/// The least stage `n <= max_level` with `f >= 0` on `K_n`, and a certificate there.
pub fn family_certify(f: &Polynomial, family: &FamilyKind, max_level: usize) -> Res<(usize, Certificate)> {
    for n in 0..=max_level {
        let (stage, part) = family.stage(n)?;
        if let Some(w) = check_nonneg(f, &part.to_region())? {
            let mut r = Refusal::new(RefusalReason::NotNonnegative, format!("{f} is negative on the union"));
            if let Some(e) = w.to_endpoint() {
                r.detail = format!("{f} is negative at {e}, a point of the union");
                r = r.with_witness(e);
            }
            return Err(r);
        }
        if check_nonneg(f, &stage.to_region())?.is_none() {
            let cert = certify(f, &stage)?.with_note("family_level", n.to_string());
            return Ok((n, cert));
        }
    }
    Err(Refusal::new(RefusalReason::Inconclusive, format!("no stage up to {max_level} carries f and no negative point was found")))
}
