//! The three reduction steps of the rational-boundary recursion.

use std::cmp::Ordering;

use num_traits::{One, Signed, Zero};

use super::{Ctx, Res, SignProbe};
use crate::arith::{simplest_between, Polynomial, Rational};
use crate::error::{Error, Refusal};
use crate::roots::{check_nonneg, real_roots, zeros_in, RealPoint, ZeroLocation};
use crate::semialg::{natural_generators, Component, Endpoint, GeneratorSet, SemiAlgSet};

/// `f = g + h_prime * h`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepTriple {
    pub g: Polynomial,
    pub h_prime: Polynomial,
    pub h: Polynomial,
}

impl StepTriple {
    pub fn expands_to(&self, f: &Polynomial) -> bool {
        &self.g + &(&self.h_prime * &self.h) == *f
    }
}

pub(crate) enum GPart {
    Zero,
    /// `scale * prod gens[i]`; repeats allowed.
    Product {
        scale: Rational,
        gens: Vec<usize>,
    },
    Recursive(Polynomial),
}

pub(crate) enum HPrimePart {
    /// `h' = q^2`
    Square(Polynomial),
    Generator(usize),
    /// `h' = (x - lo)(x - hi)` inside the closure of gap `gap`.
    GapPair {
        lo: Rational,
        hi: Rational,
        gap: usize,
    },
}

pub(crate) struct Plan {
    pub g: GPart,
    pub h_prime: HPrimePart,
    pub h: Polynomial,
}

impl Plan {
    fn simple(h_prime: HPrimePart, h: Polynomial) -> Self {
        Plan { g: GPart::Zero, h_prime, h }
    }

    pub fn triple(&self, n: &GeneratorSet) -> StepTriple {
        let g = match &self.g {
            GPart::Zero => Polynomial::zero(),
            GPart::Product { scale, gens } => product(n, gens).scale(scale),
            GPart::Recursive(g) => g.clone(),
        };
        let h_prime = match &self.h_prime {
            HPrimePart::Square(q) => q * q,
            HPrimePart::Generator(i) => n.gens[*i].clone(),
            HPrimePart::GapPair { lo, hi, .. } => pair(lo, hi),
        };
        StepTriple { g, h_prime, h: self.h.clone() }
    }
}

fn product(n: &GeneratorSet, gens: &[usize]) -> Polynomial {
    gens.iter().fold(Polynomial::one(), |acc, i| &acc * &n.gens[*i])
}

fn lin(c: &Rational) -> Polynomial {
    Polynomial::linear_root(c)
}

fn pair(a: &Rational, b: &Rational) -> Polynomial {
    &lin(a) * &lin(b)
}

fn div_exact(f: &Polynomial, d: &Polynomial) -> Res<Polynomial> {
    f.exact_div(d).ok_or_else(|| Refusal::internal(format!("{d} does not divide {f}")))
}

fn two_pow(k: u32) -> Rational {
    Rational::from_integer(num_bigint::BigInt::one() << k as usize)
}

/// A simple rational in `(p, p + tol)`.
pub(crate) fn simple_above(p: &RealPoint, tol: &Rational) -> Rational {
    match p {
        RealPoint::Rational(q) => simplest_between(q, &(q + tol)),
        RealPoint::Algebraic(_) => {
            let mut p = p.clone();
            p.refine_to(&(tol / Rational::from_integer(1024.into())));
            simplest_between(&p.upper_bound(), &(p.lower_bound() + tol))
        }
    }
}

/// A simple rational in `(p - tol, p)`.
pub(crate) fn simple_below(p: &RealPoint, tol: &Rational) -> Rational {
    match p {
        RealPoint::Rational(q) => simplest_between(&(q - tol), q),
        RealPoint::Algebraic(_) => {
            let mut p = p.clone();
            p.refine_to(&(tol / Rational::from_integer(1024.into())));
            simplest_between(&(p.upper_bound() - tol), &p.lower_bound())
        }
    }
}

fn strictly_inside(p: &RealPoint, lo: &Rational, hi: &Rational) -> bool {
    p.cmp_rational(lo) == Ordering::Greater && p.cmp_rational(hi) == Ordering::Less
}

fn rational_ctx<'a>(f: &Polynomial, k: &'a SemiAlgSet) -> Res<Ctx<'a>> {
    if !k.boundary_is_rational() {
        return Err(Error::InvalidArgument("the step functions need a set with rational boundary".into()).into());
    }
    let n = natural_generators(k)?;
    crate::sos::ensure_nonneg(f, k)?;
    Ok(Ctx::new(k, n, &super::CertifyConfig::default()))
}

// ---------------------------------------------------------------------------
// Interior zero

/// Splits off the square of the minimal polynomial of a zero of `f` in the interior of `K`.
pub fn interior_zero_step(f: &Polynomial, k: &SemiAlgSet) -> Res<StepTriple> {
    let cx = rational_ctx(f, k)?;
    let zeros = zeros_in(f, &cx.region)?;
    if !zeros.iter().any(|z| z.2 == ZeroLocation::Interior) {
        return Err(Error::InvalidArgument("f has no zero in the interior of K".into()).into());
    }
    Ok(interior_zero_plan(f, &cx, &zeros)?.triple(&cx.n))
}

pub(crate) fn interior_zero_plan(f: &Polynomial, cx: &Ctx, zeros: &[(RealPoint, usize, ZeroLocation)]) -> Res<Plan> {
    let z = &zeros.iter().find(|z| z.2 == ZeroLocation::Interior).expect("caller checked").0;
    let g = z.minimal_polynomial().monic();
    let mut m = 0;
    let mut h = f.clone();
    while let Some(q) = h.exact_div(&g) {
        h = q;
        m += 1;
    }
    if m == 0 || m % 2 == 1 {
        return Err(Refusal::internal(format!("interior zero of odd multiplicity {m}")));
    }
    if !cx.nonneg(&h)? {
        return Err(Refusal::internal("cofactor of an interior zero is not nonnegative"));
    }
    Ok(Plan::simple(HPrimePart::Square(g.pow(m / 2)), h))
}

// ---------------------------------------------------------------------------
// Interior minimum

/// The rationals `r < s`, the curvature `delta` and the quadratic `G` chosen for an interior minimum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InteriorMinProbe {
    pub r: Rational,
    pub s: Rational,
    pub delta: Rational,
    pub g: Polynomial,
    /// Index of the gap in `K.gaps()`.
    pub gap: usize,
}

/// For `f > 0` on `K` with a negative value in some gap.
pub fn interior_min_step(f: &Polynomial, k: &SemiAlgSet) -> Res<StepTriple> {
    let cx = rational_ctx(f, k)?;
    Ok(interior_min_plan(f, &cx)?.triple(&cx.n))
}

pub fn interior_min_probe(f: &Polynomial, k: &SemiAlgSet) -> Res<InteriorMinProbe> {
    let cx = rational_ctx(f, k)?;
    Ok(interior_min(f, &cx)?.0)
}

pub(crate) fn interior_min_plan(f: &Polynomial, cx: &Ctx) -> Res<Plan> {
    Ok(interior_min(f, cx)?.1)
}

/// The exact branch of the interior-minimum step: both extreme roots in a negative gap are rational.
pub(crate) fn rational_gap_pair(f: &Polynomial, cx: &Ctx) -> Res<Option<Plan>> {
    let roots = real_roots(f)?;
    for (j, a, b) in cx.rational_gaps() {
        let inside: Vec<&RealPoint> = roots.iter().filter(|r| strictly_inside(r, &a, &b)).collect();
        if let (Some(RealPoint::Rational(c)), Some(RealPoint::Rational(d))) = (inside.first(), inside.last()) {
            if c < d {
                return Ok(Some(Plan::simple(HPrimePart::GapPair { lo: c.clone(), hi: d.clone(), gap: j }, div_exact(f, &pair(c, d))?)));
            }
        }
    }
    Ok(None)
}

fn interior_min(f: &Polynomial, cx: &Ctx) -> Res<(InteriorMinProbe, Plan)> {
    let roots = real_roots(f)?;
    for (j, a, b) in cx.rational_gaps() {
        let seg = SemiAlgSet::from_rational_intervals(&[(a.clone(), b.clone())]);
        if check_nonneg(f, &seg.to_region())?.is_none() {
            continue;
        }
        let inside: Vec<&RealPoint> = roots.iter().filter(|r| strictly_inside(r, &a, &b)).collect();
        let (Some(c), Some(d)) = (inside.first(), inside.last()) else {
            return Err(Refusal::internal("negative on a gap without roots"));
        };
        if let (Some(c), Some(d)) = (c.as_rational(), d.as_rational()) {
            let hp = pair(c, d);
            let probe = InteriorMinProbe { r: c.clone(), s: d.clone(), delta: Rational::zero(), g: Polynomial::zero(), gap: j };
            let plan = Plan::simple(HPrimePart::GapPair { lo: c.clone(), hi: d.clone(), gap: j }, div_exact(f, &hp)?);
            return Ok((probe, plan));
        }
        if f.deg() == 2 {
            return Ok(quadratic_min(f, j, &a, &b));
        }
        let lc = f.leading_coefficient().abs();
        let half = Rational::new(1.into(), 2.into());
        let delta0 = if lc < Rational::one() { &lc * &half } else { half.clone() };
        let width = (&b - &a) / Rational::from_integer(4.into());
        // G >= 0 needs r, s close to the roots; f - G >= 0 needs delta small. Tighten each on failure.
        let (mut kt, mut kd) = (1u32, 1u32);
        while kt <= 64 && kd <= 64 {
            cx.spend()?;
            let tol = &width / two_pow(2 * kt);
            let delta = &delta0 / two_pow(kd);
            let r = match c.as_rational() {
                Some(q) => q.clone(),
                None => simple_above(c, &tol),
            };
            let s = match d.as_rational() {
                Some(q) => q.clone(),
                None => simple_below(d, &tol),
            };
            if r >= s {
                kt += 1;
                continue;
            }
            let (fr, fs) = (f.eval(&r), f.eval(&s));
            let slope = (&fs - &fr) / (&s - &r);
            let line = &Polynomial::constant(fr) + &lin(&r).scale(&slope);
            let g = &pair(&r, &s).scale(&delta) + &line;
            let rest = f - &g;
            let (g_ok, rest_ok) = (cx.nonneg(&g)?, cx.nonneg(&rest)?);
            if g_ok && rest_ok {
                let h = div_exact(&rest, &pair(&r, &s))?;
                let probe = InteriorMinProbe { r: r.clone(), s: s.clone(), delta, g: g.clone(), gap: j };
                return Ok((probe, Plan { g: GPart::Recursive(g), h_prime: HPrimePart::GapPair { lo: r, hi: s, gap: j }, h }));
            }
            if !g_ok {
                kt += 1;
            }
            if !rest_ok {
                kd += 1;
            }
        }
        return Err(Refusal::internal("interior minimum search exhausted"));
    }
    Err(Refusal::internal("no gap carries a negative value"))
}

/// `f = lc((x-m)^2 - D)` with irrational roots in the gap `(a, b)`: widen to a rational pair.
fn quadratic_min(f: &Polynomial, j: usize, a: &Rational, b: &Rational) -> (InteriorMinProbe, Plan) {
    let lc = f.leading_coefficient();
    let m = -f.coeff(1) / (&lc * Rational::from_integer(2.into()));
    let w = std::cmp::min(&m - a, b - &m);
    let (r, s) = (&m - &w, &m + &w);
    let hp = pair(&r, &s).scale(&lc);
    let g = f - &hp;
    let probe = InteriorMinProbe { r: r.clone(), s: s.clone(), delta: Rational::zero(), g: g.clone(), gap: j };
    let plan = Plan { g: GPart::Recursive(g), h_prime: HPrimePart::GapPair { lo: r, hi: s, gap: j }, h: Polynomial::constant(lc) };
    (probe, plan)
}

// ---------------------------------------------------------------------------
// Gap generator selection

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GapChoice {
    /// `g_i = 1`
    One,
    /// `g_i' = (x - d_i')(x - c_i)`, the generator of the gap left of `c_i`.
    Left,
    /// `g_i'' = (x - c_i)(x - d_i'')`, the generator of the gap right of `c_i`.
    Right,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapContext {
    pub left: Option<Endpoint>,
    pub zero: Endpoint,
    pub right: Option<Endpoint>,
    pub choice: GapChoice,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShortCircuitKind {
    /// `f > 0` on both sides of a zero, or a zero of multiplicity at least two.
    DoubleZero,
    /// `f < 0` just inside both ends of a gap whose ends are zeros.
    GapBetweenZeros,
    /// The zero is `min K` and `f > 0` just right of it.
    MinimumEnd,
    /// The zero is `max K` and `f > 0` just left of it.
    MaximumEnd,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Selection {
    ShortCircuit { kind: ShortCircuitKind, h_prime: Polynomial, h: Polynomial },
    Gaps(Vec<GapContext>),
}

pub(crate) enum Selected {
    Short(ShortCircuitKind, Plan),
    Table(Vec<GapContext>, Vec<usize>),
}

/// Per-zero structure used by the selection table.
struct ZeroInfo {
    c: Rational,
    mult: usize,
    isolated: bool,
    /// `[c, c''] ⊆ K`
    opens_right: bool,
    /// `[c', c] ⊆ K`
    opens_left: bool,
    is_min: bool,
    is_max: bool,
    /// `(j, d')` for the gap `(d', c)`
    left_gap: Option<(usize, Rational)>,
    /// `(j, d'')` for the gap `(c, d'')`
    right_gap: Option<(usize, Rational)>,
    sign_right: Ordering,
    sign_left: Ordering,
}

fn zero_info(c: &Rational, mult: usize, cx: &Ctx, probe: &SignProbe) -> ZeroInfo {
    let e = Endpoint::Rational(c.clone());
    let mut info = ZeroInfo {
        c: c.clone(),
        mult,
        isolated: false,
        opens_right: false,
        opens_left: false,
        is_min: cx.k.min().as_ref() == Some(&e),
        is_max: cx.k.max().as_ref() == Some(&e),
        left_gap: cx.gap_left_of(c).map(|(j, lo, _)| (j, lo)),
        right_gap: cx.gap_right_of(c).map(|(j, _, hi)| (j, hi)),
        sign_right: probe.beside(c, true),
        sign_left: probe.beside(c, false),
    };
    for comp in cx.k.components() {
        match comp {
            Component::Point(a) if *a == e => info.isolated = true,
            Component::Segment(a, _) | Component::RayAbove(a) if *a == e => info.opens_right = true,
            Component::Segment(_, b) | Component::RayBelow(b) if *b == e => info.opens_left = true,
            _ => {}
        }
    }
    info
}

impl ZeroInfo {
    /// `f(d'') = 0` and `f < 0` just left of `d''`.
    fn right_pinned(&self, probe: &SignProbe) -> bool {
        self.right_gap.as_ref().is_some_and(|(_, d)| probe.at(d) == Ordering::Equal && probe.beside(d, false) == Ordering::Less)
    }

    fn left_value(&self, probe: &SignProbe) -> Option<Ordering> {
        self.left_gap.as_ref().map(|(_, d)| probe.at(d))
    }
}

/// Chooses the gap generator at each boundary zero, or a short circuit with `G = 0`.
pub fn select_gap_generators(f: &Polynomial, k: &SemiAlgSet, zeros: &[Endpoint]) -> Res<Selection> {
    let cx = rational_ctx(f, k)?;
    let mut cs = Vec::new();
    for z in zeros {
        let c = z.as_rational().ok_or_else(|| Error::InvalidArgument("zeros must be rational".into()))?;
        if !f.eval(c).is_zero() {
            return Err(Error::InvalidArgument(format!("{c} is not a zero of f")).into());
        }
        cs.push((c.clone(), f.root_multiplicity(c)));
    }
    cs.sort();
    let probe = SignProbe::new(f)?;
    Ok(match select(f, &cx, &cs, &probe)? {
        Selected::Short(kind, plan) => {
            let t = plan.triple(&cx.n);
            Selection::ShortCircuit { kind, h_prime: t.h_prime, h: t.h }
        }
        Selected::Table(ctxs, _) => Selection::Gaps(ctxs),
    })
}

pub(crate) fn select(f: &Polynomial, cx: &Ctx, cs: &[(Rational, usize)], probe: &SignProbe) -> Res<Selected> {
    let infos: Vec<ZeroInfo> = cs.iter().map(|(c, m)| zero_info(c, *m, cx, probe)).collect();
    let r = infos.len();
    let neg = Ordering::Less;
    let pos = Ordering::Greater;
    for z in &infos {
        // f < 0 on both sides of an isolated even zero leaves h(c) < 0.
        if z.mult >= 2 && !(z.isolated && z.sign_left == neg && z.sign_right == neg) {
            let q = lin(&z.c);
            let h = div_exact(f, &(&q * &q))?;
            return Ok(Selected::Short(ShortCircuitKind::DoubleZero, Plan::simple(HPrimePart::Square(q), h)));
        }
    }
    for z in &infos {
        if z.sign_right == neg && z.right_pinned(probe) {
            let (j, _) = z.right_gap.clone().expect("pinned implies a gap");
            let idx = cx.gap_index(j).ok_or_else(|| Refusal::internal("gap generator missing"))?;
            let h = div_exact(f, &cx.n.gens[idx])?;
            return Ok(Selected::Short(ShortCircuitKind::GapBetweenZeros, Plan::simple(HPrimePart::Generator(idx), h)));
        }
    }
    let first = &infos[0];
    if first.is_min && first.sign_right == pos {
        let idx = cx.lower_index().ok_or_else(|| Refusal::internal("lower generator missing"))?;
        let h = div_exact(f, &cx.n.gens[idx])?;
        return Ok(Selected::Short(ShortCircuitKind::MinimumEnd, Plan::simple(HPrimePart::Generator(idx), h)));
    }
    let last = &infos[r - 1];
    if last.is_max && last.sign_left == pos {
        let idx = cx.upper_index().ok_or_else(|| Refusal::internal("upper generator missing"))?;
        let h = div_exact(f, &cx.n.gens[idx])?;
        return Ok(Selected::Short(ShortCircuitKind::MaximumEnd, Plan::simple(HPrimePart::Generator(idx), h)));
    }

    let mut ctxs = Vec::with_capacity(r);
    let mut gens = Vec::new();
    for (i, z) in infos.iter().enumerate() {
        let left_zero = z.left_value(probe) == Some(Ordering::Equal);
        let choice = if i == 0 {
            if z.is_min || z.sign_right == neg || (z.isolated && z.right_pinned(probe)) {
                GapChoice::Right
            } else {
                GapChoice::Left
            }
        } else if i + 1 < r {
            if z.isolated && z.sign_right == pos {
                if z.right_pinned(probe) {
                    GapChoice::Right
                } else if left_zero {
                    GapChoice::One
                } else {
                    GapChoice::Left
                }
            } else if z.isolated || z.opens_left {
                GapChoice::Right
            } else if left_zero {
                GapChoice::One
            } else {
                GapChoice::Left
            }
        } else if z.is_max || z.sign_right == pos {
            if left_zero {
                GapChoice::One
            } else {
                GapChoice::Left
            }
        } else {
            GapChoice::Right
        };
        let gap = match choice {
            GapChoice::One => None,
            GapChoice::Left => Some(z.left_gap.as_ref().ok_or_else(|| Refusal::internal("selection needs a left gap"))?.0),
            GapChoice::Right => Some(z.right_gap.as_ref().ok_or_else(|| Refusal::internal("selection needs a right gap"))?.0),
        };
        if let Some(j) = gap {
            gens.push(cx.gap_index(j).ok_or_else(|| Refusal::internal("gap generator missing"))?);
        }
        ctxs.push(GapContext {
            left: z.left_gap.as_ref().map(|(_, d)| Endpoint::Rational(d.clone())),
            zero: Endpoint::Rational(z.c.clone()),
            right: z.right_gap.as_ref().map(|(_, d)| Endpoint::Rational(d.clone())),
            choice,
        });
    }
    Ok(Selected::Table(ctxs, gens))
}

// ---------------------------------------------------------------------------
// Boundary zeros

/// For `f > 0` on the interior of `K` with zeros only on its boundary.
pub fn boundary_step(f: &Polynomial, k: &SemiAlgSet) -> Res<StepTriple> {
    let cx = rational_ctx(f, k)?;
    let zeros = zeros_in(f, &cx.region)?;
    if zeros.is_empty() || zeros.iter().any(|z| z.2 == ZeroLocation::Interior) {
        return Err(Error::InvalidArgument("f must vanish on K only at boundary points".into()).into());
    }
    Ok(boundary_plan(f, &cx, &zeros)?.triple(&cx.n))
}

pub(crate) fn boundary_plan(f: &Polynomial, cx: &Ctx, zeros: &[(RealPoint, usize, ZeroLocation)]) -> Res<Plan> {
    let mut cs = Vec::with_capacity(zeros.len());
    for (p, m, _) in zeros {
        let c = p.as_rational().ok_or_else(|| Refusal::internal("irrational zero on a rational boundary"))?;
        cs.push((c.clone(), *m));
    }
    cs.sort();
    let probe = SignProbe::new(f)?;
    if f.deg() == 2 {
        if let Some(p) = quadratic_boundary(f, cx, &cs)? {
            return Ok(p);
        }
    }
    let table = match select(f, cx, &cs, &probe)? {
        Selected::Short(_, plan) => return Ok(plan),
        Selected::Table(_, gens) => gens,
    };
    let c1 = cs[0].0.clone();
    let sides = gap_sides(cx, &c1, &probe);
    if let Some(p) = rational_partner(f, cx, &c1, &sides, &probe)? {
        return Ok(p);
    }
    let n = f.deg();
    let mut candidates = Vec::new();
    if gens_degree(cx, &table) <= n {
        candidates.push(table);
    }
    for c in covers(cx, &cs, n) {
        if !candidates.contains(&c) {
            candidates.push(c);
        }
    }
    for gens in &candidates {
        if let Some(p) = search(f, cx, &c1, &sides, &probe, gens)? {
            return Ok(p);
        }
    }
    Err(Refusal::internal("boundary step found no admissible scaling"))
}

/// `f = beta (x - c)(x - e)` with `beta > 0`: both roots bound a single gap.
fn quadratic_boundary(f: &Polynomial, cx: &Ctx, cs: &[(Rational, usize)]) -> Res<Option<Plan>> {
    let beta = f.leading_coefficient();
    if !beta.is_positive() || cs[0].1 != 1 {
        return Ok(None);
    }
    let c = &cs[0].0;
    let e = -f.coeff(1) / &beta - c;
    let (lo, hi) = if *c < e { (c.clone(), e) } else { (e, c.clone()) };
    let gap = cx.rational_gaps().into_iter().find(|(_, a, b)| *a <= lo && hi <= *b);
    Ok(gap.map(|(j, _, _)| Plan::simple(HPrimePart::GapPair { lo, hi, gap: j }, Polynomial::constant(beta))))
}

fn gens_degree(cx: &Ctx, gens: &[usize]) -> usize {
    gens.iter().map(|i| cx.n.gens[*i].deg()).sum()
}

/// Gaps adjacent to `c1`, the side where `f < 0` near `c1` first.
fn gap_sides(cx: &Ctx, c1: &Rational, probe: &SignProbe) -> Vec<(usize, Rational, Rational, bool)> {
    let right = cx.gap_right_of(c1).map(|(j, a, b)| (j, a, b, true));
    let left = cx.gap_left_of(c1).map(|(j, a, b)| (j, a, b, false));
    let mut out: Vec<_> = if probe.beside(c1, true) == Ordering::Less { vec![right, left] } else { vec![left, right] };
    out.retain(Option::is_some);
    out.into_iter().flatten().collect()
}

/// Roots of `f` strictly inside the gap, nearest to `c1` first.
fn gap_roots<'p>(probe: &'p SignProbe, a: &Rational, b: &Rational, right: bool) -> Vec<&'p RealPoint> {
    let mut v: Vec<&RealPoint> = probe.roots().iter().filter(|r| strictly_inside(r, a, b)).collect();
    if !right {
        v.reverse();
    }
    v
}

/// A rational root `b` of `f` in an adjacent gap gives `h' = (x - b)(x - c1)` with `G = 0`.
fn rational_partner(
    f: &Polynomial,
    cx: &Ctx,
    c1: &Rational,
    sides: &[(usize, Rational, Rational, bool)],
    probe: &SignProbe,
) -> Res<Option<Plan>> {
    for (j, a, b, right) in sides {
        for root in gap_roots(probe, a, b, *right) {
            let Some(q) = root.as_rational() else { continue };
            let h = div_exact(f, &pair(q, c1))?;
            if cx.nonneg(&h)? {
                let (lo, hi) = if q < c1 { (q.clone(), c1.clone()) } else { (c1.clone(), q.clone()) };
                return Ok(Some(Plan::simple(HPrimePart::GapPair { lo, hi, gap: *j }, h)));
            }
        }
    }
    Ok(None)
}

/// Products of generators vanishing at every zero, by increasing degree.
fn covers(cx: &Ctx, cs: &[(Rational, usize)], n: usize) -> Vec<Vec<usize>> {
    let mut pool: Vec<usize> = Vec::new();
    for (c, _) in cs {
        let mut opts = Vec::new();
        if let Some((j, _, _)) = cx.gap_left_of(c) {
            opts.extend(cx.gap_index(j));
        }
        if let Some((j, _, _)) = cx.gap_right_of(c) {
            opts.extend(cx.gap_index(j));
        }
        let e = Some(Endpoint::Rational(c.clone()));
        if cx.k.min() == e {
            opts.extend(cx.lower_index());
        }
        if cx.k.max() == e {
            opts.extend(cx.upper_index());
        }
        for o in opts {
            if !pool.contains(&o) {
                pool.push(o);
            }
        }
    }
    pool.truncate(14);
    let mut out: Vec<Vec<usize>> = Vec::new();
    for mask in 1u32..(1 << pool.len()) {
        let gens: Vec<usize> = (0..pool.len()).filter(|b| mask >> b & 1 == 1).map(|b| pool[b]).collect();
        if gens_degree(cx, &gens) > n {
            continue;
        }
        let vanish = cs.iter().all(|(c, _)| gens.iter().any(|i| cx.n.gens[*i].eval(c).is_zero()));
        if vanish {
            out.push(gens);
        }
    }
    out.sort_by_key(|g| (gens_degree(cx, g), g.clone()));
    out.truncate(32);
    out
}

/// Scales `G = prod gens` by `f(b')/G(b')` for rationals `b'` approaching a root of `f` in an adjacent gap.
fn search(
    f: &Polynomial,
    cx: &Ctx,
    c1: &Rational,
    sides: &[(usize, Rational, Rational, bool)],
    probe: &SignProbe,
    gens: &[usize],
) -> Res<Option<Plan>> {
    let g = product(&cx.n, gens);
    if !g.eval(c1).is_zero() {
        return Ok(None);
    }
    for (j, a, b, right) in sides {
        let width = (b - a) / Rational::from_integer(4.into());
        for root in gap_roots(probe, a, b, *right) {
            let gs = root.sign_of(&g);
            if gs == Ordering::Equal {
                continue;
            }
            let above = approach_sign(probe, root, true, a, b);
            let below = approach_sign(probe, root, false, a, b);
            let from_above = if above == Some(gs) {
                true
            } else if below == Some(gs) {
                false
            } else {
                continue;
            };
            for k in 1..=60u32 {
                cx.spend()?;
                let tol = &width / two_pow(k);
                let bn = if from_above { simple_above(root, &tol) } else { simple_below(root, &tol) };
                if !(a < &bn && &bn < b) || probe.at(&bn) != gs || g.eval(&bn).cmp(&Rational::zero()) != gs {
                    continue;
                }
                let scale = f.eval(&bn) / g.eval(&bn);
                let rest = f - &g.scale(&scale);
                let Some(h) = rest.exact_div(&pair(&bn, c1)) else {
                    return Err(Refusal::internal("f - G is not divisible by the gap pair"));
                };
                if cx.nonneg(&h)? {
                    let (lo, hi) = if bn < *c1 { (bn, c1.clone()) } else { (c1.clone(), bn) };
                    return Ok(Some(Plan {
                        g: GPart::Product { scale, gens: gens.to_vec() },
                        h_prime: HPrimePart::GapPair { lo, hi, gap: *j },
                        h,
                    }));
                }
            }
        }
    }
    Ok(None)
}

/// Sign of `f` just above (or below) a root, within the gap.
fn approach_sign(probe: &SignProbe, root: &RealPoint, above: bool, a: &Rational, b: &Rational) -> Option<Ordering> {
    let mut p = root.clone();
    let mut tol = (b - a) / Rational::from_integer(4.into());
    for _ in 0..200 {
        let q = if above { simple_above(&p, &tol) } else { simple_below(&p, &tol) };
        // Stop once no other root separates q from the root.
        let between = probe.roots().iter().any(|r| {
            r.cmp_exact(&p) != Ordering::Equal
                && if above {
                    r.cmp_exact(&p) == Ordering::Greater && r.cmp_rational(&q) != Ordering::Greater
                } else {
                    r.cmp_exact(&p) == Ordering::Less && r.cmp_rational(&q) != Ordering::Less
                }
        });
        if !between {
            return Some(probe.at(&q));
        }
        tol /= Rational::from_integer(2.into());
        p.refine();
    }
    None
}
