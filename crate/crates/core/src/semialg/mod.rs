//! Closed semialgebraic subsets of the line, their natural generators, and the
//! saturation criteria.

mod endpoint;

pub use endpoint::{Branch, Endpoint};

use std::cmp::Ordering;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{Polynomial, Rational};
use crate::error::{Error, Refusal, RefusalReason, Result};
use crate::roots::{real_roots, RealPoint, Region, RegionComponent};

pub const CITE_NOT_FINITELY_GENERATED: &str =
    "noncompact set with a boundary point of degree at least 3: the cone of nonnegative polynomials is not finitely generated";
pub const CITE_IRRATIONAL_RAY: &str = "the ray [sqrt(d), inf) has a non-finitely-generated cone of nonnegative polynomials";
pub const CITE_NATURAL_GENERATORS: &str =
    "natural generators need rational endpoints or conjugate quadratic endpoints bounding a gap or the whole set";

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Component {
    Point(Endpoint),
    Segment(Endpoint, Endpoint),
    /// `(-inf, a]`
    RayBelow(Endpoint),
    /// `[a, inf)`
    RayAbove(Endpoint),
    Line,
}

impl Component {
    fn ends(&self) -> (Option<Endpoint>, Option<Endpoint>) {
        match self {
            Component::Point(a) => (Some(a.clone()), Some(a.clone())),
            Component::Segment(a, b) => (Some(a.clone()), Some(b.clone())),
            Component::RayBelow(b) => (None, Some(b.clone())),
            Component::RayAbove(a) => (Some(a.clone()), None),
            Component::Line => (None, None),
        }
    }

    fn from_ends(lo: Option<Endpoint>, hi: Option<Endpoint>) -> Self {
        match (lo, hi) {
            (Some(a), Some(b)) => {
                if a == b {
                    Component::Point(a)
                } else {
                    Component::Segment(a, b)
                }
            }
            (None, Some(b)) => Component::RayBelow(b),
            (Some(a), None) => Component::RayAbove(a),
            (None, None) => Component::Line,
        }
    }

    pub fn lo(&self) -> Option<Endpoint> {
        self.ends().0
    }

    pub fn hi(&self) -> Option<Endpoint> {
        self.ends().1
    }
}

/// A finite union of disjoint closed intervals, points and rays, in normal form.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SemiAlgSet {
    components: Vec<Component>,
}

fn cmp_lo(a: &Option<Endpoint>, b: &Option<Endpoint>) -> Ordering {
    match (a, b) {
        (None, None) => Ordering::Equal,
        (None, _) => Ordering::Less,
        (_, None) => Ordering::Greater,
        (Some(x), Some(y)) => x.cmp_exact(y),
    }
}

fn cmp_hi(a: &Option<Endpoint>, b: &Option<Endpoint>) -> Ordering {
    match (a, b) {
        (None, None) => Ordering::Equal,
        (None, _) => Ordering::Greater,
        (_, None) => Ordering::Less,
        (Some(x), Some(y)) => x.cmp_exact(y),
    }
}

impl SemiAlgSet {
    /// Normalizes: sorts, merges overlapping or touching pieces. Panics on `lo > hi`.
    pub fn new(components: Vec<Component>) -> Self {
        Self::try_new(components).expect("valid components")
    }

    pub fn try_new(components: Vec<Component>) -> Result<Self> {
        let mut ivs: Vec<(Option<Endpoint>, Option<Endpoint>)> = Vec::new();
        for c in components {
            let (lo, hi) = c.ends();
            if let (Some(a), Some(b)) = (&lo, &hi) {
                if a.cmp_exact(b) == Ordering::Greater {
                    return Err(Error::InvalidArgument(format!("segment [{a}, {b}] has lo > hi")));
                }
            }
            ivs.push((lo, hi));
        }
        ivs.sort_by(|a, b| cmp_lo(&a.0, &b.0));
        let mut merged: Vec<(Option<Endpoint>, Option<Endpoint>)> = Vec::new();
        for iv in ivs {
            if let Some(last) = merged.last_mut() {
                let touches = match (&last.1, &iv.0) {
                    (None, _) | (_, None) => true,
                    (Some(h), Some(l)) => l.cmp_exact(h) != Ordering::Greater,
                };
                if touches {
                    if cmp_hi(&iv.1, &last.1) == Ordering::Greater {
                        last.1 = iv.1;
                    }
                    continue;
                }
            }
            merged.push(iv);
        }
        Ok(SemiAlgSet { components: merged.into_iter().map(|(l, h)| Component::from_ends(l, h)).collect() })
    }

    pub fn empty() -> Self {
        SemiAlgSet { components: Vec::new() }
    }

    pub fn line() -> Self {
        SemiAlgSet { components: vec![Component::Line] }
    }

    /// Union of rational closed intervals `[a_i, b_i]`.
    pub fn from_rational_intervals(ivs: &[(Rational, Rational)]) -> Self {
        Self::new(ivs.iter().map(|(a, b)| Component::Segment(Endpoint::Rational(a.clone()), Endpoint::Rational(b.clone()))).collect())
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn min(&self) -> Option<Endpoint> {
        self.components.first().and_then(|c| c.lo())
    }

    pub fn max(&self) -> Option<Endpoint> {
        self.components.last().and_then(|c| c.hi())
    }

    pub fn bounded_below(&self) -> bool {
        self.min().is_some()
    }

    pub fn bounded_above(&self) -> bool {
        self.max().is_some()
    }

    pub fn is_compact(&self) -> bool {
        self.is_empty() || (self.bounded_below() && self.bounded_above())
    }

    pub fn is_connected(&self) -> bool {
        self.components.len() <= 1
    }

    /// Consecutive `(hi_i, lo_{i+1})` pairs.
    pub fn gaps(&self) -> Vec<(Endpoint, Endpoint)> {
        self.components
            .windows(2)
            .map(|w| (w[0].hi().expect("inner component is bounded above"), w[1].lo().expect("inner component is bounded below")))
            .collect()
    }

    pub fn boundary_points(&self) -> Vec<Endpoint> {
        let mut out = Vec::new();
        for c in &self.components {
            match c {
                Component::Point(a) => out.push(a.clone()),
                _ => {
                    if let Some(a) = c.lo() {
                        out.push(a);
                    }
                    if let Some(b) = c.hi() {
                        out.push(b);
                    }
                }
            }
        }
        out
    }

    pub fn boundary_is_rational(&self) -> bool {
        self.boundary_points().iter().all(|e| e.is_rational())
    }

    pub fn isolated_points(&self) -> Vec<Endpoint> {
        self.components
            .iter()
            .filter_map(|c| match c {
                Component::Point(a) => Some(a.clone()),
                _ => None,
            })
            .collect()
    }

    pub fn has_isolated_point(&self) -> bool {
        !self.isolated_points().is_empty()
    }

    pub fn contains_rational(&self, q: &Rational) -> bool {
        let p = RealPoint::Rational(q.clone());
        self.to_region().contains(&p)
    }

    /// The convex hull as a single component.
    pub fn hull(&self) -> SemiAlgSet {
        if self.is_empty() {
            return Self::empty();
        }
        SemiAlgSet { components: vec![Component::from_ends(self.min(), self.max())] }
    }

    pub fn to_region(&self) -> Region {
        Region {
            comps: self
                .components
                .iter()
                .map(|c| {
                    let (lo, hi) = c.ends();
                    RegionComponent { lo: lo.map(|e| e.to_point()), hi: hi.map(|e| e.to_point()) }
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Role {
    LowerLinear,
    UpperLinear,
    GapQuadratic,
    DiskQuadratic,
    Unit,
    Foreign,
}

/// Generators with their structural roles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSet {
    pub gens: Vec<Polynomial>,
    pub roles: Vec<Role>,
}

impl GeneratorSet {
    pub fn new(gens: Vec<Polynomial>, roles: Vec<Role>) -> Self {
        assert_eq!(gens.len(), roles.len());
        GeneratorSet { gens, roles }
    }

    pub fn foreign(gens: Vec<Polynomial>) -> Self {
        let roles = vec![Role::Foreign; gens.len()];
        GeneratorSet { gens, roles }
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn index_of_role(&self, role: Role) -> Option<usize> {
        self.roles.iter().position(|r| *r == role)
    }
}

/// `true` iff `g = c*h` for some rational `c > 0`.
pub fn is_positive_multiple(g: &Polynomial, h: &Polynomial) -> bool {
    if g.is_zero() || h.is_zero() || g.degree() != h.degree() {
        return false;
    }
    let c = g.leading_coefficient() / h.leading_coefficient();
    c.is_positive() && &h.scale(&c) == g
}

fn x_minus(a: &Rational) -> Polynomial {
    Polynomial::linear_root(a)
}

fn unsupported(detail: String) -> Refusal {
    Refusal::new(RefusalReason::UnsupportedEndpointDegree, detail).cite(CITE_NATURAL_GENERATORS)
}

/// The natural generator set of `K`.
pub fn natural_generators(k: &SemiAlgSet) -> std::result::Result<GeneratorSet, Refusal> {
    if k.is_empty() {
        return Err(Refusal::new(RefusalReason::EmptySet, "the empty set has no natural generators"));
    }
    if k.components == [Component::Line] {
        return Ok(GeneratorSet::new(vec![Polynomial::one()], vec![Role::Unit]));
    }
    if let [Component::Segment(a, b)] = k.components.as_slice() {
        if a.is_conjugate_of(b) {
            return Ok(GeneratorSet::new(vec![-a.minimal_polynomial()], vec![Role::DiskQuadratic]));
        }
    }
    if let [Component::Segment(a, b)] = k.components.as_slice() {
        // [a, c] with c a quadratic surd whose conjugate lies below a (and the mirror shape).
        if let (Some(qa), false) = (a.as_rational(), b.is_rational()) {
            if b.conjugate().is_some_and(|c| c.cmp_exact(&Endpoint::Rational(qa.clone())) == Ordering::Less) {
                return Ok(GeneratorSet::new(vec![x_minus(qa), -b.minimal_polynomial()], vec![Role::LowerLinear, Role::DiskQuadratic]));
            }
        }
        if let (false, Some(qb)) = (a.is_rational(), b.as_rational()) {
            if a.conjugate().is_some_and(|c| c.cmp_exact(&Endpoint::Rational(qb.clone())) == Ordering::Greater) {
                return Ok(GeneratorSet::new(vec![-a.minimal_polynomial(), -x_minus(qb)], vec![Role::DiskQuadratic, Role::UpperLinear]));
            }
        }
    }
    let irrational_extreme = |e: &Endpoint| -> Refusal {
        if k.is_compact() {
            unsupported(format!("extreme point {e} is irrational"))
        } else {
            Refusal::new(RefusalReason::UnsupportedEndpointDegree, format!("extreme point {e} of a noncompact set is irrational"))
                .cite(CITE_IRRATIONAL_RAY)
        }
    };
    let mut gens = Vec::new();
    let mut roles = Vec::new();
    if let Some(a) = k.min() {
        let Some(a) = a.as_rational() else {
            return Err(irrational_extreme(&a));
        };
        gens.push(x_minus(a));
        roles.push(Role::LowerLinear);
    }
    for (a, b) in k.gaps() {
        let g = match (&a, &b) {
            (Endpoint::Rational(p), Endpoint::Rational(q)) => x_minus(p) * x_minus(q),
            _ if a.is_conjugate_of(&b) && matches!(a, Endpoint::QuadSurd { branch: Branch::Lower, .. }) => a.minimal_polynomial(),
            _ => return Err(unsupported(format!("gap ({a}, {b}) is not bounded by rationals or by a conjugate pair"))),
        };
        gens.push(g);
        roles.push(Role::GapQuadratic);
    }
    if let Some(b) = k.max() {
        let Some(b) = b.as_rational() else {
            return Err(irrational_extreme(&b));
        };
        gens.push(-x_minus(b));
        roles.push(Role::UpperLinear);
    }
    Ok(GeneratorSet::new(gens, roles))
}

/// `K_S = {x : g(x) >= 0 for all g in S}`.
pub fn solve_generators(s: &[Polynomial]) -> std::result::Result<SemiAlgSet, Refusal> {
    let gens: Vec<&Polynomial> = s.iter().filter(|g| !g.is_zero()).collect();
    if gens.iter().any(|g| g.deg() == 0 && g.leading_coefficient().is_negative()) {
        return Ok(SemiAlgSet::empty());
    }
    let gens: Vec<&Polynomial> = gens.into_iter().filter(|g| g.deg() > 0).collect();
    if gens.is_empty() {
        return Ok(SemiAlgSet::line());
    }
    let mut pts: Vec<RealPoint> = Vec::new();
    for g in &gens {
        pts.extend(real_roots(g)?);
    }
    pts.sort_by(|a, b| a.cmp_exact(b));
    pts.dedup_by(|a, b| a.cmp_exact(b) == Ordering::Equal);

    let all_nonneg_rational = |q: &Rational| gens.iter().all(|g| !g.eval(q).is_negative());
    let all_nonneg_point = |p: &RealPoint| gens.iter().all(|g| p.sign_of(g) != Ordering::Less);
    let n = pts.len();
    // Atoms: cell 0, point 0, cell 1, ..., point n-1, cell n.
    let mut cell_in = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let q = match (i.checked_sub(1).map(|j| &pts[j]), pts.get(i)) {
            (None, None) => Rational::zero(),
            (None, Some(b)) => b.lower_bound().floor() - Rational::one(),
            (Some(a), None) => a.upper_bound().ceil() + Rational::one(),
            (Some(a), Some(b)) => RealPoint::rational_between(a, b),
        };
        cell_in.push(all_nonneg_rational(&q));
    }
    let pt_in: Vec<bool> = pts.iter().map(|p| all_nonneg_point(p)).collect();

    let mut atoms: Vec<(bool, Option<usize>, Option<usize>)> = Vec::new();
    for i in 0..=n {
        atoms.push((cell_in[i], i.checked_sub(1), (i < n).then_some(i)));
        if i < n {
            atoms.push((pt_in[i], Some(i), Some(i)));
        }
    }
    let mut runs: Vec<(Option<usize>, Option<usize>)> = Vec::new();
    let mut current: Option<(Option<usize>, Option<usize>)> = None;
    for (inc, lo, hi) in atoms {
        if inc {
            current = Some(match current {
                None => (lo, hi),
                Some((l, _)) => (l, hi),
            });
        } else if let Some(r) = current.take() {
            runs.push(r);
        }
    }
    if let Some(r) = current {
        runs.push(r);
    }
    let compact = !cell_in[0] && !cell_in[n];
    let mut comps = Vec::new();
    for (lo, hi) in runs {
        let conv = |i: Option<usize>| -> std::result::Result<Option<Endpoint>, Refusal> {
            match i {
                None => Ok(None),
                Some(i) => match pts[i].to_endpoint() {
                    Some(e) => Ok(Some(e)),
                    None => Err(degree_refusal(&pts[i], compact)),
                },
            }
        };
        comps.push(Component::from_ends(conv(lo)?, conv(hi)?));
    }
    Ok(SemiAlgSet::new(comps))
}

fn degree_refusal(p: &RealPoint, compact: bool) -> Refusal {
    let detail = format!("boundary point {:?} has degree {} (minimal polynomial {})", p, p.degree(), p.minimal_polynomial());
    if compact {
        Refusal::new(RefusalReason::UnsupportedEndpointDegree, detail)
            .cite("compact sets with boundary points of degree at least 3 are outside the supported cases")
    } else {
        Refusal::new(RefusalReason::NotFinitelyGenerated, detail).cite(CITE_NOT_FINITELY_GENERATED)
    }
}

/// Every natural generator of `K_S` is a positive multiple of an element of `S`.
pub fn contains_natural_generators(s: &[Polynomial]) -> std::result::Result<bool, Refusal> {
    let k = solve_generators(s)?;
    let n = natural_generators(&k)?;
    Ok(n.gens.iter().all(|g| g.is_constant() || s.iter().any(|h| is_positive_multiple(g, h))))
}

/// Saturation of the preordering generated by `S`, for noncompact `K_S` with rational boundary.
pub fn saturation_preordering_noncompact(s: &[Polynomial]) -> std::result::Result<bool, Refusal> {
    let k = solve_generators(s)?;
    if k.is_compact() {
        return Err(Refusal::new(RefusalReason::UnsupportedEndpointDegree, "the preordering criterion here covers noncompact sets only"));
    }
    if !k.boundary_is_rational() {
        return Err(unsupported("the preordering criterion needs a rational boundary".into()));
    }
    contains_natural_generators(s)
}

/// Saturation of the quadratic module generated by the natural generators of `K`.
pub fn saturation_module(k: &SemiAlgSet) -> std::result::Result<bool, Refusal> {
    if !k.boundary_is_rational() {
        return Err(unsupported("the module criterion needs a rational boundary".into()));
    }
    if k.is_compact() {
        return Ok(true);
    }
    let n = natural_generators(k)?.len();
    Ok(n <= 1 || (n == 2 && k.has_isolated_point()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    fn r(q: i64) -> Endpoint {
        Endpoint::Rational(int(q))
    }

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    #[test]
    fn normalization_merges_touching() {
        let k = SemiAlgSet::new(vec![
            Component::Segment(r(1), r(2)),
            Component::Segment(r(0), r(1)),
            Component::Point(r(5)),
            Component::Point(r(5)),
            Component::Segment(r(4), r(6)),
        ]);
        assert_eq!(k.components(), &[Component::Segment(r(0), r(2)), Component::Segment(r(4), r(6))]);
        assert!(SemiAlgSet::try_new(vec![Component::Segment(r(2), r(1))]).is_err());
        let k = SemiAlgSet::new(vec![Component::RayAbove(r(3)), Component::RayBelow(r(4))]);
        assert_eq!(k.components(), &[Component::Line]);
    }

    #[test]
    fn natural_generator_examples() {
        assert_eq!(natural_generators(&SemiAlgSet::line()).unwrap().gens, vec![p(&[1])]);
        let k = SemiAlgSet::new(vec![Component::RayAbove(r(0))]);
        assert_eq!(natural_generators(&k).unwrap().gens, vec![p(&[0, 1])]);
        let k = SemiAlgSet::new(vec![Component::Point(r(0))]);
        assert_eq!(natural_generators(&k).unwrap().gens, vec![p(&[0, 1]), p(&[0, -1])]);
        let k = SemiAlgSet::new(vec![Component::RayBelow(r(0)), Component::Point(r(1))]);
        assert_eq!(natural_generators(&k).unwrap().gens, vec![p(&[0, -1, 1]), p(&[1, -1])]);
        let r2 = Endpoint::surd(int(0), int(-2), Branch::Upper).unwrap();
        let disk = SemiAlgSet::new(vec![Component::Segment(r2.conjugate().unwrap(), r2.clone())]);
        let n = natural_generators(&disk).unwrap();
        assert_eq!(n.gens, vec![p(&[2, 0, -1])]);
        assert_eq!(n.roles, vec![Role::DiskQuadratic]);
        let half = SemiAlgSet::new(vec![Component::Segment(r(0), r2.clone())]);
        assert_eq!(natural_generators(&half).unwrap().gens, vec![p(&[0, 1]), p(&[2, 0, -1])]);
        let far = SemiAlgSet::new(vec![Component::Segment(r(-2), r2.clone())]);
        assert!(natural_generators(&far).is_err());
        let ray = SemiAlgSet::new(vec![Component::RayAbove(r2)]);
        let e = natural_generators(&ray).unwrap_err();
        assert_eq!(e.citation.as_deref(), Some(CITE_IRRATIONAL_RAY));
        assert_eq!(natural_generators(&SemiAlgSet::empty()).unwrap_err().reason, RefusalReason::EmptySet);
    }

    #[test]
    fn solve_examples() {
        let k = solve_generators(&[p(&[0, 1]), p(&[0, 0, -1])]).unwrap();
        assert_eq!(k.components(), &[Component::Point(r(0))]);
        let k = solve_generators(&[p(&[0, 1]), p(&[2, -3, 1])]).unwrap();
        assert_eq!(k.components(), &[Component::Segment(r(0), r(1)), Component::RayAbove(r(2))]);
        let k = solve_generators(&[p(&[1, 0, 1])]).unwrap();
        assert_eq!(k, SemiAlgSet::line());
        let k = solve_generators(&[p(&[-1, 0, -1])]).unwrap();
        assert!(k.is_empty());
        let err = solve_generators(&[p(&[-2, 0, 0, 1])]).unwrap_err();
        assert_eq!(err.reason, RefusalReason::NotFinitelyGenerated);
        let err = solve_generators(&[p(&[-2, 0, 0, 1]), p(&[5, -1])]).unwrap_err();
        assert_eq!(err.reason, RefusalReason::UnsupportedEndpointDegree);
        // x^2 - 2 >= 0 gives the co-disk with surd ends.
        let k = solve_generators(&[p(&[-2, 0, 1])]).unwrap();
        assert_eq!(k.components().len(), 2);
        assert!(natural_generators(&k).is_ok());
    }

    #[test]
    fn saturation_examples() {
        assert!(saturation_preordering_noncompact(&[p(&[0, 1])]).unwrap());
        assert!(!saturation_preordering_noncompact(&[p(&[0, 0, 0, 1])]).unwrap());
        let s = [p(&[0, 2]), p(&[2, -3, 1]).scale(&int(3))];
        assert!(saturation_preordering_noncompact(&s).unwrap());
        let k = SemiAlgSet::new(vec![Component::RayBelow(r(0)), Component::Point(r(1))]);
        assert!(saturation_module(&k).unwrap());
        let k = SemiAlgSet::new(vec![Component::Segment(r(0), r(1)), Component::RayAbove(r(2))]);
        assert!(!saturation_module(&k).unwrap());
        let k = SemiAlgSet::new(vec![Component::Segment(r(0), r(1))]);
        assert!(saturation_module(&k).unwrap());
        assert!(is_positive_multiple(&p(&[0, 2]), &p(&[0, 1])));
        assert!(!is_positive_multiple(&p(&[0, -2]), &p(&[0, 1])));
        assert!(!is_positive_multiple(&p(&[1, 2]), &Polynomial::from_coeffs(vec![rat(1, 3), int(1)])));
    }
}
