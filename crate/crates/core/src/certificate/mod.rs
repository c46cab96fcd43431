//! Preordering certificates `f = sum_e sigma_e g^e`: data model, algebra, verifier, JSON.

mod json;
mod verify;

pub use json::{from_json, to_json, to_json_value, JsonError};
pub use verify::{verify, VerifyReport};

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{Polynomial, Rational};
use crate::error::{Error, Result};
use crate::semialg::{GeneratorSet, Role};

/// Nonnegative rational combination of squares `sum w_i q_i^2`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WeightedSos {
    pub terms: Vec<(Rational, Polynomial)>,
}

impl WeightedSos {
    pub fn new(terms: Vec<(Rational, Polynomial)>) -> Self {
        WeightedSos { terms }
    }

    pub fn zero() -> Self {
        WeightedSos::default()
    }

    pub fn constant(c: Rational) -> Self {
        WeightedSos::single(c, Polynomial::one())
    }

    pub fn single(w: Rational, q: Polynomial) -> Self {
        WeightedSos { terms: vec![(w, q)] }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.iter().all(|(w, q)| w.is_zero() || q.is_zero())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn push(&mut self, w: Rational, q: Polynomial) {
        self.terms.push((w, q));
    }

    pub fn extend(&mut self, other: WeightedSos) {
        self.terms.extend(other.terms);
    }

    pub fn expand(&self) -> Polynomial {
        let mut acc = Polynomial::zero();
        for (w, q) in &self.terms {
            acc = acc + (q * q).scale(w);
        }
        acc
    }

    pub fn weights_nonnegative(&self) -> bool {
        self.terms.iter().all(|(w, _)| !w.is_negative())
    }

    pub fn scale(&self, c: &Rational) -> WeightedSos {
        WeightedSos { terms: self.terms.iter().map(|(w, q)| (w * c, q.clone())).collect() }
    }

    /// `sos * m^2`.
    pub fn mul_square(&self, m: &Polynomial) -> WeightedSos {
        WeightedSos { terms: self.terms.iter().map(|(w, q)| (w.clone(), q * m)).collect() }
    }

    pub fn mul(&self, other: &WeightedSos) -> WeightedSos {
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (w1, q1) in &self.terms {
            for (w2, q2) in &other.terms {
                terms.push((w1 * w2, q1 * q2));
            }
        }
        WeightedSos { terms }
    }

    pub fn affine(&self, alpha: &Rational, beta: &Rational) -> WeightedSos {
        WeightedSos { terms: self.terms.iter().map(|(w, q)| (w.clone(), q.affine_substitute(alpha, beta))).collect() }
    }

    /// Largest `deg(q_i^2)`; `None` when zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.iter().filter(|(w, q)| !w.is_zero() && !q.is_zero()).map(|(_, q)| 2 * q.deg()).max()
    }

    /// Drops zero terms, makes square roots monic and merges equal ones.
    pub fn simplify(&self) -> WeightedSos {
        let mut index: HashMap<Polynomial, usize> = HashMap::new();
        let mut terms: Vec<(Rational, Polynomial)> = Vec::new();
        for (w, q) in &self.terms {
            if w.is_zero() || q.is_zero() {
                continue;
            }
            let lc = q.leading_coefficient();
            let m = q.monic();
            let w = w * &lc * &lc;
            match index.get(&m) {
                Some(&i) => terms[i].0 += w,
                None => {
                    index.insert(m.clone(), terms.len());
                    terms.push((w, m));
                }
            }
        }
        terms.retain(|(w, _)| !w.is_zero());
        WeightedSos { terms }
    }
}

/// `e in {0,1}^s`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ExponentVector(pub Vec<u8>);

impl ExponentVector {
    pub fn empty(s: usize) -> Self {
        ExponentVector(vec![0; s])
    }

    pub fn unit(s: usize, i: usize) -> Self {
        let mut v = vec![0; s];
        v[i] = 1;
        ExponentVector(v)
    }

    pub fn from_indices(s: usize, idx: &[usize]) -> Self {
        let mut v = vec![0; s];
        for &i in idx {
            v[i] = 1;
        }
        ExponentVector(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|b| *b == 0)
    }

    pub fn weight(&self) -> usize {
        self.0.iter().filter(|b| **b != 0).count()
    }

    pub fn indices(&self) -> Vec<usize> {
        self.0.iter().enumerate().filter(|(_, b)| **b != 0).map(|(i, _)| i).collect()
    }

    pub fn xor(&self, o: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&o.0).map(|(a, b)| (a ^ b) & 1).collect())
    }

    pub fn and(&self, o: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&o.0).map(|(a, b)| a & b & 1).collect())
    }

    /// `g^e`.
    pub fn product(&self, gens: &[Polynomial]) -> Polynomial {
        let mut acc = Polynomial::one();
        for i in self.indices() {
            acc = acc * &gens[i];
        }
        acc
    }

    pub fn is_well_formed(&self, s: usize) -> bool {
        self.0.len() == s && self.0.iter().all(|b| *b <= 1)
    }
}

/// Derived data recorded alongside a certificate.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Metadata {
    pub degree_bound_ok: bool,
    /// Number of squares in each term, in term order.
    pub square_counts: Vec<usize>,
    /// Whether every `sigma_e` has at most `max(1, deg f - deg g^e)` squares.
    pub square_count_bound_met: bool,
    pub provenance: String,
    /// Free-form parameters, such as dynamically chosen generator data.
    pub notes: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub variable: String,
    pub target: Polynomial,
    pub generators: GeneratorSet,
    pub terms: BTreeMap<ExponentVector, WeightedSos>,
    pub metadata: Metadata,
}

fn mismatch() -> Error {
    Error::InvalidArgument("certificates have different generator lists".into())
}

impl Certificate {
    /// The zero certificate over `gens`.
    pub fn zero(gens: &GeneratorSet) -> Self {
        let mut c = Certificate {
            variable: "x".into(),
            target: Polynomial::zero(),
            generators: gens.clone(),
            terms: BTreeMap::new(),
            metadata: Metadata::default(),
        };
        c.refresh();
        c
    }

    /// Builds a certificate whose target is the expansion of the given terms.
    pub fn from_terms(gens: &GeneratorSet, terms: Vec<(ExponentVector, WeightedSos)>) -> Self {
        let mut c = Certificate::zero(gens);
        for (e, s) in terms {
            assert!(e.is_well_formed(gens.len()), "exponent vector length mismatch");
            c.terms.entry(e).or_default().extend(s);
        }
        c.normalize();
        c
    }

    pub fn sos(gens: &GeneratorSet, s: WeightedSos) -> Self {
        Self::from_terms(gens, vec![(ExponentVector::empty(gens.len()), s)])
    }

    pub fn constant(gens: &GeneratorSet, c: Rational) -> Self {
        Self::sos(gens, WeightedSos::constant(c))
    }

    /// `w * q^2 * g^e`.
    pub fn monomial(gens: &GeneratorSet, e: ExponentVector, w: Rational, q: Polynomial) -> Self {
        Self::from_terms(gens, vec![(e, WeightedSos::single(w, q))])
    }

    pub fn generator(gens: &GeneratorSet, i: usize) -> Self {
        Self::monomial(gens, ExponentVector::unit(gens.len(), i), Rational::one(), Polynomial::one())
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.generators.gens
    }

    pub fn with_provenance(mut self, p: impl Into<String>) -> Self {
        self.metadata.provenance = p.into();
        self
    }

    pub fn with_note(mut self, k: impl Into<String>, v: impl Into<String>) -> Self {
        self.metadata.notes.insert(k.into(), v.into());
        self
    }

    /// Sum of `sigma_e g^e`.
    pub fn expand(&self) -> Polynomial {
        let gens = self.gens();
        let mut acc = Polynomial::zero();
        for (e, s) in &self.terms {
            acc = acc + s.expand() * e.product(gens);
        }
        acc
    }

    /// Simplifies the squares, drops empty terms, resets the target to the expansion.
    pub fn normalize(&mut self) {
        let terms = std::mem::take(&mut self.terms);
        for (e, s) in terms {
            let s = s.simplify();
            if !s.is_empty() {
                self.terms.insert(e, s);
            }
        }
        self.target = self.expand();
        self.refresh();
    }

    /// Recomputes the degree and square-count metadata.
    pub fn refresh(&mut self) {
        let n = self.target.degree();
        let gens = &self.generators.gens;
        let mut ok = true;
        let mut count_ok = true;
        let mut counts = Vec::with_capacity(self.terms.len());
        for (e, s) in &self.terms {
            counts.push(s.len());
            let ge = e.product(gens);
            if let Some(ds) = s.degree() {
                let d = ds + ge.degree().unwrap_or(0);
                if n.is_none_or(|n| d > n) {
                    ok = false;
                }
            }
            let allowed = n.unwrap_or(0).saturating_sub(ge.degree().unwrap_or(0)).max(1);
            if s.len() > allowed {
                count_ok = false;
            }
        }
        self.metadata.degree_bound_ok = ok;
        self.metadata.square_counts = counts;
        self.metadata.square_count_bound_met = count_ok;
    }

    pub fn module_shaped(&self) -> bool {
        self.terms.keys().all(|e| e.weight() <= 1)
    }

    fn same_gens(&self, other: &Certificate) -> Result<()> {
        if self.generators.gens != other.generators.gens {
            return Err(mismatch());
        }
        Ok(())
    }

    pub fn add(&self, other: &Certificate) -> Result<Certificate> {
        self.same_gens(other)?;
        let mut c = self.clone();
        for (e, s) in &other.terms {
            c.terms.entry(e.clone()).or_default().extend(s.clone());
        }
        c.target = &self.target + &other.target;
        c.finish_op();
        Ok(c)
    }

    /// Product via `g^e g^e' = (g^(e and e'))^2 g^(e xor e')`.
    pub fn mul(&self, other: &Certificate) -> Result<Certificate> {
        self.same_gens(other)?;
        let gens = self.gens();
        let mut terms: BTreeMap<ExponentVector, WeightedSos> = BTreeMap::new();
        for (e1, s1) in &self.terms {
            for (e2, s2) in &other.terms {
                let common = e1.and(e2).product(gens);
                let s = s1.mul(s2).mul_square(&common);
                terms.entry(e1.xor(e2)).or_default().extend(s);
            }
        }
        let mut c = self.clone();
        c.terms = terms;
        c.target = &self.target * &other.target;
        c.finish_op();
        Ok(c)
    }

    /// Multiplies by the square `m^2`.
    pub fn mul_square(&self, m: &Polynomial) -> Certificate {
        let mut c = self.clone();
        for s in c.terms.values_mut() {
            *s = s.mul_square(m);
        }
        c.target = &self.target * &(m * m);
        c.finish_op();
        c
    }

    /// Multiplies by a nonnegative constant.
    pub fn scale(&self, k: &Rational) -> Certificate {
        assert!(!k.is_negative(), "scaling by a negative constant");
        let mut c = self.clone();
        for s in c.terms.values_mut() {
            *s = s.scale(k);
        }
        c.target = self.target.scale(k);
        c.finish_op();
        c
    }

    /// Substitutes `x -> alpha*x + beta` everywhere.
    pub fn affine(&self, alpha: &Rational, beta: &Rational) -> Result<Certificate> {
        if alpha.is_zero() {
            return Err(Error::InvalidArgument("affine map with alpha = 0".into()));
        }
        let gens: Vec<Polynomial> = self.gens().iter().map(|g| g.affine_substitute(alpha, beta)).collect();
        let mut c = self.clone();
        c.generators = GeneratorSet::new(gens, self.generators.roles.clone());
        for s in c.terms.values_mut() {
            *s = s.affine(alpha, beta);
        }
        c.target = self.target.affine_substitute(alpha, beta);
        c.finish_op();
        Ok(c)
    }

    /// Replaces each generator `g_i` by a certificate for it over `new_gens`.
    pub fn substitute(&self, new_gens: &GeneratorSet, images: &[Certificate]) -> Result<Certificate> {
        if images.len() != self.generators.len() {
            return Err(Error::InvalidArgument("one image per generator is required".into()));
        }
        for (img, g) in images.iter().zip(self.gens()) {
            if img.generators.gens != new_gens.gens || &img.target != g {
                return Err(Error::InvalidArgument("generator image does not certify the generator".into()));
            }
        }
        let mut acc = Certificate::zero(new_gens);
        for (e, s) in &self.terms {
            let mut part = Certificate::sos(new_gens, s.clone());
            for i in e.indices() {
                part = part.mul(&images[i])?;
            }
            acc = acc.add(&part)?;
        }
        acc.variable = self.variable.clone();
        acc.metadata.provenance = self.metadata.provenance.clone();
        acc.metadata.notes = self.metadata.notes.clone();
        Ok(acc)
    }

    /// Reinterprets over a larger generator list; `map[i]` is the new index of old generator `i`.
    pub fn embed(&self, new_gens: &GeneratorSet, map: &[usize]) -> Certificate {
        let s = new_gens.len();
        let mut c = Certificate::zero(new_gens);
        for (e, sos) in &self.terms {
            let idx: Vec<usize> = e.indices().iter().map(|i| map[*i]).collect();
            c.terms.entry(ExponentVector::from_indices(s, &idx)).or_default().extend(sos.clone());
        }
        c.variable = self.variable.clone();
        c.target = self.target.clone();
        c.metadata = self.metadata.clone();
        c.finish_op();
        c
    }

    fn finish_op(&mut self) {
        let terms = std::mem::take(&mut self.terms);
        for (e, s) in terms {
            let s = s.simplify();
            if !s.is_empty() {
                self.terms.insert(e, s);
            }
        }
        self.refresh();
    }

    pub fn role_of(&self, i: usize) -> Role {
        self.generators.roles[i]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    fn bm() -> Certificate {
        // (4/9)(x-3/2)^2 + 1 + (5/9) x(x-3)
        let gens = GeneratorSet::new(vec![Polynomial::from_ints(&[0, -3, 1])], vec![Role::GapQuadratic]);
        Certificate::from_terms(
            &gens,
            vec![
                (
                    ExponentVector(vec![0]),
                    WeightedSos::new(vec![(rat(4, 9), Polynomial::from_coeffs(vec![rat(-3, 2), int(1)])), (int(1), Polynomial::one())]),
                ),
                (ExponentVector(vec![1]), WeightedSos::constant(rat(5, 9))),
            ],
        )
    }

    #[test]
    fn bm_expands() {
        let c = bm();
        assert_eq!(c.target, Polynomial::from_ints(&[2, -3, 1]));
        assert!(c.metadata.degree_bound_ok);
        assert!(c.module_shaped());
    }

    #[test]
    fn algebra() {
        let c = bm();
        let z = Certificate::zero(&c.generators);
        assert_eq!(c.add(&z).unwrap(), c);
        let d = c.add(&c).unwrap();
        assert_eq!(d.target, c.target.scale(&int(2)));
        assert_eq!(d.expand(), d.target);
        let one = Certificate::constant(&c.generators, int(1));
        assert_eq!(c.mul(&one).unwrap().target, c.target);
        let g = Certificate::generator(&c.generators, 0);
        let gg = g.mul(&g).unwrap();
        assert_eq!(gg.terms.keys().cloned().collect::<Vec<_>>(), vec![ExponentVector(vec![0])]);
        assert_eq!(gg.expand(), gg.target);
        let two = Certificate::constant(&c.generators, int(2));
        assert_eq!(c.mul(&two).unwrap().target, c.target.scale(&int(2)));
        let m = c.affine(&int(2), &int(1)).unwrap();
        assert_eq!(m.expand(), m.target);
        let back = m.affine(&rat(1, 2), &rat(-1, 2)).unwrap();
        assert_eq!(back.target, c.target);
        assert_eq!(back.gens(), c.gens());
        assert!(c.affine(&int(0), &int(1)).is_err());
        let other = Certificate::zero(&GeneratorSet::foreign(vec![Polynomial::x()]));
        assert!(c.add(&other).is_err());
    }
}
