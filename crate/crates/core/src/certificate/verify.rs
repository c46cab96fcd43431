use num_traits::{Signed, Zero};
use serde::Serialize;

use super::Certificate;
use crate::arith::Polynomial;
use crate::semialg::{is_positive_multiple, natural_generators, SemiAlgSet};

/// Independent findings of the exact verifier.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub valid: bool,
    pub identity_holds: bool,
    pub weights_nonnegative: bool,
    pub exponents_well_formed: bool,
    /// Present when a set was supplied.
    pub generators_natural: Option<bool>,
    pub degree_bound_ok: bool,
    pub module_shaped: bool,
    pub square_counts: Vec<usize>,
    pub messages: Vec<String>,
}

fn product(e: &[u8], gens: &[Polynomial]) -> Polynomial {
    let mut acc = Polynomial::one();
    for (b, g) in e.iter().zip(gens) {
        if *b == 1 {
            acc = &acc * g;
        }
    }
    acc
}

fn naturals_match(gens: &[Polynomial], k: &SemiAlgSet) -> Result<bool, String> {
    let n = natural_generators(k).map_err(|r| r.to_string())?;
    let effective = |v: &[Polynomial]| -> Vec<Polynomial> {
        v.iter().filter(|g| !(g.is_constant() && g.leading_coefficient().is_positive())).cloned().collect()
    };
    let mine = effective(gens);
    let theirs = effective(&n.gens);
    let covered = |a: &[Polynomial], b: &[Polynomial]| a.iter().all(|g| b.iter().any(|h| is_positive_multiple(g, h)));
    Ok(covered(&mine, &theirs) && covered(&theirs, &mine))
}

/// Exact check of a certificate, optionally against the natural generators of `k`.
pub fn verify(c: &Certificate, k: Option<&SemiAlgSet>) -> VerifyReport {
    let gens = &c.generators.gens;
    let s = gens.len();
    let mut messages = Vec::new();

    let exponents_well_formed = c.terms.keys().all(|e| e.0.len() == s && e.0.iter().all(|b| *b <= 1));
    if !exponents_well_formed {
        messages.push(format!("an exponent vector does not have {s} entries in {{0,1}}"));
    }

    let mut weights_nonnegative = true;
    for (e, sos) in &c.terms {
        for (w, _) in &sos.terms {
            if w.is_negative() {
                weights_nonnegative = false;
                messages.push(format!("negative weight {w} in term {:?}", e.0));
            }
        }
    }

    let n = c.target.degree();
    let mut degree_bound_ok = true;
    let mut expansion = Polynomial::zero();
    let mut square_counts = Vec::new();
    if exponents_well_formed {
        for (e, sos) in &c.terms {
            let ge = product(&e.0, gens);
            let mut sigma = Polynomial::zero();
            for (w, q) in &sos.terms {
                if w.is_zero() || q.is_zero() {
                    continue;
                }
                sigma = &sigma + &(q * q).scale(w);
                let d = 2 * q.deg() + ge.degree().unwrap_or(0);
                if n.is_none_or(|n| d > n) {
                    degree_bound_ok = false;
                }
            }
            square_counts.push(sos.terms.len());
            expansion = &expansion + &(&sigma * &ge);
        }
    }
    let identity_holds = exponents_well_formed && expansion == c.target;
    if exponents_well_formed && !identity_holds {
        messages.push(format!("expansion differs from the target by {}", &c.target - &expansion));
    }
    if !degree_bound_ok {
        messages.push("some term has degree above deg(target)".into());
    }

    let generators_natural = k.map(|k| match naturals_match(gens, k) {
        Ok(b) => {
            if !b {
                messages.push("generators are not the natural generators of the set".into());
            }
            b
        }
        Err(m) => {
            messages.push(m);
            false
        }
    });

    VerifyReport {
        valid: identity_holds && weights_nonnegative,
        identity_holds,
        weights_nonnegative,
        exponents_well_formed,
        generators_natural,
        degree_bound_ok,
        module_shaped: c.terms.keys().all(|e| e.0.iter().filter(|b| **b != 0).count() <= 1),
        square_counts,
        messages,
    }
}
