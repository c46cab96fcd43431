use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{Certificate, ExponentVector, Metadata, WeightedSos};
use crate::arith::{parse_rational, Polynomial, Rational};
use crate::semialg::{GeneratorSet, Role};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid certificate at {path}: {message}")]
pub struct JsonError {
    pub path: String,
    pub message: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct WireSquare {
    weight: String,
    poly: Vec<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct WireTerm {
    exponents: Vec<u8>,
    squares: Vec<WireSquare>,
}

#[derive(Serialize, Deserialize, Default)]
#[serde(default)]
struct WireMetadata {
    degree_bound_ok: bool,
    square_counts: Vec<usize>,
    square_count_bound_met: bool,
    provenance: String,
    roles: Vec<Role>,
    notes: BTreeMap<String, String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct WireCertificate {
    variable: String,
    target: Vec<String>,
    generators: Vec<Vec<String>>,
    terms: Vec<WireTerm>,
    #[serde(default)]
    metadata: WireMetadata,
}

fn poly_out(p: &Polynomial) -> Vec<String> {
    p.coeffs().iter().map(|c| c.to_string()).collect()
}

fn to_wire(c: &Certificate) -> WireCertificate {
    WireCertificate {
        variable: c.variable.clone(),
        target: poly_out(&c.target),
        generators: c.generators.gens.iter().map(poly_out).collect(),
        terms: c
            .terms
            .iter()
            .map(|(e, s)| WireTerm {
                exponents: e.0.clone(),
                squares: s.terms.iter().map(|(w, q)| WireSquare { weight: w.to_string(), poly: poly_out(q) }).collect(),
            })
            .collect(),
        metadata: WireMetadata {
            degree_bound_ok: c.metadata.degree_bound_ok,
            square_counts: c.metadata.square_counts.clone(),
            square_count_bound_met: c.metadata.square_count_bound_met,
            provenance: c.metadata.provenance.clone(),
            roles: c.generators.roles.clone(),
            notes: c.metadata.notes.clone(),
        },
    }
}

pub fn to_json_value(c: &Certificate) -> serde_json::Value {
    serde_json::to_value(to_wire(c)).expect("certificate serializes")
}

/// Canonical pretty-printed JSON.
pub fn to_json(c: &Certificate) -> String {
    serde_json::to_string_pretty(&to_wire(c)).expect("certificate serializes")
}

fn rational_at(s: &str, path: impl FnOnce() -> String) -> Result<Rational, JsonError> {
    parse_rational(s).ok_or_else(|| JsonError { path: path(), message: format!("malformed rational {s:?}") })
}

fn poly_at(v: &[String], path: &str) -> Result<Polynomial, JsonError> {
    let mut coeffs = Vec::with_capacity(v.len());
    for (i, s) in v.iter().enumerate() {
        coeffs.push(rational_at(s, || format!("{path}[{i}]"))?);
    }
    Ok(Polynomial::from_coeffs(coeffs))
}

pub fn from_json(text: &str) -> Result<Certificate, JsonError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let wire: WireCertificate =
        serde_path_to_error::deserialize(de).map_err(|e| JsonError { path: e.path().to_string(), message: e.inner().to_string() })?;
    let target = poly_at(&wire.target, "target")?;
    let mut gens = Vec::with_capacity(wire.generators.len());
    for (i, g) in wire.generators.iter().enumerate() {
        gens.push(poly_at(g, &format!("generators[{i}]"))?);
    }
    let roles = if wire.metadata.roles.is_empty() {
        vec![Role::Foreign; gens.len()]
    } else if wire.metadata.roles.len() == gens.len() {
        wire.metadata.roles.clone()
    } else {
        return Err(JsonError { path: "metadata.roles".into(), message: "one role per generator is required".into() });
    };
    let mut terms = BTreeMap::new();
    for (i, t) in wire.terms.iter().enumerate() {
        let mut sos = WeightedSos::zero();
        for (j, sq) in t.squares.iter().enumerate() {
            let w = rational_at(&sq.weight, || format!("terms[{i}].squares[{j}].weight"))?;
            let q = poly_at(&sq.poly, &format!("terms[{i}].squares[{j}].poly"))?;
            sos.push(w, q);
        }
        if terms.insert(ExponentVector(t.exponents.clone()), sos).is_some() {
            return Err(JsonError { path: format!("terms[{i}].exponents"), message: "duplicate exponent vector".into() });
        }
    }
    Ok(Certificate {
        variable: wire.variable,
        target,
        generators: GeneratorSet::new(gens, roles),
        terms,
        metadata: Metadata {
            degree_bound_ok: wire.metadata.degree_bound_ok,
            square_counts: wire.metadata.square_counts,
            square_count_bound_met: wire.metadata.square_count_bound_met,
            provenance: wire.metadata.provenance,
            notes: wire.metadata.notes,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use crate::certificate::verify;

    fn sample() -> Certificate {
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
        .with_provenance("test")
        .with_note("k", "v")
    }

    #[test]
    fn round_trip() {
        let c = sample();
        let text = to_json(&c);
        assert_eq!(from_json(&text).unwrap(), c);
        assert_eq!(to_json(&from_json(&text).unwrap()), text);
    }

    #[test]
    fn negative_weight_parses_but_fails_verify() {
        let text = to_json(&sample()).replace("\"5/9\"", "\"-1/2\"");
        let c = from_json(&text).unwrap();
        let r = verify(&c, None);
        assert!(!r.weights_nonnegative && !r.valid);
    }

    #[test]
    fn malformed_rational_has_path() {
        let text = to_json(&sample()).replace("\"5/9\"", "\"1/0\"");
        let e = from_json(&text).unwrap_err();
        assert_eq!(e.path, "terms[1].squares[0].weight");
        let e = from_json("{\"variable\": \"x\", \"target\": 3}").unwrap_err();
        assert_eq!(e.path, "target");
    }
}
