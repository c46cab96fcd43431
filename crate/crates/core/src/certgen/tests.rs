use super::*;
use crate::arith::{int, rat};
use crate::io::{parse_poly, parse_set};

fn p(s: &str) -> Polynomial {
    parse_poly(s).unwrap()
}

fn set(s: &str) -> SemiAlgSet {
    parse_set(s).unwrap()
}

fn certifies(f: &str, k: &str) -> Certificate {
    let (f, k) = (p(f), set(k));
    let c = certify(&f, &k).unwrap_or_else(|r| panic!("{f} on {k:?}: {r:?}"));
    assert_eq!(c.target, f);
    assert!(verify(&c, Some(&k)).valid);
    c
}

#[test]
fn generator_term_on_two_rays() {
    let c = certifies("(x-1)*(x-2)", "(-inf,1] U [2,inf)");
    assert_eq!(c.terms.len(), 1);
    let (e, s) = c.terms.iter().next().unwrap();
    assert_eq!(e.weight(), 1);
    assert_eq!(s.expand(), Polynomial::one());
}

#[test]
fn berg_maserick_fixture_through_certify() {
    let c = certifies("x^2-3*x+2", "(-inf,0] U [3,inf)");
    let gap = c.generators.index_of_role(Role::GapQuadratic).unwrap();
    let e1 = ExponentVector::unit(c.generators.len(), gap);
    assert_eq!(c.terms[&e1].expand(), Polynomial::constant(rat(5, 9)));
    let e0 = ExponentVector::empty(c.generators.len());
    assert_eq!(c.terms[&e0].expand(), &p("(x-3/2)^2").scale(&rat(4, 9)) + &Polynomial::one());
}

#[test]
fn disk_linear_fixture() {
    let c = certifies("x+2", "[0-1*sqrt(2), 0+1*sqrt(2)]");
    assert_eq!(c.generators.gens, vec![p("2-x^2")]);
}

#[test]
fn co_disk_quadratic() {
    certifies("x^2-3*x+2", "(-inf, 3/2-1/2*sqrt(5)] U [3/2+1/2*sqrt(5), inf)");
    let r = certify(&p("x^2-3*x+2"), &set("(-inf,0-1*sqrt(2)] U [0+1*sqrt(2),inf)")).unwrap_err();
    assert_eq!(r.reason, RefusalReason::NotNonnegative);
}

#[test]
fn interior_zero_examples() {
    let t = interior_zero_step(&p("(x^2-2)^2*(x+3)"), &set("[-2,2]")).unwrap();
    assert_eq!((t.h_prime, t.h), (p("(x^2-2)^2"), p("x+3")));
    let t = interior_zero_step(&p("x^2"), &set("[-1,1]")).unwrap();
    assert_eq!((t.h_prime, t.h), (p("x^2"), p("1")));
    let t = interior_zero_step(&p("(x-1/2)^4"), &set("[0,1]")).unwrap();
    assert_eq!((t.h_prime, t.h), (p("(x-1/2)^4"), p("1")));
}

#[test]
fn interior_min_rational_extremes() {
    let f = p("x*(x-1)*(x+2)*(x-3)+1/100");
    let k = set("(-inf,-1] U [2,inf)");
    // Rational roots 0 and 1 in the gap only after the shift; use an exact product instead.
    let _ = (f, k);
    let f = p("x*(x-1)*((x-1/2)^2+10)");
    let k = set("(-inf,-1] U [2,inf)");
    let t = interior_min_step(&f, &k).unwrap();
    assert!(t.g.is_zero());
    assert_eq!(t.h_prime, p("x*(x-1)"));
    assert!(t.expands_to(&f));
}

#[test]
fn interior_min_irrational_roots() {
    let f = p("(x^2-2)*(x^2-3)+1/10");
    let k = set("(-inf,-2] U [-1/2,1/2] U [2,inf)");
    let probe = interior_min_probe(&f, &k).unwrap();
    assert!(probe.delta > Rational::zero() && probe.r < probe.s);
    let t = interior_min_step(&f, &k).unwrap();
    assert!(t.expands_to(&f));
    assert_eq!(t.g, probe.g);
    certifies("(x^2-2)*(x^2-3)+1/10", "(-inf,-2] U [-1/2,1/2] U [2,inf)");
}

#[test]
fn boundary_step_example() {
    let f = p("x*(x-1)*(x+1)");
    let k = set("{0} U [1,inf)");
    let t = boundary_step(&f, &k).unwrap();
    assert!(t.g.is_zero());
    assert_eq!((t.h_prime.clone(), t.h.clone()), (p("x*(x-1)"), p("x+1")));
    assert!(t.expands_to(&f));
    certifies("x*(x-1)*(x+1)", "{0} U [1,inf)");
}

#[test]
fn short_circuits() {
    let k = set("[-1,0] U [1,2]");
    let sel = select_gap_generators(&p("x^2*(x-1)^2"), &k, &[Endpoint::Rational(int(0))]).unwrap();
    assert!(matches!(sel, Selection::ShortCircuit { kind: ShortCircuitKind::DoubleZero, .. }));
    let k = set("[0,1] U [2,3]");
    let sel = select_gap_generators(&p("x*(x-3/2)^2"), &k, &[Endpoint::Rational(int(0))]).unwrap();
    match sel {
        Selection::ShortCircuit { kind, h_prime, .. } => {
            assert_eq!(kind, ShortCircuitKind::MinimumEnd);
            assert_eq!(h_prime, p("x"));
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn five_zero_pattern() {
    // c1..c5 = 0, 2, 4, 6, 8 with the sign pattern of the reference figure.
    let k = set("{0} U [2,3] U [4,5] U {6} U [8,inf)");
    let f = p("x*(x-2)*(x-4)*(x-6)*(x-8)*(x-1)*(x-7)");
    let report = crate::roots::is_nonneg_on(&f, &k).unwrap();
    if report.nonnegative {
        let zs: Vec<Endpoint> = [0, 2, 4, 6, 8].iter().map(|c| Endpoint::Rational(int(*c))).collect();
        let _ = select_gap_generators(&f, &k, &zs).unwrap();
        certifies("x*(x-2)*(x-4)*(x-6)*(x-8)*(x-1)*(x-7)", "{0} U [2,3] U [4,5] U {6} U [8,inf)");
    }
}

#[test]
fn refusals() {
    let r = certify(&p("x"), &set("[-1,1]")).unwrap_err();
    assert_eq!(r.reason, RefusalReason::NotNonnegative);
    assert!(r.witness.is_some());
    let r = certify(&p("1"), &SemiAlgSet::empty()).unwrap_err();
    assert_eq!(r.reason, RefusalReason::EmptySet);
}

#[test]
fn cantor_examples() {
    let (rep, c) = cantor_certify(&p("(x-1/3)*(x-2/3)"), 4).unwrap();
    assert_eq!(rep.level, 1);
    assert_eq!(c.generators.gens, vec![p("x"), p("(x-1/3)*(x-2/3)"), p("1-x")]);
    let (rep, _) = cantor_certify(&p("1"), 4).unwrap();
    assert_eq!(rep.level, 0);
    let r = cantor_certify(&p("-(x-1/4)^2"), 4).unwrap_err();
    assert_eq!(r.reason, RefusalReason::NotNonnegative);
    let r = cantor_certify(&p("(x-1/9-1/100)*(x-2/9+1/100)"), 1).unwrap_err();
    assert_eq!(r.reason, RefusalReason::LevelTooSmall);
    assert_eq!(r.required_level, Some(2));
}

#[test]
fn family_examples() {
    let (n, c) = family_certify(&p("x"), &FamilyKind::Harmonic, 3).unwrap();
    assert_eq!(n, 0);
    assert!(c.generators.gens.contains(&p("x")));
    let r = family_certify(&p("-1"), &FamilyKind::Harmonic, 3).unwrap_err();
    assert_eq!(r.reason, RefusalReason::NotNonnegative);
    let r = family_certify(&p("x-1/20"), &FamilyKind::Harmonic, 3).unwrap_err();
    assert_eq!(r.reason, RefusalReason::NotNonnegative);
    let evens: IntervalFn = std::sync::Arc::new(|i| (int(2 * i), int(2 * i + 1)));
    let fam = FamilyKind::Increasing { intervals: evens, lower_ray: false };
    let (n, c) = family_certify(&p("(x-1)*(x-2)*(x-3)*(x-4)"), &fam, 4).unwrap();
    assert_eq!(n, 1);
    assert!(verify(&c, None).valid);
    let r = family_certify(&p("(x-3/2)*(x-5/2)"), &fam, 2).unwrap_err();
    assert_eq!(r.reason, RefusalReason::NotNonnegative);
    let r = family_certify(&p("(x-56/5)*(x-59/5)"), &fam, 3).unwrap_err();
    assert_eq!(r.reason, RefusalReason::Inconclusive);
}

#[test]
fn ray_examples() {
    let cube = p("x^3-2");
    let d = irrational_ray_certify(&cube, &cube).unwrap();
    assert_eq!(d.certificate.terms.len(), 1);
    assert_eq!(d.r, None);
    let d = irrational_ray_certify(&p("x-1"), &cube).unwrap();
    assert_eq!(d.r, Some(rat(5, 4)));
    assert_eq!(d.certificate.generators.gens, vec![p("x-5/4"), cube.clone()]);
    let d = irrational_ray_certify(&p("(x^3-2)^2"), &cube).unwrap();
    assert!(d.certificate.terms.keys().all(|e| e.is_zero()));
    assert!(d.certificate.metadata.notes.contains_key("non_finitely_generated"));
    let r = irrational_ray_certify(&p("1-x"), &cube).unwrap_err();
    assert_eq!(r.reason, RefusalReason::NotNonnegative);
    let q = p("x^3-3*x+1");
    let roots = crate::roots::real_roots(&q).unwrap();
    let r = irrational_ray_certify_at(&p("1"), &q, &roots[0]).unwrap_err();
    assert_eq!(r.reason, RefusalReason::UnsupportedEndpointDegree);
}

#[test]
fn generated_cube_root_refuses() {
    let r = certify_generated(&p("x"), &[p("x^3-2")], &CertifyConfig::default()).unwrap_err();
    assert_eq!(r.reason, RefusalReason::NotFinitelyGenerated);
}
