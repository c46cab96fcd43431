mod common;

use common::{q, random_member, random_poly, random_set};
use proptest::prelude::*;
use psatz_core::arith::{Polynomial, Rational};
use psatz_core::certgen::{boundary_step, interior_zero_step};
use psatz_core::certificate::{from_json, to_json};
use psatz_core::io::parse_poly_list;
use psatz_core::io::{parse_poly, parse_set, render_poly, render_set};
use psatz_core::roots::{sign_at, zeros_in, Region, ZeroLocation};
use psatz_core::semialg::Endpoint;
use psatz_core::sos::berg_maserick;
use psatz_core::{certify, is_nonneg_on, verify, RefusalReason};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn members_certify_and_verify(seed in any::<u64>()) {
        let mut r = rng(seed);
        let iso = r.gen_bool(0.5);
        let k = random_set(&mut r, iso);
        let f = random_member(&mut r, &k, 8);
        let c = certify(&f, &k).map_err(|e| TestCaseError::fail(format!("{f} on {}: {:?}", render_set(&k), e.reason)))?;
        prop_assert_eq!(&c.target, &f);
        prop_assert!(verify(&c, Some(&k)).valid);
        let back = from_json(&to_json(&c)).unwrap();
        prop_assert_eq!(&back.target, &c.target);
        prop_assert!(verify(&back, Some(&k)).valid);
    }

    #[test]
    fn negative_targets_are_refused_with_a_witness(seed in any::<u64>()) {
        let mut r = rng(seed);
        let iso = r.gen_bool(0.5);
        let k = random_set(&mut r, iso);
        let deg = r.gen_range(1..=6);
        let f = random_poly(&mut r, deg, 5);
        let rep = is_nonneg_on(&f, &k).unwrap();
        match certify(&f, &k) {
            Ok(c) => {
                prop_assert!(rep.nonnegative);
                prop_assert!(verify(&c, Some(&k)).valid);
            }
            Err(e) => {
                prop_assert!(!rep.nonnegative, "{f} refused: {:?}", e.reason);
                prop_assert_eq!(e.reason, RefusalReason::NotNonnegative);
                let w = e.witness.expect("witness");
                prop_assert!(sign_at(&f, &w).is_lt());
                prop_assert!(k.to_region().contains(&w.to_point()));
            }
        }
    }

    #[test]
    fn oracle_agrees_with_sampling(seed in any::<u64>()) {
        let mut r = rng(seed);
        let iso = r.gen_bool(0.5);
        let k = random_set(&mut r, iso);
        let deg = r.gen_range(1..=6);
        let f = random_poly(&mut r, deg, 5);
        let rep = is_nonneg_on(&f, &k).unwrap();
        if rep.nonnegative {
            for i in -80..=80 {
                let x = q(i, 8);
                if k.contains_rational(&x) {
                    prop_assert!(f.eval(&x) >= Rational::from_integer(0.into()), "f({x}) < 0");
                }
            }
        } else {
            prop_assert!(rep.witness.is_some_and(|w| sign_at(&f, &w).is_lt()));
        }
    }

    #[test]
    fn two_point_identity(a in -50i64..50, da in 0i64..20, w in 1i64..20, db in 0i64..20, den in 1i64..6) {
        let a = q(a, den);
        let c = &a + q(da, den);
        let d = &c + q(w, den);
        let b = &d + q(db, den);
        let (t, s) = berg_maserick(&c, &d, &Endpoint::Rational(a.clone()), &Endpoint::Rational(b.clone())).unwrap();
        prop_assert!(t >= Rational::from_integer(0.into()));
        prop_assert!(s.weights_nonnegative());
        let gap = &Polynomial::linear_root(&a) * &Polynomial::linear_root(&b);
        prop_assert_eq!(&s.expand() + &gap.scale(&t), &Polynomial::linear_root(&c) * &Polynomial::linear_root(&d));
    }

    #[test]
    fn step_triples_reexpand(seed in any::<u64>()) {
        let mut r = rng(seed);
        let iso = r.gen_bool(0.5);
        let k = random_set(&mut r, iso);
        prop_assume!(k.components().len() > 1);
        let f = random_member(&mut r, &k, 8);
        let zeros = zeros_in(&f, &Region::from_set(&k)).unwrap();
        let step = if zeros.iter().any(|z| z.2 == ZeroLocation::Interior) {
            interior_zero_step(&f, &k)
        } else if !zeros.is_empty() {
            boundary_step(&f, &k)
        } else {
            return Ok(());
        };
        let t = step.map_err(|e| TestCaseError::fail(format!("{f}: {:?} {}", e.reason, e.detail)))?;
        prop_assert!(t.expands_to(&f));
        prop_assert!(t.h.deg() < f.deg());
    }

    #[test]
    fn text_round_trip(seed in any::<u64>()) {
        let mut r = rng(seed);
        let iso = r.gen_bool(0.5);
        let k = random_set(&mut r, iso);
        let deg = r.gen_range(0..=7);
        let f = random_poly(&mut r, deg, 9);
        prop_assert_eq!(parse_set(&render_set(&k)).unwrap(), k);
        prop_assert_eq!(parse_poly(&render_poly(&f, "x")).unwrap(), f);
    }

    #[test]
    fn certificate_algebra_stays_valid(seed in any::<u64>(), num in -9i64..=9, den in 1i64..=4) {
        prop_assume!(num != 0);
        let mut r = rng(seed);
        let k = random_set(&mut r, false);
        let f = random_member(&mut r, &k, 5);
        let g = random_member(&mut r, &k, 5);
        let a = certify(&f, &k).unwrap();
        let b = certify(&g, &k).unwrap();
        let sum = a.add(&b).unwrap();
        prop_assert_eq!(&sum.target, &(&f + &g));
        prop_assert!(verify(&sum, None).valid);
        let prod = a.mul(&b).unwrap();
        prop_assert_eq!(&prod.target, &(&f * &g));
        prop_assert!(verify(&prod, None).valid);
        let alpha = q(num, den);
        let moved = a.affine(&alpha, &q(1, 3)).unwrap();
        prop_assert_eq!(&moved.target, &f.affine_substitute(&alpha, &q(1, 3)));
        prop_assert!(verify(&moved, None).valid);
    }

    #[test]
    fn parsers_never_panic(src in ".{0,40}") {
        let _ = parse_poly(&src);
        let _ = parse_set(&src);
        let _ = parse_poly_list(&src, "x");
        let _ = from_json(&src);
    }

    #[test]
    fn set_parser_survives_grammar_shaped_noise(src in "[\\[\\]{}(),U0-9/+*sqrt R inf-]{0,30}") {
        let _ = parse_set(&src);
    }
}
