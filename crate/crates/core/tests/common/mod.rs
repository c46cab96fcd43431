//! Random instance generators shared by the integration tests.
#![allow(dead_code)]

use psatz_core::arith::{Polynomial, Rational};
use psatz_core::certificate::ExponentVector;
use psatz_core::semialg::{natural_generators, Component, Endpoint, SemiAlgSet};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Rational in `[-10, 10]` with denominator at most 4.
pub fn grid_point<R: Rng>(rng: &mut R) -> Rational {
    q(rng.gen_range(-40..=40), 4)
}

/// `K` with 1 to 4 components and rational endpoints in `[-10, 10]`.
pub fn random_set<R: Rng>(rng: &mut R, isolated: bool) -> SemiAlgSet {
    let m = rng.gen_range(1..=4usize);
    let mut pts: Vec<Rational> = Vec::new();
    while pts.len() < 2 * m {
        let p = grid_point(rng);
        if !pts.contains(&p) {
            pts.push(p);
        }
    }
    pts.sort();
    let e = |r: &Rational| Endpoint::Rational(r.clone());
    let mut comps = Vec::with_capacity(m);
    let forced_point = if isolated { Some(rng.gen_range(0..m)) } else { None };
    for i in 0..m {
        let (a, b) = (&pts[2 * i], &pts[2 * i + 1]);
        let c = if Some(i) == forced_point {
            Component::Point(e(if rng.gen_bool(0.5) { a } else { b }))
        } else if i == 0 && rng.gen_bool(0.3) {
            Component::RayBelow(e(b))
        } else if i + 1 == m && rng.gen_bool(0.3) {
            Component::RayAbove(e(a))
        } else {
            Component::Segment(e(a), e(b))
        };
        comps.push(c);
    }
    SemiAlgSet::new(comps)
}

pub fn random_poly<R: Rng>(rng: &mut R, deg: usize, bound: i64) -> Polynomial {
    Polynomial::from_coeffs((0..=deg).map(|_| q(rng.gen_range(-bound..=bound), rng.gen_range(1..=3))).collect())
}

/// `f = sum_e sigma_e g^e` over the natural generators, `deg f <= max_deg`.
pub fn random_member<R: Rng>(rng: &mut R, k: &SemiAlgSet, max_deg: usize) -> Polynomial {
    let n = natural_generators(k).expect("rational set");
    let s = n.len();
    let mut f = Polynomial::zero();
    while f.is_zero() {
        let terms = rng.gen_range(1..=3);
        for _ in 0..terms {
            let mut idx: Vec<usize> = (0..s).collect();
            idx.shuffle(rng);
            let take = rng.gen_range(0..=s.min(3));
            let e = ExponentVector::from_indices(s, &idx[..take]);
            let ge = e.product(&n.gens);
            let dg = ge.degree().unwrap_or(0);
            if dg > max_deg {
                continue;
            }
            let room = (max_deg - dg) / 2;
            let mut sigma = Polynomial::zero();
            for _ in 0..rng.gen_range(1..=2) {
                let d = rng.gen_range(0..=room.min(4));
                let mut base = random_poly(rng, d, 3);
                if rng.gen_bool(0.25) && d < room {
                    // a forced real zero, often inside K
                    base = &base * &Polynomial::linear_root(&grid_point(rng));
                }
                let w = q(rng.gen_range(1..=5), rng.gen_range(1..=4));
                sigma = &sigma + &(&base * &base).scale(&w);
            }
            f = &f + &(&sigma * &ge);
        }
    }
    f
}
