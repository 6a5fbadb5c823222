//! Generators shared by the integration tests.
#![allow(dead_code)]

use proptest::prelude::*;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use supertrop::scalar::{q, qf};
use supertrop::{Polynomial, Scalar, Q};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A rational in `[-bound, bound]` with denominator 1, 2 or 3.
pub fn rand_q(r: &mut ChaCha8Rng, bound: i64) -> Q {
    let d = r.gen_range(1..=3);
    qf(r.gen_range(-bound * d..=bound * d), d)
}

pub fn rand_int(r: &mut ChaCha8Rng, bound: i64) -> Q {
    q(r.gen_range(-bound..=bound))
}

pub fn rand_scalar(r: &mut ChaCha8Rng) -> Scalar {
    match r.gen_range(0..8) {
        0 => Scalar::Zero,
        1 | 2 => Scalar::g(rand_q(r, 10)),
        _ => Scalar::t(rand_q(r, 10)),
    }
}

pub fn rand_nonzero(r: &mut ChaCha8Rng) -> Scalar {
    if r.gen_bool(0.3) {
        Scalar::g(rand_q(r, 10))
    } else {
        Scalar::t(rand_q(r, 10))
    }
}

/// Univariate polynomial with at most `max_deg + 1` terms; ghosts with probability `ghost_p`.
pub fn rand_poly1(r: &mut ChaCha8Rng, max_deg: i64, ghost_p: f64) -> Polynomial {
    loop {
        let deg = r.gen_range(0..=max_deg);
        let mut terms: Vec<(i64, Scalar)> = Vec::new();
        for i in 0..=deg {
            if r.gen_bool(0.7) {
                let v = rand_int(r, 8);
                terms.push((i, if r.gen_bool(ghost_p) { Scalar::g(v) } else { Scalar::t(v) }));
            }
        }
        if !terms.is_empty() {
            return Polynomial::univariate(terms);
        }
    }
}

/// Bivariate polynomial with exponents in `[0, max_deg]^2`.
pub fn rand_poly2(r: &mut ChaCha8Rng, max_deg: i64, terms: usize, ghost_p: f64) -> Polynomial {
    let items: Vec<(Vec<i64>, Scalar)> = (0..terms)
        .map(|_| {
            let e = vec![r.gen_range(0..=max_deg), r.gen_range(0..=max_deg)];
            let v = rand_int(r, 6);
            (e, if r.gen_bool(ghost_p) { Scalar::g(v) } else { Scalar::t(v) })
        })
        .collect();
    Polynomial::from_terms(2, false, items).unwrap()
}

/// `(x + a_1)⋯(x + a_k)` for the given roots.
pub fn linear_product(roots: &[Q]) -> Polynomial {
    roots.iter().fold(Polynomial::one(1), |acc, a| {
        &acc * &Polynomial::univariate([(1, Scalar::one()), (0, Scalar::t(a.clone()))])
    })
}

pub fn rational() -> impl Strategy<Value = Q> {
    (-40i64..=40, 1i64..=4).prop_map(|(n, d)| qf(n, d))
}

pub fn scalar() -> impl Strategy<Value = Scalar> {
    prop_oneof![
        1 => Just(Scalar::Zero),
        3 => rational().prop_map(Scalar::t),
        2 => rational().prop_map(Scalar::g),
    ]
}

pub fn nonzero_scalar() -> impl Strategy<Value = Scalar> {
    prop_oneof![3 => rational().prop_map(Scalar::t), 2 => rational().prop_map(Scalar::g)]
}

pub fn poly1(max_deg: i64) -> impl Strategy<Value = Polynomial> {
    proptest::collection::btree_map(0..=max_deg, nonzero_scalar(), 1..=(max_deg as usize + 1))
        .prop_map(Polynomial::univariate)
}

pub fn tangible_poly1(max_deg: i64) -> impl Strategy<Value = Polynomial> {
    proptest::collection::btree_map(0..=max_deg, rational().prop_map(Scalar::t), 1..=(max_deg as usize + 1))
        .prop_map(Polynomial::univariate)
}

pub fn poly2(max_deg: i64, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    proptest::collection::btree_map((0..=max_deg, 0..=max_deg), nonzero_scalar(), 1..=max_terms)
        .prop_map(|m| Polynomial::from_terms(2, false, m.into_iter().map(|((i, j), c)| (vec![i, j], c))).unwrap())
}

pub fn tangible_point(arity: usize) -> impl Strategy<Value = Vec<Scalar>> {
    proptest::collection::vec(rational().prop_map(Scalar::t), arity)
}
