mod common;

use common::{poly1, poly2, rational, tangible_point};
use proptest::prelude::*;
use std::collections::BTreeMap;
use supertrop::identities::{equal_on_samples, sample_points};
use supertrop::lp::{feasible, Ineq};
use supertrop::scalar::q;
use supertrop::shape::{
    classify_monomials, corner_roots_1d, e_equivalent, essential_part, full_closure_1d, MonomialClass,
};
use supertrop::{Polynomial, Scalar, Q};

/// Largest height of a chord between lifted points on either side of `k`.
fn chord_height(points: &BTreeMap<i64, Q>, k: i64) -> Option<Q> {
    let mut best: Option<Q> = None;
    for (&i, vi) in points.range(..k) {
        for (&j, vj) in points.range(k + 1..) {
            let h = vi + (vj - vi) * q(k - i) / q(j - i);
            if best.as_ref().is_none_or(|b| &h > b) {
                best = Some(h);
            }
        }
    }
    best
}

fn class_by_chords(f: &Polynomial) -> BTreeMap<i64, MonomialClass> {
    let points: BTreeMap<i64, Q> = f.terms().map(|(e, c)| (e[0], c.value().unwrap().clone())).collect();
    points
        .iter()
        .map(|(&k, v)| {
            let class = match chord_height(&points, k) {
                None => MonomialClass::Essential,
                Some(h) if v > &h => MonomialClass::Essential,
                Some(h) if v == &h => MonomialClass::QuasiEssential,
                Some(_) => MonomialClass::Inessential,
            };
            (k, class)
        })
        .collect()
}

/// Classes from dominance systems against every other term.
fn class_by_full_systems(f: &Polynomial) -> BTreeMap<Vec<i64>, MonomialClass> {
    let rows = |i: &Vec<i64>, strict: bool| -> Vec<Ineq> {
        let hi = f.coeff(i).value().unwrap().clone();
        f.terms()
            .filter(|(j, _)| *j != i)
            .map(|(j, c)| Ineq::new(i.iter().zip(j).map(|(a, b)| q(a - b)).collect(), &hi - c.value().unwrap(), strict))
            .collect()
    };
    f.terms()
        .map(|(e, _)| {
            let class = if feasible(f.arity(), &rows(e, true)) {
                MonomialClass::Essential
            } else if feasible(f.arity(), &rows(e, false)) {
                MonomialClass::QuasiEssential
            } else {
                MonomialClass::Inessential
            };
            (e.clone(), class)
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn hull_classes_match_the_chord_oracle(f in poly1(8)) {
        let prof = classify_monomials(&f);
        let got: BTreeMap<i64, MonomialClass> = prof.classes.iter().map(|(e, c)| (e[0], *c)).collect();
        prop_assert_eq!(got, class_by_chords(&f));
    }

    #[test]
    fn bivariate_classes_match_full_dominance_systems(g in poly2(4, 12)) {
        prop_assert_eq!(classify_monomials(&g).classes, class_by_full_systems(&g));
    }

    #[test]
    fn essential_part_and_closure_are_idempotent(f in poly1(8), g in poly2(3, 6)) {
        let e = essential_part(&f);
        prop_assert_eq!(essential_part(&e), e);
        let c = full_closure_1d(&f).unwrap();
        prop_assert_eq!(full_closure_1d(&c).unwrap(), c);
        let e2 = essential_part(&g);
        prop_assert_eq!(essential_part(&e2), e2);
    }

    #[test]
    fn closure_is_equal_as_a_function(f in poly1(8)) {
        let c = full_closure_1d(&f).unwrap();
        prop_assert!(equal_on_samples(&f, &c, &sample_points(1, 200)).unwrap());
        prop_assert!(e_equivalent(&f, &c));
    }

    #[test]
    fn essential_part_is_equal_as_a_function(g in poly2(3, 6), a in tangible_point(2)) {
        prop_assert_eq!(essential_part(&g).eval(&a).unwrap(), g.eval(&a).unwrap());
    }

    #[test]
    fn e_equivalence_is_an_equivalence(f in poly1(4), g in poly1(4), h in poly1(4)) {
        prop_assert!(e_equivalent(&f, &f));
        prop_assert_eq!(e_equivalent(&f, &g), e_equivalent(&g, &f));
        if e_equivalent(&f, &g) && e_equivalent(&g, &h) {
            prop_assert!(e_equivalent(&f, &h));
        }
        let c = full_closure_1d(&f).unwrap();
        let e = essential_part(&f);
        prop_assert!(e_equivalent(&f, &c) && e_equivalent(&c, &e) && e_equivalent(&f, &e));
    }

    #[test]
    fn corner_roots_ignore_monomial_factors(f in poly1(6), k in 0i64..4, a in rational()) {
        let m = Polynomial::univariate([(k, Scalar::t(a))]);
        prop_assert_eq!(corner_roots_1d(&(&f * &m)).unwrap(), corner_roots_1d(&f).unwrap());
    }
}
