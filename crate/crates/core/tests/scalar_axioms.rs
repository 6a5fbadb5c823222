mod common;

use common::{nonzero_scalar, scalar};
use proptest::prelude::*;
use std::cmp::Ordering;
use supertrop::scalar::qf;
use supertrop::Scalar;

fn pow(a: &Scalar, m: i64) -> Scalar {
    a.powi(m).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn bipotence(a in scalar(), b in scalar()) {
        prop_assume!(a.cmp_nu(&b) != Ordering::Equal);
        let s = &a + &b;
        prop_assert!(s == a || s == b);
    }

    #[test]
    fn supertropicality(a in scalar()) {
        prop_assert_eq!(&a + &a, a.nu());
    }

    #[test]
    fn nu_is_an_idempotent_homomorphism(a in scalar(), b in scalar()) {
        prop_assert_eq!((&a + &b).nu(), &a.nu() + &b.nu());
        prop_assert_eq!((&a * &b).nu(), &a.nu() * &b.nu());
        prop_assert_eq!(a.nu().nu(), a.nu());
    }

    #[test]
    fn semiring_laws(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &Scalar::Zero, a.clone());
        prop_assert_eq!(&a * &Scalar::one(), a.clone());
        prop_assert_eq!(&a * &Scalar::Zero, Scalar::Zero);
    }

    #[test]
    fn nu_cancellation(c in nonzero_scalar(), a in scalar(), b in scalar()) {
        if (&c * &a).nu() == (&c * &b).nu() {
            prop_assert_eq!(a.nu(), b.nu());
        }
    }

    #[test]
    fn frobenius_for_scalars(a in scalar(), b in scalar(), m in prop::sample::select(vec![2i64, 3, 5])) {
        prop_assert_eq!(pow(&(&a + &b), m), &pow(&a, m) + &pow(&b, m));
    }

    #[test]
    fn square_hypothesis_gives_absorbed_middle(a in scalar(), c in scalar()) {
        let ac = &a * &c;
        let b = match &ac {
            Scalar::Zero => Scalar::Zero,
            Scalar::Tangible(v, _) => Scalar::t(v / qf(2, 1)),
            Scalar::Ghost(v) => Scalar::g(v / qf(2, 1)),
        };
        prop_assert_eq!(&b * &b, ac);
        prop_assert_eq!(&a + &c, &(&a + &b) + &c);
    }

    #[test]
    fn only_zero_sums_to_zero(a in scalar(), b in scalar()) {
        if (&a + &b).is_zero() {
            prop_assert!(a.is_zero() && b.is_zero());
        }
    }

    #[test]
    fn duality_reverses_the_order(a in scalar(), b in scalar()) {
        prop_assert_eq!(a.dual().dual(), a.clone());
        prop_assert_eq!((&a + &b).dual(), a.dual().add_min(&b.dual()));
        prop_assert_eq!((&a * &b).dual(), &a.dual() * &b.dual());
        if !a.is_zero() && !b.is_zero() {
            prop_assert_eq!(a.cmp_nu(&b), b.dual().cmp_nu(&a.dual()));
        }
    }

    #[test]
    fn mutual_surpassing_pins_the_value(a in scalar(), b in scalar()) {
        if a.ghost_surpasses(&b) && b.ghost_surpasses(&a) {
            prop_assert!(a == b || (a.is_ghost() && b.is_ghost() && a.cmp_nu(&b) == Ordering::Equal));
        }
    }

    #[test]
    fn surpassing_matches_its_definition(a in scalar(), b in scalar(), c in scalar()) {
        if !c.is_tangible() && a == &b + &c {
            prop_assert!(a.ghost_surpasses(&b));
        }
    }
}
