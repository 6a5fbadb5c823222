mod common;

use common::{rand_poly1, rand_poly2, rng};
use rand::Rng;
use supertrop::identities::{
    equal_on_samples, frobenius_power, monomials, permanent_bruteforce, sample_points, vandermonde_lhs,
    verify_permanent_identity, SAMPLE_COUNT,
};
use supertrop::scalar::q;
use supertrop::shape::{e_equivalent, essential_part};
use supertrop::{Polynomial, Scalar};

fn mono(r: &mut rand_chacha::ChaCha8Rng, ghost: bool) -> Polynomial {
    let e = vec![r.gen_range(-2..=2), r.gen_range(-2..=2)];
    let v = q([-1, 0, 1, 2][r.gen_range(0..4)]);
    let c = if ghost { Scalar::g(v) } else { Scalar::t(v) };
    Polynomial::from_terms(2, true, [(e, c)]).unwrap()
}

fn sum(ps: &[&Polynomial]) -> Polynomial {
    ps.iter().skip(1).fold(ps[0].clone(), |acc, p| &acc + *p)
}

#[test]
fn frobenius_agrees_with_powers_on_the_grid() {
    let mut r = rng(31);
    let grid1 = sample_points(1, SAMPLE_COUNT);
    let grid2 = sample_points(2, SAMPLE_COUNT);
    for case in 0..500 {
        let m = r.gen_range(1..=4);
        let (f, grid) =
            if case % 2 == 0 { (rand_poly1(&mut r, 5, 0.3), &grid1) } else { (rand_poly2(&mut r, 3, 4, 0.3), &grid2) };
        let frob = frobenius_power(&f, m);
        assert!(equal_on_samples(&frob, &f.pow(m), grid).unwrap(), "{f} ^ {m}");
        assert!(e_equivalent(&frob, &f.pow(m)), "{f} ^ {m}");
    }
}

#[test]
fn monomial_families_agree_three_ways() {
    let mut r = rng(32);
    for m in 2..=5usize {
        for _ in 0..12 {
            let fs: Vec<Polynomial> = (0..m).map(|_| mono(&mut r, false)).collect();
            let rep = verify_permanent_identity(&fs).unwrap();
            assert!(rep.holds(), "{:?}", fs.iter().map(ToString::to_string).collect::<Vec<_>>());
            assert_eq!(rep.equal_essential, Some(true));
            assert_eq!(rep.admissible_support, Some(true));
            assert!(rep.permanent.is_some());
        }
    }
}

#[test]
fn permanent_matches_the_pairwise_product_for_polynomials() {
    let mut r = rng(33);
    let grid = sample_points(2, SAMPLE_COUNT);
    for _ in 0..20 {
        let m = r.gen_range(2..=4);
        let fs: Vec<Polynomial> = (0..m).map(|_| rand_poly2(&mut r, 2, 2, 0.0)).collect();
        let lhs = vandermonde_lhs(&fs).unwrap();
        assert!(equal_on_samples(&lhs, &permanent_bruteforce(&fs).unwrap(), &grid).unwrap());
        assert!(verify_permanent_identity(&fs).unwrap().holds());
    }
}

#[test]
fn three_term_sum_divides_the_pairwise_product() {
    let mut r = rng(34);
    for case in 0..300 {
        let ghosts = case % 3;
        let f1 = mono(&mut r, false);
        let f2 = mono(&mut r, ghosts == 2);
        let f3 = mono(&mut r, ghosts >= 1);
        let (a, b, c) = (&f1, &f2, &f3);
        let lhs = &sum(&[a, b, c]) * &sum(&[&(a * b), &(a * c), &(b * c)]);
        let rhs = &(&(a + b) * &(a + c)) * &(b + c);
        assert!(e_equivalent(&lhs, &rhs), "{a}, {b}, {c}");
        if ghosts == 0 {
            let extra = (&(a * b) * c).nu();
            let expanded = sum(&[
                &(&(a * a) * b),
                &(&(a * a) * c),
                &(&(b * b) * a),
                &(&(c * c) * a),
                &(&(b * b) * c),
                &(&(c * c) * b),
                &extra,
            ]);
            assert!(e_equivalent(&expanded, &rhs));
            assert!(e_equivalent(&essential_part(&expanded), &essential_part(&(&expanded + &extra))));
        }
    }
}

#[test]
fn square_is_equivalent_to_the_cyclic_binomial_combination() {
    let mut r = rng(35);
    for _ in 0..200 {
        let f = rand_poly2(&mut r, 3, 5, 0.0);
        let fi = monomials(&f);
        if fi.len() < 2 {
            continue;
        }
        let m = fi.len();
        let squares = fi.iter().skip(1).fold(&fi[0] * &fi[0], |acc, g| &acc + &(g * g));
        let cyclic = (0..m).fold(Polynomial::zero(2), |acc, i| &acc + &(&fi[i] * &(&fi[i] + &fi[(i + 1) % m])));
        assert!(e_equivalent(&f.pow(2), &squares), "{f}");
        assert!(e_equivalent(&squares, &cyclic), "{f}");
    }
}
