//! Seeded invariant suites behind `supertrop check`.

use clap::ValueEnum;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use supertrop::factor::{factor_minimal_ghosts_1d, factor_tangible_1d, root_set_of_factorization, verify, Factor};
use supertrop::geometry2d::{
    balancing_check, corner_locus_2d, dual_curve, duality_check, newton_subdivision, Convention,
};
use supertrop::identities::{
    equal_on_samples, frobenius_power, sample_points, verify_permanent_identity, SAMPLE_COUNT,
};
use supertrop::roots::{preceq_comp, root_set_1d, verify_radical_membership};
use supertrop::scalar::{q, qf};
use supertrop::shape::e_equivalent;
use supertrop::{Error, Polynomial, Scalar, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Axioms,
    Frobenius,
    Factorization,
    Nullstellensatz,
    Vandermonde,
    Geometry,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::Axioms => "axioms",
            Suite::Frobenius => "frobenius",
            Suite::Factorization => "factorization",
            Suite::Nullstellensatz => "nullstellensatz",
            Suite::Vandermonde => "vandermonde",
            Suite::Geometry => "geometry",
        }
    }

    fn default_cases(self) -> usize {
        match self {
            Suite::Axioms => 2000,
            Suite::Frobenius => 200,
            Suite::Factorization => 500,
            Suite::Nullstellensatz => 300,
            Suite::Vandermonde => 10,
            Suite::Geometry => 40,
        }
    }
}

pub struct Report {
    pub suite: Suite,
    pub seed: u64,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl Report {
    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite.name(),
            "seed": self.seed,
            "cases": self.cases,
            "passed": self.failures.is_empty(),
            "failures": self.failures,
        })
    }

    pub fn to_text(&self) -> String {
        let verdict = if self.failures.is_empty() { "PASS" } else { "FAIL" };
        let mut lines = vec![format!(
            "{verdict} {}: {} cases, {} failures (seed {})",
            self.suite.name(),
            self.cases,
            self.failures.len(),
            self.seed
        )];
        lines.extend(self.failures.iter().map(|f| format!("  {f}")));
        lines.join("\n")
    }
}

pub fn run(suite: Suite, seed: u64, cases: Option<usize>, m: Option<usize>) -> Result<Report, Error> {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    let cases = cases.unwrap_or(suite.default_cases());
    let mut failures = Vec::new();
    for case in 0..cases {
        let found = match suite {
            Suite::Axioms => axioms(&mut r),
            Suite::Frobenius => frobenius(&mut r, case, m)?,
            Suite::Factorization => factorization(&mut r, case)?,
            Suite::Nullstellensatz => nullstellensatz(&mut r)?,
            Suite::Vandermonde => vandermonde(&mut r, m.unwrap_or(4))?,
            Suite::Geometry => geometry(&mut r)?,
        };
        failures.extend(found);
    }
    Ok(Report { suite, seed, cases, failures })
}

fn rand_q(r: &mut ChaCha8Rng, bound: i64) -> Q {
    let d = r.gen_range(1..=3);
    qf(r.gen_range(-bound * d..=bound * d), d)
}

fn rand_scalar(r: &mut ChaCha8Rng) -> Scalar {
    match r.gen_range(0..8) {
        0 => Scalar::Zero,
        1 | 2 => Scalar::g(rand_q(r, 6)),
        _ => Scalar::t(rand_q(r, 6)),
    }
}

fn rand_poly1(r: &mut ChaCha8Rng, max_deg: i64, ghost_p: f64) -> Polynomial {
    loop {
        let deg = r.gen_range(0..=max_deg);
        let mut terms = Vec::new();
        for i in 0..=deg {
            if r.gen_bool(0.7) {
                let v = q(r.gen_range(-8..=8));
                terms.push((i, if r.gen_bool(ghost_p) { Scalar::g(v) } else { Scalar::t(v) }));
            }
        }
        if !terms.is_empty() {
            return Polynomial::univariate(terms);
        }
    }
}

fn rand_poly2(r: &mut ChaCha8Rng, max_deg: i64, terms: usize, ghost_p: f64) -> Polynomial {
    let mut items = Vec::new();
    for _ in 0..terms {
        let e = vec![r.gen_range(0..=max_deg), r.gen_range(0..=max_deg)];
        let v = q(r.gen_range(-6..=6));
        items.push((e, if r.gen_bool(ghost_p) { Scalar::g(v) } else { Scalar::t(v) }));
    }
    Polynomial::from_terms(2, false, items).expect("exponents are non-negative")
}

fn axioms(r: &mut ChaCha8Rng) -> Vec<String> {
    let (a, b, c) = (rand_scalar(r), rand_scalar(r), rand_scalar(r));
    let m = r.gen_range(2..=5);
    let mut bad = Vec::new();
    let mut law = |name: &str, ok: bool| {
        if !ok {
            bad.push(format!("{name}: a={a} b={b} c={c} m={m}"));
        }
    };
    law("commutativity", &a + &b == &b + &a && &a * &b == &b * &a);
    law("associativity", &(&a + &b) + &c == &a + &(&b + &c) && &(&a * &b) * &c == &a * &(&b * &c));
    law("distributivity", &a * &(&b + &c) == &(&a * &b) + &(&a * &c));
    law("supertropicality", &a + &a == a.nu());
    law("ghost map", (&a * &b).nu() == &a.nu() * &b && (&a + &b).nu() == &a.nu() + &b.nu());
    law("bipotence", a.cmp_nu(&b) == std::cmp::Ordering::Equal || [&a, &b].contains(&&(&a + &b)));
    let mp = |x: &Scalar| x.powi(m).expect("positive powers exist");
    law("frobenius", mp(&(&a + &b)) == &mp(&a) + &mp(&b));
    let reverses = a.is_zero() || b.is_zero() || a.dual().cmp_nu(&b.dual()) == b.cmp_nu(&a);
    law("duality", a.dual().dual() == a && reverses);
    law("surpassing", (&a + &b.nu()).ghost_surpasses(&a) && a.ghost_surpasses(&a));
    bad
}

fn frobenius(r: &mut ChaCha8Rng, case: usize, m: Option<usize>) -> Result<Vec<String>, Error> {
    let m = m.map_or_else(|| r.gen_range(1..=4), |m| m as u32);
    let (f, g) = if case.is_multiple_of(2) {
        (rand_poly1(r, 5, 0.3), rand_poly1(r, 5, 0.3))
    } else {
        (rand_poly2(r, 3, 4, 0.3), rand_poly2(r, 3, 4, 0.3))
    };
    let grid = sample_points(f.arity(), SAMPLE_COUNT);
    let frob = frobenius_power(&f, m);
    let mut bad = Vec::new();
    if !equal_on_samples(&frob, &f.pow(m), &grid)? || !e_equivalent(&frob, &f.pow(m)) {
        bad.push(format!("power: f={f} m={m}"));
    }
    if !equal_on_samples(&(&f + &g).pow(m), &(&f.pow(m) + &g.pow(m)), &grid)? {
        bad.push(format!("sum: f={f} g={g} m={m}"));
    }
    Ok(bad)
}

fn factorization(r: &mut ChaCha8Rng, case: usize) -> Result<Vec<String>, Error> {
    let mut bad = Vec::new();
    let ghost_p = [0.0, 0.3, 0.6, 1.0][case % 4];
    let f = rand_poly1(r, 8, ghost_p);
    let fact = factor_minimal_ghosts_1d(&f)?;
    if !verify(&f, &fact)? {
        bad.push(format!("expansion: {f} -> {fact}"));
    }
    if root_set_of_factorization(&fact) != root_set_1d(&f)? {
        bad.push(format!("root set: {f} -> {fact}"));
    }
    let k = r.gen_range(1..=6);
    let mut roots: Vec<Q> = (0..k).map(|_| q(r.gen_range(-9..=9))).collect();
    roots.sort();
    let product = roots.iter().fold(Polynomial::one(1), |acc, a| {
        &acc * &Polynomial::univariate([(1, Scalar::one()), (0, Scalar::t(a.clone()))])
    });
    let mut got = Vec::new();
    for fac in factor_tangible_1d(&product)?.factors {
        match fac {
            Factor::TangibleLinear { a, mult } => got.extend(std::iter::repeat_n(a, mult as usize)),
            other => {
                bad.push(format!("tangible: {product} has factor {other}"));
                return Ok(bad);
            }
        }
    }
    if got != roots {
        bad.push(format!("tangible: {product} gave roots {got:?}"));
    }
    Ok(bad)
}

fn nullstellensatz(r: &mut ChaCha8Rng) -> Result<Vec<String>, Error> {
    let (k, g, k2, g2) = (rand_poly1(r, 3, 0.3), rand_poly1(r, 3, 0.3), rand_poly1(r, 3, 0.3), rand_poly1(r, 3, 0.3));
    let noise = rand_poly1(r, 4, 0.0).nu();
    let m = r.gen_range(1..=3);
    let f = &(&(&k * &g) + &(&k2 * &g2)) + &noise;
    let fm1 = f.pow(m - 1);
    let pairs = vec![(&fm1 * &k, g.clone()), (&fm1 * &k2, g2.clone())];
    let mut bad = Vec::new();
    if verify_radical_membership(&f, m, &pairs)? && !preceq_comp(&f, &[g.clone(), g2.clone()])?.holds {
        bad.push(format!("component condition: f={f} m={m} g1={g} g2={g2}"));
    }
    Ok(bad)
}

fn vandermonde(r: &mut ChaCha8Rng, m: usize) -> Result<Vec<String>, Error> {
    let mut fs = Vec::with_capacity(m);
    for _ in 0..m {
        let e = vec![r.gen_range(-2..=2), r.gen_range(-2..=2)];
        let v = q([-1, 0, 1, 2][r.gen_range(0..4)]);
        fs.push(Polynomial::from_terms(2, true, [(e, Scalar::t(v))])?);
    }
    let rep = verify_permanent_identity(&fs)?;
    let mut bad = Vec::new();
    if !rep.holds() {
        let names: Vec<String> = fs.iter().map(ToString::to_string).collect();
        bad.push(format!("family: {}", names.join(" ; ")));
    }
    Ok(bad)
}

fn geometry(r: &mut ChaCha8Rng) -> Result<Vec<String>, Error> {
    let mut terms = Vec::new();
    for i in 0..=3i64 {
        for j in 0..=3 - i {
            terms.push((vec![i, j], Scalar::t(q(r.gen_range(-5..=5)))));
        }
    }
    let f = Polynomial::from_terms(2, false, terms)?;
    let curve = corner_locus_2d(&f, Convention::Max)?;
    let mut bad = Vec::new();
    if !duality_check(&curve, &newton_subdivision(&f)?) {
        bad.push(format!("duality: {f}"));
    }
    if !balancing_check(&curve) {
        bad.push(format!("balancing: {f}"));
    }
    if !dual_curve(&f.dual())?.same_locus(&curve.negated()) {
        bad.push(format!("dual curve: {f}"));
    }
    Ok(bad)
}
