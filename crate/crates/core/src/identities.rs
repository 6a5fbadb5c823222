//! Identities in the semiring of polynomial functions.
//!
//! Powers of sums split into sums of powers, and the product of all pairwise
//! binomials of a family agrees with the product of its elementary symmetric
//! sums and with the permanent of its Vandermonde matrix.

use itertools::Itertools;
use num_integer::Integer;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::poly::{Exp, Polynomial};
use crate::scalar::{q, qf, Scalar};
use crate::shape::essential_part;

/// Largest family accepted by [`permanent_bruteforce`].
pub const MAX_PERMANENT_SIZE: usize = 6;

/// Number of points in the comparison grid of [`sample_points`].
pub const SAMPLE_COUNT: usize = 300;

/// `Σ h^m` over the terms `h` of `f`.
pub fn frobenius_power(f: &Polynomial, m: u32) -> Polynomial {
    let mut acc = Polynomial::zero(f.arity());
    for (e, c) in f.terms() {
        acc = &acc + &Polynomial::monomial(e.clone(), c.clone()).pow(m);
    }
    acc.with_laurent(f.is_laurent()).expect("powers keep the sign of exponents")
}

/// Splits `f` into single-term polynomials.
pub fn monomials(f: &Polynomial) -> Vec<Polynomial> {
    f.terms().map(|(e, c)| Polynomial::monomial(e.clone(), c.clone()).with_laurent(f.is_laurent()).unwrap()).collect()
}

fn product<'a>(items: impl IntoIterator<Item = &'a Polynomial>, arity: usize) -> Result<Polynomial> {
    items.into_iter().try_fold(Polynomial::one(arity), |acc, p| acc.checked_mul(p))
}

fn check_family(fs: &[Polynomial]) -> Result<usize> {
    if fs.len() < 2 {
        return Err(Error::Invalid("need at least two functions".into()));
    }
    let n = fs[0].arity();
    if let Some(bad) = fs.iter().find(|f| f.arity() != n) {
        return Err(Error::ArityMismatch(n, bad.arity()));
    }
    Ok(n)
}

/// `g_k = Σ` over `k`-subsets of the product, for `k = 1..m-1`.
pub fn elementary_products(fs: &[Polynomial]) -> Result<Vec<Polynomial>> {
    let n = check_family(fs)?;
    let mut out = Vec::with_capacity(fs.len() - 1);
    for k in 1..fs.len() {
        let mut g = Polynomial::zero(n);
        for subset in fs.iter().combinations(k) {
            g = g.checked_add(&product(subset, n)?)?;
        }
        out.push(g);
    }
    Ok(out)
}

/// `∏_{i<j} (f_i + f_j)`.
pub fn vandermonde_lhs(fs: &[Polynomial]) -> Result<Polynomial> {
    let n = check_family(fs)?;
    let mut acc = Polynomial::one(n);
    for (a, b) in fs.iter().tuple_combinations() {
        acc = acc.checked_mul(&a.checked_add(b)?)?;
    }
    Ok(acc)
}

/// Permanent of the Vandermonde matrix `(f_i^(j-1))` by summing over all
/// permutations.
pub fn permanent_bruteforce(fs: &[Polynomial]) -> Result<Polynomial> {
    let n = check_family(fs)?;
    if fs.len() > MAX_PERMANENT_SIZE {
        return Err(Error::Invalid(format!("permanent limited to {MAX_PERMANENT_SIZE} functions")));
    }
    let m = fs.len();
    let powers: Vec<Vec<Polynomial>> = fs.iter().map(|f| (0..m as u32).map(|k| f.pow(k)).collect()).collect();
    let mut acc = Polynomial::zero(n);
    for sigma in (0..m).permutations(m) {
        let term = product(sigma.iter().enumerate().map(|(i, &s)| &powers[i][s]), n)?;
        acc = acc.checked_add(&term)?;
    }
    Ok(acc)
}

/// Deterministic tangible points with small rational coordinates.
pub fn sample_points(arity: usize, count: usize) -> Vec<Vec<Scalar>> {
    const PRIMES: [i64; 8] = [7, 11, 13, 17, 19, 23, 29, 31];
    (0..count as i64)
        .map(|k| {
            (0..arity)
                .map(|j| {
                    let p = PRIMES[j % PRIMES.len()] + 2 * (j / PRIMES.len()) as i64;
                    Scalar::t(qf((k * p + 5 * j as i64) % 97 - 48, 4))
                })
                .collect()
        })
        .collect()
}

/// Equal values at every sample point.
pub fn equal_on_samples(f: &Polynomial, g: &Polynomial, points: &[Vec<Scalar>]) -> Result<bool> {
    for p in points {
        if f.eval(p)? != g.eval(p)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Each `k` largest entries sum to at most `(m-1) + … + (m-k)`.
fn admissible(tuple: &[usize]) -> bool {
    let m = tuple.len();
    let mut sorted = tuple.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let mut sum = 0;
    (1..=m).all(|k| {
        sum += sorted[k - 1];
        sum <= k * m - k * (k + 1) / 2
    })
}

/// Expands the pairwise product by choices and checks that every exponent
/// tuple is admissible and that non-permutation tuples give inessential terms.
fn admissible_support(fs: &[Polynomial], ess: &Polynomial) -> bool {
    let m = fs.len();
    let pairs: Vec<(usize, usize)> = (0..m).tuple_combinations().collect();
    let single: Vec<(&Exp, &Scalar)> = fs.iter().map(|f| f.terms().next().unwrap()).collect();
    for mask in 0u64..(1u64 << pairs.len()) {
        let mut tuple = vec![0usize; m];
        for (bit, &(i, j)) in pairs.iter().enumerate() {
            tuple[if mask >> bit & 1 == 1 { j } else { i }] += 1;
        }
        if !admissible(&tuple) {
            return false;
        }
        let mut sorted = tuple.clone();
        sorted.sort_unstable();
        if sorted.iter().enumerate().all(|(k, &v)| k == v) {
            continue;
        }
        let mut exp = vec![0i64; ess.arity()];
        let mut val = q(0);
        for (u, &k) in tuple.iter().enumerate() {
            for (x, y) in exp.iter_mut().zip(single[u].0) {
                *x += y * k as i64;
            }
            val += single[u].1.value().unwrap() * q(k as i64);
        }
        // The term is inessential unless the essential part has it with this value.
        if ess.coeff(&exp).value() == Some(&val) && !is_permutation_value(fs, &exp, &val) {
            return false;
        }
    }
    true
}

/// Some permutation term of the family has this exponent and value.
fn is_permutation_value(fs: &[Polynomial], exp: &Exp, val: &crate::scalar::Q) -> bool {
    let m = fs.len();
    let single: Vec<(&Exp, &Scalar)> = fs.iter().map(|f| f.terms().next().unwrap()).collect();
    (0..m).permutations(m).any(|sigma| {
        let mut e = vec![0i64; exp.len()];
        let mut v = q(0);
        for (u, &k) in sigma.iter().enumerate() {
            for (x, y) in e.iter_mut().zip(single[u].0) {
                *x += y * k as i64;
            }
            v += single[u].1.value().unwrap() * q(k as i64);
        }
        e == *exp && v == *val
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermanentReport {
    pub m: usize,
    pub lhs: Polynomial,
    pub rhs: Polynomial,
    pub permanent: Option<Polynomial>,
    /// Agreement at every point of the sample grid.
    pub equal_as_functions: bool,
    /// Exact comparison of essential parts, for single-term families.
    pub equal_essential: Option<bool>,
    /// Internal check on the exponent tuples of the pairwise product.
    pub admissible_support: Option<bool>,
}

impl PermanentReport {
    pub fn holds(&self) -> bool {
        self.equal_as_functions && self.equal_essential != Some(false) && self.admissible_support != Some(false)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "m": self.m,
            "lhs": self.lhs.to_string(),
            "rhs": self.rhs.to_string(),
            "permanent": self.permanent.as_ref().map(ToString::to_string),
            "equal_as_functions": self.equal_as_functions,
            "verdict": if self.equal_essential.is_some() { "exact" } else { "sampled" },
            "equal_essential": self.equal_essential,
            "admissible_support": self.admissible_support,
        })
    }
}

/// Compares the pairwise product, the product of elementary sums and the
/// brute-force permanent.
pub fn verify_permanent_identity(fs: &[Polynomial]) -> Result<PermanentReport> {
    let n = check_family(fs)?;
    let lhs = vandermonde_lhs(fs)?;
    let rhs = product(&elementary_products(fs)?, n)?;
    let permanent = if fs.len() <= MAX_PERMANENT_SIZE { Some(permanent_bruteforce(fs)?) } else { None };
    let points = sample_points(n, SAMPLE_COUNT);
    let mut equal_as_functions = true;
    for pt in &points {
        let v = lhs.eval(pt)?;
        if rhs.eval(pt)? != v || permanent.as_ref().map(|p| p.eval(pt)).transpose()?.is_some_and(|w| w != v) {
            equal_as_functions = false;
            break;
        }
    }
    let all_monomials = fs.iter().all(Polynomial::is_monomial);
    let exact = all_monomials && !fs.iter().any(Polynomial::is_signed);
    let ess = exact.then(|| essential_part(&lhs));
    let equal_essential = ess.as_ref().map(|e| {
        let same = |p: &Polynomial| essential_part(p).same_terms(e);
        same(&rhs) && permanent.as_ref().is_none_or(same)
    });
    let admissible_support = ess.as_ref().map(|e| admissible_support(fs, e));
    Ok(PermanentReport { m: fs.len(), lhs, rhs, permanent, equal_as_functions, equal_essential, admissible_support })
}

/// Pairwise binomials of the terms of `f` and the cofactors `g_2 … g_{m-1}`,
/// so that `f` times the cofactors equals the product of the binomials.
pub fn binomial_envelope(f: &Polynomial) -> Result<(Vec<Polynomial>, Vec<Polynomial>)> {
    let fs = monomials(f);
    if fs.len() < 2 {
        return Err(Error::Invalid("need at least two terms".into()));
    }
    let binomials = fs.iter().tuple_combinations().map(|(a, b)| a + b).collect();
    let mut cofactors = elementary_products(&fs)?;
    cofactors.remove(0);
    Ok((binomials, cofactors))
}

/// Checks the envelope contract on the sample grid.
pub fn envelope_holds(f: &Polynomial, binomials: &[Polynomial], cofactors: &[Polynomial]) -> Result<bool> {
    let n = f.arity();
    let lhs = f.checked_mul(&product(cofactors, n)?)?;
    let rhs = product(binomials, n)?;
    equal_on_samples(&lhs, &rhs, &sample_points(n, SAMPLE_COUNT))
}

/// `f ~ Λ^j · base^power` for a polynomial with two essential terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinomialFactor {
    pub monomial: Polynomial,
    pub base: Polynomial,
    pub power: u32,
}

impl BinomialFactor {
    pub fn expand(&self) -> Polynomial {
        &self.monomial * &self.base.pow(self.power)
    }
}

/// Writes a binomial as a monomial times a power of a binomial whose
/// exponent difference is primitive.
pub fn binomial_factor(f: &Polynomial) -> Result<BinomialFactor> {
    let ess = essential_part(f);
    if ess.len() != 2 {
        return Err(Error::Invalid("the essential part must have exactly two terms".into()));
    }
    let mut it = ess.terms();
    let (j, beta) = it.next().unwrap();
    let (i, alpha) = it.next().unwrap();
    let diff: Exp = i.iter().zip(j).map(|(a, b)| a - b).collect();
    let d = diff.iter().fold(0i64, |g, x| g.gcd(x));
    let inv = qf(1, d);
    let top: Exp = diff.iter().map(|x| x / d).collect();
    let laurent = f.is_laurent() || top.iter().any(|x| *x < 0);
    let base =
        Polynomial::from_terms(f.arity(), laurent, [(top, alpha.pow(&inv)?), (vec![0; f.arity()], beta.pow(&inv)?)])?;
    let monomial = Polynomial::monomial(j.clone(), Scalar::one());
    Ok(BinomialFactor { monomial, base, power: d as u32 })
}
