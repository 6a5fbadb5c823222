//! Sparse (Laurent) polynomials over layered scalars.
//!
//! A polynomial is a map from exponent vectors to nonzero coefficients, kept in
//! lexicographic order. Every operation returns a fresh canonical value.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::scalar::{fmt_q, parse_q, q, Layer, Scalar, Q};

/// Exponent vector; its length is the arity of the owning polynomial.
pub type Exp = Vec<i64>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    arity: usize,
    laurent: bool,
    terms: BTreeMap<Exp, Scalar>,
}

impl Polynomial {
    /// The zero polynomial. Panics when `arity == 0`.
    pub fn zero(arity: usize) -> Polynomial {
        assert!(arity >= 1, "polynomials need at least one indeterminate");
        Polynomial { arity, laurent: false, terms: BTreeMap::new() }
    }

    pub fn constant(arity: usize, c: Scalar) -> Polynomial {
        Polynomial::monomial(vec![0; arity], c)
    }

    pub fn one(arity: usize) -> Polynomial {
        Polynomial::constant(arity, Scalar::one())
    }

    /// Single term; negative exponents set the Laurent flag.
    pub fn monomial(exp: Exp, c: Scalar) -> Polynomial {
        let mut p = Polynomial::zero(exp.len());
        p.laurent = exp.iter().any(|&e| e < 0);
        if !c.is_zero() {
            p.terms.insert(exp, c);
        }
        p
    }

    /// The indeterminate with zero-based index `k`.
    pub fn var(arity: usize, k: usize) -> Polynomial {
        let mut e = vec![0; arity];
        e[k] = 1;
        Polynomial::monomial(e, Scalar::one())
    }

    /// Builds a polynomial, adding coefficients of repeated exponents.
    pub fn from_terms<I>(arity: usize, laurent: bool, terms: I) -> Result<Polynomial>
    where
        I: IntoIterator<Item = (Exp, Scalar)>,
    {
        let mut p = Polynomial::zero(arity);
        p.laurent = laurent;
        for (e, c) in terms {
            if e.len() != arity {
                return Err(Error::ArityMismatch(arity, e.len()));
            }
            if !laurent && e.iter().any(|&x| x < 0) {
                return Err(Error::NegativeExponent);
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    /// Univariate polynomial from `(exponent, coefficient)` pairs.
    pub fn univariate<I>(terms: I) -> Polynomial
    where
        I: IntoIterator<Item = (i64, Scalar)>,
    {
        let terms: Vec<(Exp, Scalar)> = terms.into_iter().map(|(e, c)| (vec![e], c)).collect();
        let laurent = terms.iter().any(|(e, _)| e[0] < 0);
        Polynomial::from_terms(1, laurent, terms).expect("univariate terms are well formed")
    }

    fn add_term(&mut self, e: Exp, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.get(&e) {
            Some(old) => old + &c,
            None => c,
        };
        self.terms.insert(e, sum);
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_laurent(&self) -> bool {
        self.laurent
    }

    /// Same terms with the Laurent flag set or cleared.
    pub fn with_laurent(mut self, laurent: bool) -> Result<Polynomial> {
        if !laurent && self.terms.keys().flatten().any(|&e| e < 0) {
            return Err(Error::NegativeExponent);
        }
        self.laurent = laurent;
        Ok(self)
    }

    /// Equal terms, ignoring the Laurent flag.
    pub fn same_terms(&self, other: &Polynomial) -> bool {
        self.arity == other.arity && self.terms == other.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Terms in ascending lexicographic order of exponents.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exp, &Scalar)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &[i64]) -> Scalar {
        self.terms.get(e).cloned().unwrap_or(Scalar::Zero)
    }

    /// Coefficient of `λ^i` in a univariate polynomial.
    pub fn coeff1(&self, i: i64) -> Scalar {
        self.coeff(&[i])
    }

    /// True when some tangible coefficient carries a sign tag.
    pub fn is_signed(&self) -> bool {
        self.terms.values().any(Scalar::is_signed)
    }

    /// Largest and smallest exponent of a nonzero univariate polynomial.
    pub fn degree_range(&self) -> Option<(i64, i64)> {
        let lo = self.terms.keys().next()?[0];
        let hi = self.terms.keys().next_back()?[0];
        Some((lo, hi))
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_arity(other)?;
        let mut out = self.clone();
        out.laurent |= other.laurent;
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_arity(other)?;
        let mut out = Polynomial::zero(self.arity);
        out.laurent = self.laurent || other.laurent;
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Exp = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        Ok(out)
    }

    fn same_arity(&self, other: &Polynomial) -> Result<()> {
        if self.arity == other.arity {
            Ok(())
        } else {
            Err(Error::ArityMismatch(self.arity, other.arity))
        }
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &Scalar) -> Polynomial {
        let mut out = Polynomial::zero(self.arity);
        out.laurent = self.laurent;
        for (e, a) in &self.terms {
            out.add_term(e.clone(), a * c);
        }
        out
    }

    /// `m`-th power by repeated squaring; `m == 0` gives the unit.
    pub fn pow(&self, m: u32) -> Polynomial {
        let mut result = Polynomial::one(self.arity);
        result.laurent = self.laurent;
        let mut base = self.clone();
        let mut m = m;
        while m > 0 {
            if m & 1 == 1 {
                result = &result * &base;
            }
            m >>= 1;
            if m > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Evaluates at a point given by one scalar per indeterminate.
    pub fn eval(&self, point: &[Scalar]) -> Result<Scalar> {
        if point.len() != self.arity {
            return Err(Error::ArityMismatch(self.arity, point.len()));
        }
        let mut acc = Scalar::Zero;
        for (e, c) in &self.terms {
            acc = &acc + &eval_monomial(c, e, point)?;
        }
        Ok(acc)
    }

    /// Evaluation in the order-reversed semifield, where the smaller value wins.
    pub fn eval_min(&self, point: &[Scalar]) -> Result<Scalar> {
        if point.len() != self.arity {
            return Err(Error::ArityMismatch(self.arity, point.len()));
        }
        let mut acc = Scalar::Zero;
        for (e, c) in &self.terms {
            acc = acc.add_min(&eval_monomial(c, e, point)?);
        }
        Ok(acc)
    }

    /// Substitutes `a` for the indeterminate `k`.
    ///
    /// The result has one indeterminate fewer, except that a univariate input
    /// yields a univariate constant.
    pub fn specialize(&self, k: usize, a: &Scalar) -> Result<Polynomial> {
        if k >= self.arity {
            return Err(Error::Invalid(format!("no indeterminate {k} in arity {}", self.arity)));
        }
        let arity = if self.arity == 1 { 1 } else { self.arity - 1 };
        let mut out = Polynomial::zero(arity);
        out.laurent = self.laurent;
        for (e, c) in &self.terms {
            let factor = pow_coord(a, e[k])?;
            let mut rest: Exp = e.iter().enumerate().filter(|&(i, _)| i != k).map(|(_, &x)| x).collect();
            if rest.is_empty() {
                rest.push(0);
            }
            out.add_term(rest, c * &factor);
        }
        Ok(out)
    }

    /// True when the indeterminate `k` divides every term.
    pub fn var_divides(&self, k: usize) -> bool {
        self.terms.keys().all(|e| e[k] > 0)
    }

    fn filter_layer(&self, layer: Layer) -> Polynomial {
        let mut out = Polynomial::zero(self.arity);
        out.laurent = self.laurent;
        out.terms =
            self.terms.iter().filter(|(_, c)| c.layer() == layer).map(|(e, c)| (e.clone(), c.clone())).collect();
        out
    }

    pub fn tangible_part(&self) -> Polynomial {
        self.filter_layer(Layer::Tangible)
    }

    pub fn ghost_part(&self) -> Polynomial {
        self.filter_layer(Layer::Ghost)
    }

    /// Ghost image: every coefficient ghosted.
    pub fn nu(&self) -> Polynomial {
        self.map_coeffs(Scalar::nu)
    }

    /// Tangible lift: every ghost coefficient replaced by the tangible of equal value.
    pub fn tangible_lift(&self) -> Polynomial {
        self.map_coeffs(Scalar::tangible_lift)
    }

    fn map_coeffs(&self, f: impl Fn(&Scalar) -> Scalar) -> Polynomial {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = f(c);
        }
        out
    }

    /// Image under the duality isomorphism: `Σ a_i Λ^i ↦ Σ dual(a_i) Λ^-i`.
    pub fn dual(&self) -> Polynomial {
        let mut out = Polynomial::zero(self.arity);
        out.laurent = true;
        for (e, c) in &self.terms {
            out.terms.insert(e.iter().map(|x| -x).collect(), c.dual());
        }
        out
    }

    /// Splits off the componentwise minimal monomial `Λ^u`, so `f = Λ^u · g`
    /// and `g` has a term with all-zero exponent.
    pub fn laurent_shift(&self) -> (Polynomial, Polynomial) {
        if self.is_zero() {
            return (Polynomial::one(self.arity), self.clone());
        }
        let mut u = vec![i64::MAX; self.arity];
        for e in self.terms.keys() {
            for (m, x) in u.iter_mut().zip(e) {
                *m = (*m).min(*x);
            }
        }
        let mut rest = Polynomial::zero(self.arity);
        rest.laurent = self.laurent;
        for (e, c) in &self.terms {
            rest.terms.insert(e.iter().zip(&u).map(|(a, b)| a - b).collect(), c.clone());
        }
        let mono = Polynomial::monomial(u, Scalar::one());
        (mono, rest)
    }

    /// Multiplies by `Λ^shift`.
    pub fn shift(&self, shift: &[i64]) -> Polynomial {
        let mut out = Polynomial::zero(self.arity);
        for (e, c) in &self.terms {
            out.terms.insert(e.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone());
        }
        out.laurent = self.laurent || out.terms.keys().flatten().any(|&x| x < 0);
        out
    }

    /// JSON object `{"arity","laurent","terms":[{"exp","coef"}]}`.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self.terms.iter().map(|(e, c)| json!({"exp": e, "coef": scalar_to_json(c)})).collect();
        json!({"arity": self.arity, "laurent": self.laurent, "terms": terms})
    }

    pub fn from_json(v: &Value) -> Result<Polynomial> {
        let bad = |m: &str| Error::Invalid(format!("polynomial JSON: {m}"));
        let arity = v["arity"].as_u64().ok_or_else(|| bad("arity"))? as usize;
        if arity == 0 {
            return Err(bad("arity must be positive"));
        }
        let laurent = v["laurent"].as_bool().ok_or_else(|| bad("laurent"))?;
        let mut terms = Vec::new();
        for t in v["terms"].as_array().ok_or_else(|| bad("terms"))? {
            let e: Option<Exp> = t["exp"].as_array().and_then(|a| a.iter().map(Value::as_i64).collect());
            let e = e.ok_or_else(|| bad("exp"))?;
            terms.push((e, scalar_from_json(&t["coef"])?));
        }
        Polynomial::from_terms(arity, laurent, terms)
    }
}

fn pow_coord(a: &Scalar, e: i64) -> Result<Scalar> {
    if e == 0 {
        return Ok(Scalar::one());
    }
    if a.is_zero() && e < 0 {
        return Err(Error::PoleAtZero);
    }
    a.powi(e)
}

/// Value of the single term `c·Λ^e` at `point`.
pub fn eval_monomial(c: &Scalar, e: &[i64], point: &[Scalar]) -> Result<Scalar> {
    let mut v = c.clone();
    for (x, &k) in point.iter().zip(e) {
        v = &v * &pow_coord(x, k)?;
    }
    Ok(v)
}

/// `{"val":"p/q","layer":"t|g|z"}`, with `"tag"` for signed tangibles.
pub fn scalar_to_json(c: &Scalar) -> Value {
    use crate::scalar::Tag;
    match c {
        Scalar::Zero => json!({"val": "-inf", "layer": "z"}),
        Scalar::Tangible(v, Tag::Unit) => json!({"val": fmt_q(v), "layer": "t"}),
        Scalar::Tangible(v, t) => {
            json!({"val": fmt_q(v), "layer": "t", "tag": if *t == Tag::Pos { "+" } else { "-" }})
        }
        Scalar::Ghost(v) => json!({"val": fmt_q(v), "layer": "g"}),
    }
}

pub fn scalar_from_json(v: &Value) -> Result<Scalar> {
    use crate::scalar::Tag;
    let bad = || Error::Invalid("scalar JSON".into());
    let layer = v["layer"].as_str().ok_or_else(bad)?;
    if layer == "z" {
        return Ok(Scalar::Zero);
    }
    let val = v["val"].as_str().and_then(parse_q).ok_or_else(bad)?;
    match (layer, v["tag"].as_str()) {
        ("t", None) => Ok(Scalar::t(val)),
        ("t", Some("+")) => Ok(Scalar::Tangible(val, Tag::Pos)),
        ("t", Some("-")) => Ok(Scalar::Tangible(val, Tag::Neg)),
        ("g", None) => Ok(Scalar::g(val)),
        _ => Err(bad()),
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    /// Panics on arity mismatch; see [`Polynomial::checked_add`].
    fn add(self, other: &Polynomial) -> Polynomial {
        self.checked_add(other).expect("arity mismatch in polynomial addition")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    /// Panics on arity mismatch; see [`Polynomial::checked_mul`].
    fn mul(self, other: &Polynomial) -> Polynomial {
        self.checked_mul(other).expect("arity mismatch in polynomial multiplication")
    }
}

/// Variable name used by the renderer.
pub fn var_name(arity: usize, k: usize) -> String {
    if arity == 1 {
        "x".to_string()
    } else {
        format!("x{}", k + 1)
    }
}

impl fmt::Display for Polynomial {
    /// Highest term first, in the syntax accepted by the parser.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "ninf");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mut parts = Vec::new();
            let is_const = e.iter().all(|&x| x == 0);
            if is_const || *c != Scalar::one() {
                parts.push(c.to_string());
            }
            for (k, &x) in e.iter().enumerate() {
                match x {
                    0 => {}
                    1 => parts.push(var_name(self.arity, k)),
                    _ => parts.push(format!("{}^{}", var_name(self.arity, k), x)),
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

/// Exponent vector scaled by a rational, when the result stays integral.
pub(crate) fn scale_exp(e: &[i64], r: &Q) -> Option<Exp> {
    e.iter()
        .map(|&x| {
            let v = q(x) * r;
            if v.is_integer() {
                num_traits::ToPrimitive::to_i64(v.numer())
            } else {
                None
            }
        })
        .collect()
}
