//! Univariate factorization into linear and quadratic factors.
//!
//! Every nonzero univariate polynomial agrees, after passing to its full
//! closure, with a product of a scalar, a power of the indeterminate and
//! factors of the five kinds in [`Factor`]. The canonical form keeps the
//! number of ghost quadratics minimal.

use std::cmp::Ordering;
use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::poly::{scalar_to_json, Polynomial};
use crate::roots::{Interval1D, RootSet1D};
use crate::scalar::{fmt_q, Scalar, Q};
use crate::shape::{corner_roots_1d, e_equivalent, essential_part, full_closure_1d, upper_hull_1d};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Factor {
    /// `x^power`; negative powers occur for Laurent input.
    Monomial { power: i64 },
    /// `(x + a)^mult`.
    TangibleLinear { a: Q, mult: u32 },
    /// `x + a^ν`, vanishing on `(-inf, a]` and at zero.
    RightGhost { a: Q },
    /// `x^ν + b`, vanishing on `[b, +inf)`.
    LeftGhost { b: Q },
    /// `x^2 + hi^ν x + lo·hi`, vanishing on `[lo, hi]`.
    GhostQuadratic { lo: Q, hi: Q },
}

impl Factor {
    fn rank(&self) -> u8 {
        match self {
            Factor::Monomial { .. } => 0,
            Factor::LeftGhost { .. } => 1,
            Factor::GhostQuadratic { .. } => 2,
            Factor::TangibleLinear { .. } => 3,
            Factor::RightGhost { .. } => 4,
        }
    }

    fn key(&self) -> Option<&Q> {
        match self {
            Factor::Monomial { .. } => None,
            Factor::TangibleLinear { a, .. } | Factor::RightGhost { a } => Some(a),
            Factor::LeftGhost { b } => Some(b),
            Factor::GhostQuadratic { lo, .. } => Some(lo),
        }
    }

    fn canonical_cmp(&self, other: &Factor) -> Ordering {
        self.rank().cmp(&other.rank()).then_with(|| self.key().cmp(&other.key()))
    }

    /// Degree of one copy, counted without multiplicity.
    pub fn base_degree(&self) -> i64 {
        match self {
            Factor::Monomial { power } => *power,
            Factor::GhostQuadratic { .. } => 2,
            _ => 1,
        }
    }

    /// Number of non-scalar factors this entry stands for.
    pub fn count(&self) -> u32 {
        match self {
            Factor::Monomial { power } => power.unsigned_abs() as u32,
            Factor::TangibleLinear { mult, .. } => *mult,
            _ => 1,
        }
    }

    /// A single copy as a polynomial.
    pub fn base_poly(&self) -> Polynomial {
        let x = |k: i64, c: Scalar| (vec![k], c);
        let terms = match self {
            Factor::Monomial { power } => return Polynomial::monomial(vec![*power], Scalar::one()),
            Factor::TangibleLinear { a, .. } => vec![x(1, Scalar::one()), x(0, Scalar::t(a.clone()))],
            Factor::RightGhost { a } => vec![x(1, Scalar::one()), x(0, Scalar::g(a.clone()))],
            Factor::LeftGhost { b } => vec![x(1, Scalar::one().nu()), x(0, Scalar::t(b.clone()))],
            Factor::GhostQuadratic { lo, hi } => {
                vec![x(2, Scalar::one()), x(1, Scalar::g(hi.clone())), x(0, Scalar::t(lo + hi))]
            }
        };
        Polynomial::from_terms(1, false, terms).expect("valid factor")
    }

    /// Tangible roots of this factor.
    pub fn root_set(&self) -> RootSet1D {
        match self {
            Factor::Monomial { power } => RootSet1D { intervals: vec![], zero_included: *power > 0 },
            Factor::TangibleLinear { a, .. } => {
                RootSet1D { intervals: vec![Interval1D::point(a.clone())], zero_included: false }
            }
            Factor::RightGhost { a } => RootSet1D {
                intervals: vec![Interval1D { lo: None, hi: Some(a.clone()), lo_closed: false, hi_closed: true }],
                zero_included: true,
            },
            Factor::LeftGhost { b } => RootSet1D {
                intervals: vec![Interval1D { lo: Some(b.clone()), hi: None, lo_closed: true, hi_closed: false }],
                zero_included: false,
            },
            Factor::GhostQuadratic { lo, hi } => RootSet1D {
                intervals: vec![Interval1D {
                    lo: Some(lo.clone()),
                    hi: Some(hi.clone()),
                    lo_closed: true,
                    hi_closed: true,
                }],
                zero_included: false,
            },
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Factor::Monomial { power } => json!({"kind": "monomial", "power": power, "mult": 1}),
            Factor::TangibleLinear { a, mult } => json!({"kind": "linear", "a": fmt_q(a), "mult": mult}),
            Factor::RightGhost { a } => json!({"kind": "rghost", "a": fmt_q(a), "mult": 1}),
            Factor::LeftGhost { b } => json!({"kind": "lghost", "b": fmt_q(b), "mult": 1}),
            Factor::GhostQuadratic { lo, hi } => json!({"kind": "quad", "lo": fmt_q(lo), "hi": fmt_q(hi), "mult": 1}),
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::Monomial { power: 1 } => write!(f, "x"),
            Factor::Monomial { power } => write!(f, "x^{power}"),
            Factor::TangibleLinear { mult, .. } if *mult > 1 => write!(f, "({})^{mult}", self.base_poly()),
            _ => write!(f, "({})", self.base_poly()),
        }
    }
}

/// A scalar times a product of factors, kept in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub scalar: Scalar,
    pub factors: Vec<Factor>,
}

impl Factorization {
    /// Sorts into canonical order and merges equal tangible linears.
    pub fn new(scalar: Scalar, mut factors: Vec<Factor>) -> Factorization {
        factors.retain(|f| !matches!(f, Factor::Monomial { power: 0 } | Factor::TangibleLinear { mult: 0, .. }));
        factors.sort_by(Factor::canonical_cmp);
        let mut out: Vec<Factor> = Vec::with_capacity(factors.len());
        for f in factors {
            match (out.last_mut(), &f) {
                (Some(Factor::TangibleLinear { a, mult }), Factor::TangibleLinear { a: b, mult: m }) if a == b => {
                    *mult += m
                }
                (Some(Factor::Monomial { power }), Factor::Monomial { power: p }) => *power += p,
                _ => out.push(f),
            }
        }
        Factorization { scalar, factors: out }
    }

    /// Number of non-scalar factors counted with multiplicity.
    pub fn factor_count(&self) -> u32 {
        self.factors.iter().map(Factor::count).sum()
    }

    pub fn ghost_quadratic_count(&self) -> usize {
        self.factors.iter().filter(|f| matches!(f, Factor::GhostQuadratic { .. })).count()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "scalar": scalar_to_json(&self.scalar),
            "factors": self.factors.iter().map(Factor::to_json).collect::<Vec<_>>(),
            "text": self.to_string(),
        })
    }
}

impl fmt::Display for Factorization {
    /// Juxtaposed factors that parse back to the expansion.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut prefix: Vec<String> = Vec::new();
        if self.scalar != Scalar::one() {
            prefix.push(self.scalar.to_string());
        }
        let mut grouped = String::new();
        for fac in &self.factors {
            match fac {
                Factor::Monomial { .. } => prefix.push(fac.to_string()),
                _ => grouped.push_str(&fac.to_string()),
            }
        }
        match (prefix.is_empty(), grouped.is_empty()) {
            (true, true) => write!(f, "{}", Scalar::one()),
            (true, false) => write!(f, "{grouped}"),
            (false, true) => write!(f, "{}", prefix.join("*")),
            (false, false) => write!(f, "{}*{grouped}", prefix.join("*")),
        }
    }
}

fn check_input(f: &Polynomial) -> Result<()> {
    if f.arity() != 1 {
        return Err(Error::WrongArity { expected: 1, got: f.arity() });
    }
    if f.is_signed() {
        return Err(Error::SignedModel);
    }
    if f.is_zero() {
        return Err(Error::Invalid("cannot factor the zero polynomial".into()));
    }
    Ok(())
}

/// Factorization of a polynomial whose essential part is tangible, as a
/// product of tangible linear factors over its corner roots.
pub fn factor_tangible_1d(f: &Polynomial) -> Result<Factorization> {
    check_input(f)?;
    let ess = essential_part(f);
    if ess.terms().any(|(_, c)| !c.is_tangible()) {
        return Err(Error::Invalid("the essential part has ghost coefficients".into()));
    }
    let (low, high) = ess.degree_range().unwrap();
    let lead = ess.coeff1(high);
    let mut factors = vec![Factor::Monomial { power: low }];
    for r in corner_roots_1d(&ess)? {
        factors.push(Factor::TangibleLinear { a: r.value, mult: r.multiplicity as u32 });
    }
    Ok(Factorization::new(Scalar::t(lead.value().unwrap().clone()), factors))
}

/// Roots of the hull edges `from..to`, repeated by multiplicity, ascending.
fn edge_roots(edges: &[crate::shape::HullEdge]) -> Vec<Q> {
    edges.iter().flat_map(|e| std::iter::repeat_n(e.root(), e.length as usize)).collect()
}

fn linears(roots: &[Q]) -> impl Iterator<Item = Factor> + '_ {
    roots.iter().map(|a| Factor::TangibleLinear { a: a.clone(), mult: 1 })
}

/// The factorization with the fewest ghost factors.
///
/// Works on the full closure. Ghost runs at the top or bottom of the hull
/// become a single left or right ghost; each stretch between consecutive
/// tangible vertices becomes one ghost quadratic over its extreme roots with
/// tangible linears for the roots in between.
pub fn factor_minimal_ghosts_1d(f: &Polynomial) -> Result<Factorization> {
    check_input(f)?;
    let hull = upper_hull_1d(f)?;
    let verts = &hull.vertices;
    let last = verts.len() - 1;
    let lead = f.coeff1(verts[last].exp);
    let mut scalar = Scalar::t(lead.value().unwrap().clone());
    let mut factors = vec![Factor::Monomial { power: verts[0].exp }];
    let tangible: Vec<usize> = (0..=last).filter(|&i| f.coeff1(verts[i].exp).is_tangible()).collect();

    if tangible.is_empty() {
        let roots = edge_roots(&hull.edges);
        match roots.len() {
            0 | 1 => {
                scalar = lead;
                factors.extend(linears(&roots));
            }
            n => {
                factors.push(Factor::LeftGhost { b: roots[0].clone() });
                factors.push(Factor::RightGhost { a: roots[n - 1].clone() });
                factors.extend(linears(&roots[1..n - 1]));
            }
        }
        return Ok(Factorization::new(scalar, factors));
    }

    let (tmin, tmax) = (tangible[0], *tangible.last().unwrap());
    if tmin > 0 {
        let roots = edge_roots(&hull.edges[..tmin]);
        let (top, rest) = roots.split_last().unwrap();
        factors.push(Factor::RightGhost { a: top.clone() });
        factors.extend(linears(rest));
    }
    if tmax < last {
        let roots = edge_roots(&hull.edges[tmax..]);
        let (bottom, rest) = roots.split_first().unwrap();
        factors.push(Factor::LeftGhost { b: bottom.clone() });
        factors.extend(linears(rest));
    }
    for w in tangible.windows(2) {
        let roots = edge_roots(&hull.edges[w[0]..w[1]]);
        let (lo, hi) = (roots.first().unwrap(), roots.last().unwrap());
        if lo == hi {
            factors.push(Factor::TangibleLinear { a: lo.clone(), mult: roots.len() as u32 });
        } else {
            factors.push(Factor::GhostQuadratic { lo: lo.clone(), hi: hi.clone() });
            factors.extend(linears(&roots[1..roots.len() - 1]));
        }
    }
    Ok(Factorization::new(scalar, factors))
}

/// Product of all factors and the scalar.
pub fn expand(fact: &Factorization) -> Polynomial {
    let mut acc = Polynomial::constant(1, fact.scalar.clone());
    for f in &fact.factors {
        let base = f.base_poly();
        let m = match f {
            Factor::TangibleLinear { mult, .. } => *mult,
            _ => 1,
        };
        acc = &acc * &base.pow(m);
    }
    acc
}

/// The expansion and `f` have the same full closure as functions.
pub fn verify(f: &Polynomial, fact: &Factorization) -> Result<bool> {
    let lhs = full_closure_1d(&expand(fact))?;
    let rhs = full_closure_1d(f)?;
    Ok(e_equivalent(&lhs, &rhs))
}

/// Exponents at which the full closures of `f` and `g` differ, with the
/// coefficient of each closure.
pub fn closure_mismatches(f: &Polynomial, g: &Polynomial) -> Result<Vec<(i64, Scalar, Scalar)>> {
    let (a, b) = (full_closure_1d(f)?, full_closure_1d(g)?);
    let mut exps: Vec<i64> = a.terms().chain(b.terms()).map(|(e, _)| e[0]).collect();
    exps.sort();
    exps.dedup();
    Ok(exps.into_iter().filter(|&k| a.coeff1(k) != b.coeff1(k)).map(|k| (k, a.coeff1(k), b.coeff1(k))).collect())
}

/// Total lattice length of the hull edges whose corner root is `a`.
pub fn multiplicity(f: &Polynomial, a: &Q) -> Result<u32> {
    Ok(corner_roots_1d(f)?.into_iter().filter(|r| r.value == *a).map(|r| r.multiplicity as u32).sum())
}

/// No factorization with two or more non-scalar factors exists.
pub fn is_e_irreducible_1d(f: &Polynomial) -> Result<bool> {
    Ok(factor_minimal_ghosts_1d(f)?.factor_count() <= 1)
}

/// Union of the root sets of the factors, including a ghost scalar.
pub fn root_set_of_factorization(fact: &Factorization) -> RootSet1D {
    if fact.scalar.in_ghost_ideal() {
        return RootSet1D { intervals: vec![Interval1D::open(None, None)], zero_included: true };
    }
    fact.factors.iter().fold(RootSet1D::default(), |acc, f| acc.union(&f.root_set()))
}
