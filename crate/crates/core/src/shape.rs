//! Essential parts, full closures and corner-root profiles.
//!
//! Every term is lifted to the point `(exponent, value)`. A term is essential
//! when it strictly dominates all others somewhere, which is the same as being
//! a vertex of the upper hull of the lifted points. Terms on the hull that are
//! not vertices are quasi-essential; the rest are inessential.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::lp::{feasible, find_point, Ineq};
use crate::poly::{Exp, Polynomial};
use crate::scalar::{q, Scalar, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialClass {
    Essential,
    QuasiEssential,
    Inessential,
}

/// A lifted term of a univariate polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftedPoint {
    pub exp: i64,
    pub height: Q,
}

/// Edge of a univariate upper hull between two consecutive vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HullEdge {
    pub from: i64,
    pub to: i64,
    pub slope: Q,
    pub length: i64,
}

impl HullEdge {
    /// The corner root carried by this edge.
    pub fn root(&self) -> Q {
        -self.slope.clone()
    }
}

/// Upper hull of the lifted terms of a univariate polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Hull1D {
    pub vertices: Vec<LiftedPoint>,
    pub edges: Vec<HullEdge>,
}

impl Hull1D {
    /// Height of the hull above exponent `k`, if `k` lies in its span.
    pub fn height_at(&self, k: i64) -> Option<Q> {
        let first = self.vertices.first()?;
        if self.vertices.len() == 1 {
            return (first.exp == k).then(|| first.height.clone());
        }
        let w = self.vertices.windows(2).find(|w| w[0].exp <= k && k <= w[1].exp)?;
        let (a, b) = (&w[0], &w[1]);
        Some(&a.height + (&b.height - &a.height) * q(k - a.exp) / q(b.exp - a.exp))
    }

    pub fn is_vertex(&self, k: i64) -> bool {
        self.vertices.iter().any(|v| v.exp == k)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EssentialProfile {
    pub classes: BTreeMap<Exp, MonomialClass>,
    /// Present for univariate input.
    pub hull: Option<Hull1D>,
}

/// One corner root with its multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CornerRoot {
    pub value: Q,
    pub multiplicity: i64,
}

fn require_univariate(f: &Polynomial) -> Result<()> {
    if f.arity() == 1 {
        Ok(())
    } else {
        Err(Error::WrongArity { expected: 1, got: f.arity() })
    }
}

fn height(c: &Scalar) -> Q {
    c.value().expect("stored coefficients are nonzero").clone()
}

/// Monotone-chain upper hull of the lifted terms.
pub fn upper_hull_1d(f: &Polynomial) -> Result<Hull1D> {
    require_univariate(f)?;
    let mut verts: Vec<LiftedPoint> = Vec::new();
    for (e, c) in f.terms() {
        let p = LiftedPoint { exp: e[0], height: height(c) };
        while verts.len() >= 2 {
            let a = &verts[verts.len() - 2];
            let b = &verts[verts.len() - 1];
            // Drop `b` unless it lies strictly above the segment from `a` to `p`.
            let cross = q(b.exp - a.exp) * (&p.height - &a.height) - (&b.height - &a.height) * q(p.exp - a.exp);
            if cross >= Q::from_integer(0.into()) {
                verts.pop();
            } else {
                break;
            }
        }
        verts.push(p);
    }
    let edges = verts
        .windows(2)
        .map(|w| HullEdge {
            from: w[0].exp,
            to: w[1].exp,
            slope: (&w[1].height - &w[0].height) / q(w[1].exp - w[0].exp),
            length: w[1].exp - w[0].exp,
        })
        .collect();
    Ok(Hull1D { vertices: verts, edges })
}

fn dominance_rows<'a>(f: &Polynomial, i: &Exp, others: impl Iterator<Item = &'a Exp>, strict: bool) -> Vec<Ineq> {
    let hi = height(&f.coeff(i));
    others
        .filter(|j| *j != i)
        .map(|j| {
            let coeffs = i.iter().zip(j).map(|(a, b)| q(a - b)).collect();
            Ineq::new(coeffs, &hi - height(&f.coeff(j)), strict)
        })
        .collect()
}

/// Probe points: the origin, far points along a few directions and a small grid.
fn probe_points(n: usize) -> Vec<Vec<Q>> {
    let mut pts = vec![vec![q(0); n]];
    for k in 0..n {
        for s in [-1000, 1000] {
            let mut p = vec![q(0); n];
            p[k] = q(s);
            pts.push(p);
        }
    }
    for j in 0..48i64 {
        pts.push((0..n as i64).map(|k| q(((j * (7 + 3 * k) + 5 * k) % 33) - 16) * q(1 + j % 5 * 40)).collect());
    }
    pts
}

/// The term that strictly wins at `x`, if there is one.
fn unique_winner<'a>(f: &'a Polynomial, x: &[Q]) -> Option<&'a Exp> {
    let mut best: Option<(Q, &Exp, bool)> = None;
    for (e, c) in f.terms() {
        let v = height(c) + e.iter().zip(x).map(|(a, t)| q(*a) * t).sum::<Q>();
        match &best {
            Some((b, _, _)) if &v < b => {}
            Some((b, _, _)) if &v == b => best = Some((v, e, false)),
            _ => best = Some((v, e, true)),
        }
    }
    best.and_then(|(_, e, unique)| unique.then_some(e))
}

/// Essential terms of a multivariate polynomial.
///
/// Only essential terms constrain dominance. Each term is tested against the
/// essential terms found so far; a point where it wins that test either
/// confirms it or exposes a new essential term, which is added and the test
/// repeated.
fn essential_exponents(f: &Polynomial) -> Vec<Exp> {
    let n = f.arity();
    let mut known: Vec<Exp> = Vec::new();
    for x in probe_points(n) {
        if let Some(w) = unique_winner(f, &x) {
            if !known.contains(w) {
                known.push(w.clone());
            }
        }
    }
    for (e, _) in f.terms() {
        while !known.contains(e) {
            let Some(x) = find_point(n, &dominance_rows(f, e, known.iter(), true)) else { break };
            match unique_winner(f, &x) {
                Some(w) => known.push(w.clone()),
                None => {
                    let all: Vec<&Exp> = f.terms().map(|(j, _)| j).collect();
                    if feasible(n, &dominance_rows(f, e, all.into_iter(), true)) {
                        known.push(e.clone());
                    }
                    break;
                }
            }
        }
    }
    known
}

/// Classifies every term of `f`.
pub fn classify_monomials(f: &Polynomial) -> EssentialProfile {
    if f.arity() == 1 {
        let hull = upper_hull_1d(f).expect("univariate");
        let classes = f
            .terms()
            .map(|(e, c)| {
                let class = if hull.is_vertex(e[0]) {
                    MonomialClass::Essential
                } else if hull.height_at(e[0]).as_ref() == Some(&height(c)) {
                    MonomialClass::QuasiEssential
                } else {
                    MonomialClass::Inessential
                };
                (e.clone(), class)
            })
            .collect();
        return EssentialProfile { classes, hull: Some(hull) };
    }
    let n = f.arity();
    let essential = essential_exponents(f);
    let classes = f
        .terms()
        .map(|(e, _)| {
            let class = if essential.contains(e) {
                MonomialClass::Essential
            } else if feasible(n, &dominance_rows(f, e, essential.iter(), false)) {
                MonomialClass::QuasiEssential
            } else {
                MonomialClass::Inessential
            };
            (e.clone(), class)
        })
        .collect();
    EssentialProfile { classes, hull: None }
}

/// Restriction of `f` to its essential terms.
pub fn essential_part(f: &Polynomial) -> Polynomial {
    let prof = classify_monomials(f);
    let terms =
        f.terms().filter(|(e, _)| prof.classes[*e] == MonomialClass::Essential).map(|(e, c)| (e.clone(), c.clone()));
    Polynomial::from_terms(f.arity(), f.is_laurent(), terms).expect("subset of valid terms")
}

/// Essential part plus a ghost at every lattice point on the hull between
/// vertices, with the interpolated value.
pub fn full_closure_1d(f: &Polynomial) -> Result<Polynomial> {
    require_univariate(f)?;
    let hull = upper_hull_1d(f)?;
    let mut terms: Vec<(Exp, Scalar)> = hull.vertices.iter().map(|v| (vec![v.exp], f.coeff1(v.exp))).collect();
    for e in &hull.edges {
        for k in e.from + 1..e.to {
            terms.push((vec![k], Scalar::g(hull.height_at(k).unwrap())));
        }
    }
    Polynomial::from_terms(1, f.is_laurent(), terms)
}

/// True when `f` equals its full closure.
pub fn is_full_1d(f: &Polynomial) -> Result<bool> {
    let c = full_closure_1d(f)?;
    Ok(c.same_terms(f))
}

/// Equality as functions: identical essential parts.
pub fn e_equivalent(f: &Polynomial, g: &Polynomial) -> bool {
    essential_part(f).same_terms(&essential_part(g))
}

/// Essential parts agree in support and ghost images; `strict` also compares layers.
pub fn nu_e_equivalent(f: &Polynomial, g: &Polynomial, strict: bool) -> bool {
    if f.arity() != g.arity() {
        return false;
    }
    let (a, b) = (essential_part(f), essential_part(g));
    a.len() == b.len()
        && a.terms()
            .zip(b.terms())
            .all(|((e1, c1), (e2, c2))| e1 == e2 && c1.value() == c2.value() && (!strict || c1.layer() == c2.layer()))
}

/// Corner roots in ascending order with lattice-length multiplicities.
pub fn corner_roots_1d(f: &Polynomial) -> Result<Vec<CornerRoot>> {
    let hull = upper_hull_1d(f)?;
    Ok(hull.edges.iter().map(|e| CornerRoot { value: e.root(), multiplicity: e.length }).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse;
    use crate::scalar::qf;

    fn p(s: &str) -> Polynomial {
        parse(s).unwrap()
    }

    #[test]
    fn classification_examples() {
        let prof = classify_monomials(&p("x^2 + 2x + 4"));
        assert_eq!(prof.classes[&vec![1]], MonomialClass::QuasiEssential);
        let prof = classify_monomials(&p("x^2 + 1x + 5"));
        assert_eq!(prof.classes[&vec![1]], MonomialClass::Inessential);
        let prof = classify_monomials(&p("3g*x^4"));
        assert_eq!(prof.classes[&vec![4]], MonomialClass::Essential);
    }

    #[test]
    fn multivariate_classification() {
        let f = p("x1^2 + x2^2 + 1g*x1*x2 + 0");
        let prof = classify_monomials(&f);
        assert!(prof.classes.values().all(|c| *c == MonomialClass::Essential));
        let g = p("x1^2 + x2^2 + x1*x2");
        assert_eq!(classify_monomials(&g).classes[&vec![1, 1]], MonomialClass::QuasiEssential);
        let h = p("x1^2 + x2^2 + -1*x1*x2");
        assert_eq!(classify_monomials(&h).classes[&vec![1, 1]], MonomialClass::Inessential);
    }

    #[test]
    fn essential_parts_and_closures() {
        assert_eq!(essential_part(&p("x^3 + 2x^2 + 3g*x + 4")), p("x^3 + 2x^2 + 4"));
        assert_eq!(full_closure_1d(&p("x^2 + 2x + 4")).unwrap(), p("x^2 + 2g*x + 4"));
        assert_eq!(full_closure_1d(&p("x^2 + 1")).unwrap(), p("x^2 + 1/2g*x + 1"));
        let full = p("x^2 + 2g*x + 4");
        assert_eq!(full_closure_1d(&full).unwrap(), full);
        assert!(is_full_1d(&full).unwrap());
        assert_eq!(essential_part(&p("5x^2")), p("5x^2"));
    }

    #[test]
    fn equivalences() {
        assert!(e_equivalent(&p("(x+1)^2"), &p("x^2+2")));
        assert!(!e_equivalent(&p("x+1"), &p("x+1g")));
        assert!(nu_e_equivalent(&p("x+1"), &p("x+1g"), false));
        assert!(!nu_e_equivalent(&p("x+1"), &p("x+1g"), true));
    }

    #[test]
    fn corner_root_examples() {
        let roots = corner_roots_1d(&p("x^3 + 2x^2 + 3g*x + 4")).unwrap();
        assert_eq!(
            roots,
            vec![CornerRoot { value: q(1), multiplicity: 2 }, CornerRoot { value: q(2), multiplicity: 1 }]
        );
        let roots = corner_roots_1d(&p("x^2 + 5g*x + 7")).unwrap();
        assert_eq!(roots.iter().map(|r| r.value.clone()).collect::<Vec<_>>(), vec![q(2), q(5)]);
        assert!(corner_roots_1d(&p("3x^2")).unwrap().is_empty());
        let roots = corner_roots_1d(&p("x^2 + 1")).unwrap();
        assert_eq!(roots, vec![CornerRoot { value: qf(1, 2), multiplicity: 2 }]);
    }
}
