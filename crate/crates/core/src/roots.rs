//! Roots, root sets, components and ghost surpassing of functions.
//!
//! Univariate root sets are unions of closed intervals and points over the
//! tangible line, plus a flag for the zero point. The open regions between
//! corner roots each carry a single dominant term; a region with a tangible
//! dominant coefficient is a component.

use std::cmp::Ordering;
use std::fmt;

use num_traits::One;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::lp::{find_point, Ineq};
use crate::poly::{eval_monomial, scalar_to_json, Exp, Polynomial};
use crate::scalar::{fmt_q, q, Scalar, Q};
use crate::shape::{corner_roots_1d, essential_part, upper_hull_1d};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootClass {
    NotRoot,
    /// Two or more terms attain the maximal ghost image.
    CornerRoot {
        ordinary: bool,
        witnesses: Vec<Exp>,
    },
    /// A single maximal term whose value is a ghost.
    ClusterRoot {
        dominant: Exp,
    },
}

impl RootClass {
    pub fn is_root(&self) -> bool {
        !matches!(self, RootClass::NotRoot)
    }

    pub fn to_json(&self) -> Value {
        match self {
            RootClass::NotRoot => json!({"class": "not_root"}),
            RootClass::CornerRoot { ordinary, witnesses } => {
                json!({"class": "corner", "ordinary": ordinary, "witnesses": witnesses})
            }
            RootClass::ClusterRoot { dominant } => json!({"class": "cluster", "dominant": dominant}),
        }
    }
}

/// Classifies `a` by the evaluated terms of the essential part of `f`.
pub fn classify_point(f: &Polynomial, a: &[Scalar]) -> Result<RootClass> {
    if a.len() != f.arity() {
        return Err(Error::ArityMismatch(f.arity(), a.len()));
    }
    if f.is_zero() {
        return Err(Error::Invalid("the zero polynomial vanishes everywhere".into()));
    }
    let ess = essential_part(f);
    let mut values = Vec::with_capacity(ess.len());
    for (e, c) in ess.terms() {
        values.push((e.clone(), eval_monomial(c, e, a)?));
    }
    let top = values.iter().map(|(_, v)| v).max_by(|x, y| x.cmp_nu(y)).unwrap().clone();
    let maximal: Vec<&(Exp, Scalar)> = values.iter().filter(|(_, v)| v.cmp_nu(&top) == Ordering::Equal).collect();
    if maximal.len() >= 2 {
        let ordinary =
            !top.is_zero() && maximal.iter().all(|(_, v)| v.is_tangible()) && a.iter().all(|x| !x.is_ghost());
        let witnesses = maximal.into_iter().map(|(e, _)| e.clone()).collect();
        return Ok(RootClass::CornerRoot { ordinary, witnesses });
    }
    let (e, v) = maximal[0];
    if v.in_ghost_ideal() {
        Ok(RootClass::ClusterRoot { dominant: e.clone() })
    } else {
        Ok(RootClass::NotRoot)
    }
}

/// Interval of the tangible line; `None` bounds are infinite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval1D {
    pub lo: Option<Q>,
    pub hi: Option<Q>,
    pub lo_closed: bool,
    pub hi_closed: bool,
}

impl Interval1D {
    pub fn point(v: Q) -> Interval1D {
        Interval1D { lo: Some(v.clone()), hi: Some(v), lo_closed: true, hi_closed: true }
    }

    pub fn open(lo: Option<Q>, hi: Option<Q>) -> Interval1D {
        Interval1D { lo, hi, lo_closed: false, hi_closed: false }
    }

    /// Closed at every finite end.
    pub fn closure(&self) -> Interval1D {
        Interval1D {
            lo: self.lo.clone(),
            hi: self.hi.clone(),
            lo_closed: self.lo.is_some(),
            hi_closed: self.hi.is_some(),
        }
    }

    pub fn is_empty(&self) -> bool {
        match (&self.lo, &self.hi) {
            (Some(l), Some(h)) => l > h || (l == h && !(self.lo_closed && self.hi_closed)),
            _ => false,
        }
    }

    pub fn contains(&self, x: &Q) -> bool {
        let above = match &self.lo {
            None => true,
            Some(l) => x > l || (x == l && self.lo_closed),
        };
        let below = match &self.hi {
            None => true,
            Some(h) => x < h || (x == h && self.hi_closed),
        };
        above && below
    }

    pub fn intersect(&self, other: &Interval1D) -> Interval1D {
        let (lo, lo_closed) = match (&self.lo, &other.lo) {
            (None, _) => (other.lo.clone(), other.lo_closed),
            (_, None) => (self.lo.clone(), self.lo_closed),
            (Some(a), Some(b)) => match a.cmp(b) {
                Ordering::Greater => (self.lo.clone(), self.lo_closed),
                Ordering::Less => (other.lo.clone(), other.lo_closed),
                Ordering::Equal => (self.lo.clone(), self.lo_closed && other.lo_closed),
            },
        };
        let (hi, hi_closed) = match (&self.hi, &other.hi) {
            (None, _) => (other.hi.clone(), other.hi_closed),
            (_, None) => (self.hi.clone(), self.hi_closed),
            (Some(a), Some(b)) => match a.cmp(b) {
                Ordering::Less => (self.hi.clone(), self.hi_closed),
                Ordering::Greater => (other.hi.clone(), other.hi_closed),
                Ordering::Equal => (self.hi.clone(), self.hi_closed && other.hi_closed),
            },
        };
        Interval1D { lo, hi, lo_closed, hi_closed }
    }

    pub fn intersects(&self, other: &Interval1D) -> bool {
        !self.intersect(other).is_empty()
    }

    /// A point of the interior, or the point itself for degenerate intervals.
    pub fn sample(&self) -> Q {
        match (&self.lo, &self.hi) {
            (Some(l), Some(h)) => (l + h) / q(2),
            (Some(l), None) => l + Q::one(),
            (None, Some(h)) => h - Q::one(),
            (None, None) => q(0),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "lo": self.lo.as_ref().map_or("-inf".to_string(), fmt_q),
            "hi": self.hi.as_ref().map_or("+inf".to_string(), fmt_q),
            "lo_closed": self.lo_closed,
            "hi_closed": self.hi_closed,
        })
    }
}

impl fmt::Display for Interval1D {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let (Some(l), Some(h)) = (&self.lo, &self.hi) {
            if l == h {
                return write!(f, "{{{}}}", fmt_q(l));
            }
        }
        let open = if self.lo_closed { '[' } else { '(' };
        let close = if self.hi_closed { ']' } else { ')' };
        let lo = self.lo.as_ref().map_or("-inf".to_string(), fmt_q);
        let hi = self.hi.as_ref().map_or("+inf".to_string(), fmt_q);
        write!(f, "{open}{lo}, {hi}{close}")
    }
}

/// Disjoint sorted intervals plus membership of the zero point.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RootSet1D {
    pub intervals: Vec<Interval1D>,
    pub zero_included: bool,
}

fn lo_key(i: &Interval1D) -> (Option<Q>, bool) {
    (i.lo.clone(), !i.lo_closed)
}

/// Whether `a.hi` reaches `b.lo`, assuming `a` starts no later than `b`.
fn touches(a: &Interval1D, b: &Interval1D) -> bool {
    match (&a.hi, &b.lo) {
        (None, _) | (_, None) => true,
        (Some(h), Some(l)) => l < h || (l == h && (a.hi_closed || b.lo_closed)),
    }
}

fn later_hi(a: &Interval1D, b: &Interval1D) -> (Option<Q>, bool) {
    match (&a.hi, &b.hi) {
        (None, _) => (None, false),
        (_, None) => (None, false),
        (Some(x), Some(y)) => match x.cmp(y) {
            Ordering::Greater => (a.hi.clone(), a.hi_closed),
            Ordering::Less => (b.hi.clone(), b.hi_closed),
            Ordering::Equal => (a.hi.clone(), a.hi_closed || b.hi_closed),
        },
    }
}

impl RootSet1D {
    /// Sorts and merges overlapping or touching intervals.
    pub fn from_intervals(mut items: Vec<Interval1D>, zero_included: bool) -> RootSet1D {
        items.retain(|i| !i.is_empty());
        items.sort_by_key(lo_key);
        let mut out: Vec<Interval1D> = Vec::new();
        for i in items {
            match out.last_mut() {
                Some(last) if touches(last, &i) => {
                    let (hi, hi_closed) = later_hi(last, &i);
                    last.hi = hi;
                    last.hi_closed = hi_closed;
                }
                _ => out.push(i),
            }
        }
        RootSet1D { intervals: out, zero_included }
    }

    pub fn union(&self, other: &RootSet1D) -> RootSet1D {
        let items = self.intervals.iter().chain(&other.intervals).cloned().collect();
        RootSet1D::from_intervals(items, self.zero_included || other.zero_included)
    }

    pub fn contains(&self, x: &Q) -> bool {
        self.intervals.iter().any(|i| i.contains(x))
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty() && !self.zero_included
    }

    pub fn to_json(&self) -> Value {
        json!({
            "intervals": self.intervals.iter().map(Interval1D::to_json).collect::<Vec<_>>(),
            "zero_included": self.zero_included,
        })
    }
}

impl fmt::Display for RootSet1D {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if self.zero_included {
            parts.push("{ninf}".into());
        }
        parts.extend(self.intervals.iter().map(ToString::to_string));
        if parts.is_empty() {
            write!(f, "{{}}")
        } else {
            write!(f, "{}", parts.join(" u "))
        }
    }
}

/// An open region with its dominant essential term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Piece {
    pub region: Interval1D,
    pub exponent: i64,
    pub coeff: Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PieceDecomposition {
    pub breakpoints: Vec<Q>,
    pub pieces: Vec<Piece>,
}

/// Region on which a single term of `f` dominates and has tangible (or
/// fictitious, when ghost) value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub exponent: i64,
    pub region: Interval1D,
    pub tangible: bool,
    /// The zero point belongs to the component.
    pub contains_zero: bool,
}

impl Component {
    pub fn to_json(&self) -> Value {
        json!({
            "exponent": self.exponent,
            "region": self.region.to_json(),
            "tangible": self.tangible,
            "contains_zero": self.contains_zero,
        })
    }
}

fn require_univariate(f: &Polynomial) -> Result<()> {
    if f.arity() == 1 {
        Ok(())
    } else {
        Err(Error::WrongArity { expected: 1, got: f.arity() })
    }
}

/// Corner roots of the essential part and the dominant term between them.
pub fn piecewise_1d(f: &Polynomial) -> Result<PieceDecomposition> {
    require_univariate(f)?;
    let hull = upper_hull_1d(f)?;
    let breakpoints: Vec<Q> = hull.edges.iter().map(|e| e.root()).collect();
    let mut pieces = Vec::with_capacity(hull.vertices.len());
    // Low exponents dominate on the left.
    let k = hull.vertices.len();
    for (idx, v) in hull.vertices.iter().enumerate() {
        let lo = (idx > 0).then(|| breakpoints[idx - 1].clone());
        let hi = (idx + 1 < k).then(|| breakpoints[idx].clone());
        pieces.push(Piece { region: Interval1D::open(lo, hi), exponent: v.exp, coeff: f.coeff1(v.exp) });
    }
    Ok(PieceDecomposition { breakpoints, pieces })
}

fn zero_is_dominated_by_constant(f: &Polynomial, exponent: i64) -> bool {
    exponent == 0 && f.degree_range().is_some_and(|(lo, _)| lo == 0)
}

/// Every region with its dominant term, including fictitious (ghost) ones.
pub fn all_components_1d(f: &Polynomial) -> Result<Vec<Component>> {
    let pd = piecewise_1d(f)?;
    Ok(pd
        .pieces
        .into_iter()
        .map(|p| Component {
            contains_zero: p.region.lo.is_none()
                && p.coeff.is_tangible()
                && zero_is_dominated_by_constant(f, p.exponent),
            exponent: p.exponent,
            tangible: p.coeff.is_tangible(),
            region: p.region,
        })
        .collect())
}

/// Components with a tangible dominant coefficient.
pub fn components_1d(f: &Polynomial) -> Result<Vec<Component>> {
    Ok(all_components_1d(f)?.into_iter().filter(|c| c.tangible).collect())
}

/// Tangible roots of a univariate polynomial.
pub fn root_set_1d(f: &Polynomial) -> Result<RootSet1D> {
    require_univariate(f)?;
    let zero_included = match f.eval(&[Scalar::Zero]) {
        Ok(v) => v.in_ghost_ideal(),
        Err(_) => false,
    };
    if f.is_zero() {
        return Ok(RootSet1D { intervals: vec![Interval1D::open(None, None)], zero_included });
    }
    let pd = piecewise_1d(f)?;
    let mut items: Vec<Interval1D> = pd.breakpoints.iter().cloned().map(Interval1D::point).collect();
    items.extend(pd.pieces.iter().filter(|p| !p.coeff.is_tangible()).map(|p| p.region.closure()));
    Ok(RootSet1D::from_intervals(items, zero_included))
}

/// Outcome for one tangible component of `f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentCheck {
    pub component: Component,
    /// Index of a generator that has no root on the component.
    pub witness: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreceqReport {
    pub holds: bool,
    pub checks: Vec<ComponentCheck>,
    /// Ghost-dominated regions; listed but not part of the decision.
    pub fictitious: Vec<Component>,
}

impl PreceqReport {
    pub fn to_json(&self) -> Value {
        json!({
            "holds": self.holds,
            "components": self.checks.iter().map(|c| json!({
                "component": c.component.to_json(),
                "witness": c.witness,
            })).collect::<Vec<_>>(),
            "fictitious": self.fictitious.iter().map(Component::to_json).collect::<Vec<_>>(),
        })
    }
}

fn avoids(roots: &RootSet1D, c: &Component) -> bool {
    !(c.contains_zero && roots.zero_included) && roots.intervals.iter().all(|i| !i.intersects(&c.region))
}

/// Every tangible component of `f` is avoided by the roots of some generator.
pub fn preceq_comp(f: &Polynomial, gens: &[Polynomial]) -> Result<PreceqReport> {
    require_univariate(f)?;
    let mut root_sets = Vec::with_capacity(gens.len());
    for g in gens {
        if g.arity() != f.arity() {
            return Err(Error::ArityMismatch(f.arity(), g.arity()));
        }
        root_sets.push(root_set_1d(g)?);
    }
    let (tangible, fictitious): (Vec<Component>, Vec<Component>) =
        all_components_1d(f)?.into_iter().partition(|c| c.tangible);
    let checks: Vec<ComponentCheck> = tangible
        .into_iter()
        .map(|c| {
            let witness = root_sets.iter().position(|r| avoids(r, &c));
            ComponentCheck { component: c, witness }
        })
        .collect();
    let holds = checks.iter().all(|c| c.witness.is_some());
    Ok(PreceqReport { holds, checks, fictitious })
}

fn dominant_at(ess: &Polynomial, x: &Q) -> Option<(i64, Scalar)> {
    let point = [Scalar::t(x.clone())];
    ess.terms()
        .map(|(e, c)| (e[0], eval_monomial(c, e, &point).expect("tangible point"), c.clone()))
        .max_by(|a, b| a.1.cmp_nu(&b.1))
        .map(|(e, _, c)| (e, c))
}

/// `value + slope·x ≥ 0` on the closure of `region`.
fn affine_nonnegative(value: &Q, slope: i64, region: &Interval1D) -> bool {
    let at = |x: &Q| value + q(slope) * x >= q(0);
    let left_ok = match &region.lo {
        None => slope <= 0 && (slope < 0 || *value >= q(0)),
        Some(l) => at(l),
    };
    let right_ok = match &region.hi {
        None => slope >= 0 && (slope > 0 || *value >= q(0)),
        Some(h) => at(h),
    };
    left_ok && right_ok
}

/// Compares two single terms on an open region.
fn piece_surpasses(f: Option<&(i64, Scalar)>, g: Option<&(i64, Scalar)>, region: &Interval1D) -> bool {
    match (f, g) {
        (_, None) => f.is_none_or(|(_, c)| c.in_ghost_ideal()),
        (None, Some(_)) => false,
        (Some((i, a)), Some((j, b))) => {
            if i == j && a == b {
                return true;
            }
            if !a.is_ghost() {
                return false;
            }
            let d = a.value().unwrap() - b.value().unwrap();
            affine_nonnegative(&d, i - j, region)
        }
    }
}

fn surpasses_on_tangible_line(f: &Polynomial, g: &Polynomial) -> Result<bool> {
    let (ef, eg) = (essential_part(f), essential_part(g));
    let mut cuts: Vec<Q> = corner_roots_1d(&ef)?.into_iter().chain(corner_roots_1d(&eg)?).map(|r| r.value).collect();
    cuts.sort();
    cuts.dedup();
    for b in &cuts {
        let p = [Scalar::t(b.clone())];
        if !f.eval(&p)?.ghost_surpasses(&g.eval(&p)?) {
            return Ok(false);
        }
    }
    let mut bounds: Vec<Option<Q>> = vec![None];
    bounds.extend(cuts.into_iter().map(Some));
    bounds.push(None);
    for w in bounds.windows(2) {
        let region = Interval1D::open(w[0].clone(), w[1].clone());
        let x = region.sample();
        if !piece_surpasses(dominant_at(&ef, &x).as_ref(), dominant_at(&eg, &x).as_ref(), &region) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The polynomial whose values at tangible points equal the values of `f`
/// at the corresponding ghost points.
fn at_ghost_points(f: &Polynomial) -> Polynomial {
    let terms = f.terms().map(|(e, c)| (e.clone(), if e[0] == 0 { c.clone() } else { c.nu() }));
    Polynomial::from_terms(1, f.is_laurent(), terms).expect("same support")
}

/// Decides whether `f(a)` ghost-surpasses `g(a)` at every point, exactly.
pub fn fn_ghost_surpasses_1d(f: &Polynomial, g: &Polynomial) -> Result<bool> {
    require_univariate(f)?;
    require_univariate(g)?;
    if f.is_signed() || g.is_signed() {
        return Err(Error::SignedModel);
    }
    if let (Ok(a), Ok(b)) = (f.eval(&[Scalar::Zero]), g.eval(&[Scalar::Zero])) {
        if !a.ghost_surpasses(&b) {
            return Ok(false);
        }
    }
    Ok(surpasses_on_tangible_line(f, g)? && surpasses_on_tangible_line(&at_ghost_points(f), &at_ghost_points(g))?)
}

/// `f ⊨ q·g`.
pub fn check_supertropical_division(f: &Polynomial, g: &Polynomial, quotient: &Polynomial) -> Result<bool> {
    fn_ghost_surpasses_1d(f, &quotient.checked_mul(g)?)
}

/// Upper limit on quotient candidates tried across all powers.
pub const MAX_QUOTIENT_CANDIDATES: usize = 200_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DivisionSearch {
    Found {
        power: u32,
        quotient: Polynomial,
    },
    /// No witness among the candidates tried; this is not a proof of failure.
    Inconclusive {
        tried: usize,
    },
}

fn coefficient_options(fm: &Polynomial, g: &Polynomial, k: i64) -> Result<Vec<Scalar>> {
    let hull = upper_hull_1d(fm)?;
    let mut values: Vec<Q> =
        g.terms().filter_map(|(e, c)| hull.height_at(k + e[0]).map(|h| h - c.value().unwrap())).collect();
    values.sort();
    values.dedup();
    let mut opts: Vec<Scalar> = values.iter().cloned().map(Scalar::t).collect();
    opts.extend(values.into_iter().map(Scalar::g));
    opts.push(Scalar::Zero);
    Ok(opts)
}

/// Odometer step with the highest exponent varying fastest; false when done.
fn advance(idx: &mut [usize], options: &[Vec<Scalar>]) -> bool {
    for pos in (0..idx.len()).rev() {
        idx[pos] += 1;
        if idx[pos] < options[pos].len() {
            return true;
        }
        idx[pos] = 0;
    }
    false
}

/// Searches for `m ≤ max_power` and `q` with `f^m ⊨ q·g`.
///
/// Quotient coefficients are drawn from differences of hull heights of `f^m`
/// and coefficients of `g`, each tried tangible and ghost. Candidates are
/// enumerated in a fixed order and the first verified one is returned.
pub fn quotient_search_1d(f: &Polynomial, g: &Polynomial, max_power: u32) -> Result<DivisionSearch> {
    require_univariate(f)?;
    require_univariate(g)?;
    let (glo, ghi) = g.degree_range().ok_or_else(|| Error::Invalid("cannot divide by zero".into()))?;
    let mut tried = 0usize;
    for m in 1..=max_power {
        let fm = f.pow(m);
        let Some((flo, fhi)) = fm.degree_range() else { continue };
        let (klo, khi) = (flo - glo, fhi - ghi);
        if klo > khi {
            continue;
        }
        let mut options = Vec::new();
        for k in klo..=khi {
            options.push(coefficient_options(&fm, g, k)?);
        }
        let mut idx = vec![0usize; options.len()];
        loop {
            if tried >= MAX_QUOTIENT_CANDIDATES {
                return Ok(DivisionSearch::Inconclusive { tried });
            }
            let terms = idx.iter().enumerate().map(|(pos, &o)| (vec![klo + pos as i64], options[pos][o].clone()));
            let cand = Polynomial::from_terms(1, f.is_laurent() || g.is_laurent() || klo < 0, terms)?;
            if !cand.is_zero() {
                tried += 1;
                if check_supertropical_division(&fm, g, &cand)? {
                    return Ok(DivisionSearch::Found { power: m, quotient: cand });
                }
            }
            if !advance(&mut idx, &options) {
                break;
            }
        }
    }
    Ok(DivisionSearch::Inconclusive { tried })
}

/// `f^m ⊨ Σ q_i·g_i`.
pub fn verify_radical_membership(f: &Polynomial, m: u32, pairs: &[(Polynomial, Polynomial)]) -> Result<bool> {
    require_univariate(f)?;
    let mut sum = Polynomial::zero(1);
    for (qi, gi) in pairs {
        sum = sum.checked_add(&qi.checked_mul(gi)?)?;
    }
    fn_ghost_surpasses_1d(&f.pow(m), &sum)
}

fn tie_rows(ess: &Polynomial, i: &Exp, j: &Exp) -> Vec<Ineq> {
    let value = |e: &Exp| ess.coeff(e).value().unwrap().clone();
    let diff = |a: &Exp, b: &Exp| a.iter().zip(b).map(|(x, y)| q(x - y)).collect::<Vec<Q>>();
    let mut rows =
        vec![Ineq::new(diff(i, j), value(i) - value(j), false), Ineq::new(diff(j, i), value(j) - value(i), false)];
    for (k, _) in ess.terms().filter(|(k, _)| *k != i && *k != j) {
        rows.push(Ineq::new(diff(i, k), value(i) - value(k), false));
    }
    rows
}

/// A tangible point at which `f` has a root.
pub fn find_tangible_root(f: &Polynomial) -> Result<Vec<Scalar>> {
    let n = f.arity();
    if f.is_zero() {
        return Ok(vec![Scalar::one(); n]);
    }
    let ess = essential_part(f);
    if ess.is_monomial() {
        let (_, c) = ess.terms().next().unwrap();
        return if c.is_tangible() { Err(Error::NoRoot) } else { Ok(vec![Scalar::one(); n]) };
    }
    if n == 1 {
        let r = &corner_roots_1d(&ess)?[0];
        return Ok(vec![Scalar::t(r.value.clone())]);
    }
    let exps: Vec<&Exp> = ess.terms().map(|(e, _)| e).collect();
    for (a, i) in exps.iter().enumerate() {
        for j in &exps[a + 1..] {
            if let Some(x) = find_point(n, &tie_rows(&ess, i, j)) {
                let point: Vec<Scalar> = x.into_iter().map(Scalar::t).collect();
                if classify_point(f, &point)?.is_root() {
                    return Ok(point);
                }
            }
        }
    }
    Err(Error::NoRoot)
}

/// JSON for a list of components.
pub fn components_json(cs: &[Component]) -> Value {
    Value::Array(cs.iter().map(Component::to_json).collect())
}

/// JSON for a piece decomposition.
pub fn pieces_json(pd: &PieceDecomposition) -> Value {
    json!({
        "breakpoints": pd.breakpoints.iter().map(fmt_q).collect::<Vec<_>>(),
        "pieces": pd.pieces.iter().map(|p| json!({
            "region": p.region.to_json(),
            "exponent": p.exponent,
            "coeff": scalar_to_json(&p.coeff),
        })).collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse;
    use crate::scalar::qf;

    fn p(s: &str) -> Polynomial {
        parse(s).unwrap()
    }

    fn closed(a: i64, b: i64) -> Interval1D {
        Interval1D { lo: Some(q(a)), hi: Some(q(b)), lo_closed: true, hi_closed: true }
    }

    #[test]
    fn point_classes() {
        let f = p("x^4 + 3g*x^3 + 5g*x^2 + 6x + 6");
        assert!(matches!(classify_point(&f, &[Scalar::ti(0)]).unwrap(), RootClass::CornerRoot { ordinary: true, .. }));
        assert!(matches!(classify_point(&f, &[Scalar::ti(2)]).unwrap(), RootClass::CornerRoot { ordinary: false, .. }));
        assert!(matches!(classify_point(&f, &[Scalar::t(qf(5, 2))]).unwrap(), RootClass::ClusterRoot { .. }));
        assert_eq!(classify_point(&f, &[Scalar::ti(10)]).unwrap(), RootClass::NotRoot);
        assert!(matches!(classify_point(&p("x + 1"), &[Scalar::gi(3)]).unwrap(), RootClass::ClusterRoot { .. }));
    }

    #[test]
    fn root_set_examples() {
        let rs = root_set_1d(&p("x^4 + 3g*x^3 + 5g*x^2 + 6x + 6")).unwrap();
        assert_eq!(rs.intervals, vec![closed(0, 0), closed(1, 3)]);
        assert!(!rs.zero_included);
        let rs = root_set_1d(&p("x^2 + 6g*x + 7")).unwrap();
        assert_eq!(rs.intervals, vec![closed(1, 6)]);
        assert!(root_set_1d(&p("4")).unwrap().is_empty());
        let rs = root_set_1d(&p("x + 1g")).unwrap();
        assert_eq!(rs.intervals[0].hi, Some(q(1)));
        assert_eq!(rs.intervals[0].lo, None);
        assert!(rs.zero_included);
    }

    #[test]
    fn interval_merging() {
        let open = Interval1D::open(Some(q(1)), Some(q(2)));
        let rs = RootSet1D::from_intervals(vec![closed(2, 3), open.clone(), Interval1D::point(q(1))], false);
        assert_eq!(rs.intervals, vec![closed(1, 3)]);
        let rs = RootSet1D::from_intervals(vec![open, Interval1D::open(Some(q(2)), Some(q(4)))], false);
        assert_eq!(rs.intervals.len(), 2);
    }

    #[test]
    fn component_examples() {
        let cs = components_1d(&p("x + 1g")).unwrap();
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].exponent, 1);
        assert_eq!(cs[0].region, Interval1D::open(Some(q(1)), None));
        let cs = components_1d(&p("x + 3")).unwrap();
        assert_eq!(cs.iter().map(|c| c.exponent).collect::<Vec<_>>(), vec![0, 1]);
        assert!(cs[0].contains_zero);
        let cs = components_1d(&p("x^2 + 6g*x + 7")).unwrap();
        let regions: Vec<_> = cs.iter().map(|c| c.region.clone()).collect();
        assert_eq!(regions, vec![Interval1D::open(None, Some(q(1))), Interval1D::open(Some(q(6)), None)]);
    }

    #[test]
    fn component_relation() {
        assert!(!preceq_comp(&p("1"), &[p("x + 2"), p("x + 3")]).unwrap().holds);
        let f = p("x^2 + 6g*x + 7");
        assert!(preceq_comp(&f, std::slice::from_ref(&f)).unwrap().holds);
        let r = preceq_comp(&f, &[p("x + 4")]).unwrap();
        assert!(r.holds);
        assert_eq!(r.fictitious.len(), 1);
    }

    #[test]
    fn function_surpassing() {
        let f = p("x^2 + 6g*x + 7");
        assert!(fn_ghost_surpasses_1d(&f, &p("(x+3)(x+4)")).unwrap());
        assert!(fn_ghost_surpasses_1d(&f, &f).unwrap());
        assert!(fn_ghost_surpasses_1d(&f.pow(2), &p("(x^2+8)(x^2+4g*x+6)")).unwrap());
        assert!(!fn_ghost_surpasses_1d(&p("(x+3)(x+4)"), &f).unwrap());
        assert!(!fn_ghost_surpasses_1d(&f, &p("x + 7")).unwrap());
        assert!(fn_ghost_surpasses_1d(&p("0g*x + 0g"), &p("x + 0")).unwrap());
        assert_eq!(fn_ghost_surpasses_1d(&p("x + 1:+"), &p("x")), Err(Error::SignedModel));
    }

    #[test]
    fn quotient_search_on_quadratic() {
        let f = p("x^2 + 6g*x + 7");
        for a in 1..=6 {
            let g = p(&format!("x + {a}"));
            match quotient_search_1d(&f, &g, 1).unwrap() {
                DivisionSearch::Found { power, quotient } => {
                    assert_eq!(power, 1);
                    assert!(check_supertropical_division(&f, &g, &quotient).unwrap());
                }
                other => panic!("a = {a}: {other:?}"),
            }
            assert!(check_supertropical_division(&f, &g, &p(&format!("x + {}", 7 - a))).unwrap());
        }
        assert!(!check_supertropical_division(&f, &p("x + 8"), &p("x + -1")).unwrap());
    }

    #[test]
    fn radical_membership_examples() {
        let f = p("x^2 + 6g*x + 7");
        assert!(verify_radical_membership(&f, 2, &[(p("x^2 + 8"), p("x^2 + 4g*x + 6"))]).unwrap());
        assert!(verify_radical_membership(&f, 1, &[(p("0"), f.clone())]).unwrap());
    }

    #[test]
    fn tangible_roots() {
        assert_eq!(find_tangible_root(&p("x + 5")).unwrap(), vec![Scalar::ti(5)]);
        assert_eq!(find_tangible_root(&p("x1 + x2 + 3")).unwrap(), vec![Scalar::ti(3), Scalar::ti(3)]);
        assert_eq!(find_tangible_root(&p("3x^2")), Err(Error::NoRoot));
        assert!(find_tangible_root(&p("3g*x^2")).is_ok());
    }
}
