//! Plane curves of two-variable polynomials.
//!
//! The corner locus is built pair by pair over essential terms: each pair
//! ties along a line, and the part of that line where the pair also
//! dominates every other essential term is a segment, a ray or the whole
//! line. Ghost essential terms add two-dimensional regions. All data is
//! exact; only SVG output rounds.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::lp::{feasible, Ineq};
use crate::poly::{Exp, Polynomial};
use crate::roots::{classify_point, RootClass};
use crate::scalar::{fmt_q, q, q_to_f64, Scalar, Q};

pub type Point2 = [Q; 2];

/// Which tropical sum the curve is taken for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Convention {
    Max,
    Min,
}

impl Convention {
    fn sign(self) -> Q {
        match self {
            Convention::Max => q(1),
            Convention::Min => q(-1),
        }
    }
}

/// The points `anchor + t·dir` with `t` in the parameter range.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct CurvePiece {
    pub pair: (Exp, Exp),
    pub anchor: Point2,
    /// Primitive integer direction.
    pub dir: [i64; 2],
    pub t_lo: Option<Q>,
    pub t_hi: Option<Q>,
    /// Lattice length of the dual edge; zero when a ghost term is involved.
    pub weight: i64,
}

impl CurvePiece {
    pub fn at(&self, t: &Q) -> Point2 {
        [&self.anchor[0] + t * q(self.dir[0]), &self.anchor[1] + t * q(self.dir[1])]
    }

    /// Finite endpoints with the outgoing direction at each.
    pub fn ends(&self) -> Vec<(Point2, [i64; 2])> {
        let mut out = Vec::new();
        if let Some(t) = &self.t_lo {
            out.push((self.at(t), self.dir));
        }
        if let Some(t) = &self.t_hi {
            out.push((self.at(t), [-self.dir[0], -self.dir[1]]));
        }
        out
    }

    pub fn is_segment(&self) -> bool {
        self.t_lo.is_some() && self.t_hi.is_some()
    }

    pub fn is_ray(&self) -> bool {
        self.t_lo.is_some() != self.t_hi.is_some()
    }

    pub fn contains(&self, p: &Point2) -> bool {
        let d = [q(self.dir[0]), q(self.dir[1])];
        let rel = [&p[0] - &self.anchor[0], &p[1] - &self.anchor[1]];
        if &rel[0] * &d[1] != &rel[1] * &d[0] {
            return false;
        }
        let t = if self.dir[0] != 0 { &rel[0] / &d[0] } else { &rel[1] / &d[1] };
        self.t_lo.as_ref().is_none_or(|l| t >= *l) && self.t_hi.as_ref().is_none_or(|h| t <= *h)
    }

    pub fn to_json(&self) -> Value {
        let bound = |b: &Option<Q>, inf: &str| b.as_ref().map_or(inf.to_string(), fmt_q);
        json!({
            "pair": [self.pair.0, self.pair.1],
            "anchor": [fmt_q(&self.anchor[0]), fmt_q(&self.anchor[1])],
            "dir": self.dir,
            "t": [bound(&self.t_lo, "-inf"), bound(&self.t_hi, "+inf")],
            "weight": self.weight,
        })
    }
}

/// Open convex region where a ghost term strictly dominates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GhostRegion {
    pub dominant: Exp,
    /// Strict inequalities in the two coordinates.
    pub half_planes: Vec<Ineq>,
}

impl GhostRegion {
    pub fn closure_contains(&self, p: &Point2) -> bool {
        self.half_planes.iter().all(|h| !h.eval(p).is_negative())
    }

    pub fn interior_contains(&self, p: &Point2) -> bool {
        self.half_planes.iter().all(|h| h.eval(p).is_positive())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "dominant": self.dominant,
            "half_planes": self.half_planes.iter().map(|h| json!({
                "a": h.coeffs.iter().map(fmt_q).collect::<Vec<_>>(),
                "b": fmt_q(&h.constant),
            })).collect::<Vec<_>>(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Curve2D {
    pub pieces: Vec<CurvePiece>,
    pub regions: Vec<GhostRegion>,
    /// Distinct finite piece endpoints, sorted.
    pub vertices: Vec<Point2>,
}

impl Curve2D {
    /// Membership in the union of the pieces and the closed regions.
    pub fn contains(&self, p: &Point2) -> bool {
        self.pieces.iter().any(|c| c.contains(p)) || self.regions.iter().any(|r| r.closure_contains(p))
    }

    pub fn segments(&self) -> usize {
        self.pieces.iter().filter(|p| p.is_segment()).count()
    }

    pub fn rays(&self) -> usize {
        self.pieces.iter().filter(|p| p.is_ray()).count()
    }

    /// Image under `(x, y) ↦ (-x, -y)`.
    pub fn negated(&self) -> Curve2D {
        let neg = |p: &Point2| [-p[0].clone(), -p[1].clone()];
        let mut pieces: Vec<CurvePiece> = self
            .pieces
            .iter()
            .map(|c| CurvePiece {
                pair: c.pair.clone(),
                anchor: neg(&c.anchor),
                dir: [-c.dir[0], -c.dir[1]],
                t_lo: c.t_lo.clone(),
                t_hi: c.t_hi.clone(),
                weight: c.weight,
            })
            .map(normalize_piece)
            .collect();
        pieces.sort();
        let regions = self
            .regions
            .iter()
            .map(|r| GhostRegion {
                dominant: r.dominant.clone(),
                half_planes: r
                    .half_planes
                    .iter()
                    .map(|h| Ineq::new(h.coeffs.iter().map(|c| -c).collect(), h.constant.clone(), h.strict))
                    .collect(),
            })
            .collect();
        let mut vertices: Vec<Point2> = self.vertices.iter().map(neg).collect();
        vertices.sort();
        Curve2D { pieces, regions, vertices }
    }

    /// Same point set: pieces compared as geometric objects, regions by
    /// dominant term and half-plane set.
    pub fn same_locus(&self, other: &Curve2D) -> bool {
        type PieceKey = (Point2, [i64; 2], Option<Q>, Option<Q>, i64);
        let key = |c: &Curve2D| -> BTreeSet<PieceKey> {
            c.pieces.iter().map(|p| (p.anchor.clone(), p.dir, p.t_lo.clone(), p.t_hi.clone(), p.weight)).collect()
        };
        let regions = |c: &Curve2D| -> BTreeSet<Vec<(Vec<Q>, Q)>> {
            c.regions
                .iter()
                .map(|r| {
                    let mut hs: Vec<(Vec<Q>, Q)> =
                        r.half_planes.iter().map(|h| (h.coeffs.clone(), h.constant.clone())).collect();
                    hs.sort();
                    hs
                })
                .collect()
        };
        key(self) == key(other) && regions(self) == regions(other) && self.vertices == other.vertices
    }

    pub fn to_json(&self) -> Value {
        json!({
            "pieces": self.pieces.iter().map(CurvePiece::to_json).collect::<Vec<_>>(),
            "regions": self.regions.iter().map(GhostRegion::to_json).collect::<Vec<_>>(),
            "vertices": self.vertices.iter().map(|v| [fmt_q(&v[0]), fmt_q(&v[1])]).collect::<Vec<_>>(),
        })
    }
}

fn require_plane(f: &Polynomial) -> Result<()> {
    if f.arity() != 2 {
        return Err(Error::WrongArity { expected: 2, got: f.arity() });
    }
    if f.is_signed() {
        return Err(Error::SignedModel);
    }
    Ok(())
}

fn value(c: &Scalar) -> Q {
    c.value().expect("stored coefficients are nonzero").clone()
}

/// `s·((i - k)·x + c_i - c_k)`, the margin of term `i` over term `k`.
fn margin(s: &Q, i: &Exp, ci: &Q, k: &Exp, ck: &Q, strict: bool) -> Ineq {
    let coeffs = i.iter().zip(k).map(|(a, b)| s * q(a - b)).collect();
    Ineq::new(coeffs, s * (ci - ck), strict)
}

/// Terms that strictly win somewhere under the given convention.
pub fn essential_terms(f: &Polynomial, conv: Convention) -> Vec<(Exp, Scalar)> {
    let s = conv.sign();
    let terms: Vec<(Exp, Q)> = f.terms().map(|(e, c)| (e.clone(), value(c))).collect();
    f.terms()
        .filter(|(i, c)| {
            let ci = value(c);
            let rows: Vec<Ineq> =
                terms.iter().filter(|(k, _)| k != *i).map(|(k, ck)| margin(&s, i, &ci, k, ck, true)).collect();
            feasible(f.arity(), &rows)
        })
        .map(|(e, c)| (e.clone(), c.clone()))
        .collect()
}

fn primitive(v: [i64; 2]) -> [i64; 2] {
    let g = v[0].gcd(&v[1]);
    [v[0] / g, v[1] / g]
}

/// Moves the anchor to a finite end and points rays outward.
fn normalize_piece(mut p: CurvePiece) -> CurvePiece {
    match (p.t_lo.clone(), p.t_hi.clone()) {
        (Some(lo), hi) => {
            p.anchor = p.at(&lo);
            p.t_hi = hi.map(|h| h - &lo);
            p.t_lo = Some(q(0));
        }
        (None, Some(hi)) => {
            p.anchor = p.at(&hi);
            p.dir = [-p.dir[0], -p.dir[1]];
            p.t_lo = Some(q(0));
            p.t_hi = None;
        }
        (None, None) => {}
    }
    if let (Some(_), Some(h)) = (&p.t_lo, &p.t_hi) {
        // Segments run in the lexicographically positive direction.
        if p.dir < [0, 0] {
            p.anchor = p.at(h);
            p.dir = [-p.dir[0], -p.dir[1]];
        }
    }
    p
}

/// Where terms `i` and `j` tie and weakly dominate the other terms.
fn tie_piece(s: &Q, terms: &[(Exp, Scalar)], a: usize, b: usize) -> Option<CurvePiece> {
    let (i, ci) = (&terms[a].0, value(&terms[a].1));
    let (j, cj) = (&terms[b].0, value(&terms[b].1));
    let n = [i[0] - j[0], i[1] - j[1]];
    let dir = primitive([-n[1], n[0]]);
    // n·x = c_j - c_i
    let anchor = if n[0] != 0 { [(&cj - &ci) / q(n[0]), q(0)] } else { [q(0), (&cj - &ci) / q(n[1])] };
    let (mut lo, mut hi): (Option<Q>, Option<Q>) = (None, None);
    for (idx, (k, ck)) in terms.iter().enumerate() {
        if idx == a || idx == b {
            continue;
        }
        let row = margin(s, i, &ci, k, &value(ck), false);
        let slope = &row.coeffs[0] * q(dir[0]) + &row.coeffs[1] * q(dir[1]);
        let at0 = row.eval(&anchor);
        if slope.is_zero() {
            if at0.is_negative() {
                return None;
            }
        } else {
            let t = -at0 / &slope;
            if slope.is_positive() {
                lo = Some(lo.map_or(t.clone(), |l| l.max(t)));
            } else {
                hi = Some(hi.map_or(t.clone(), |h| h.min(t)));
            }
        }
    }
    if let (Some(l), Some(h)) = (&lo, &hi) {
        if l >= h {
            return None;
        }
    }
    let weight = if terms[a].1.is_tangible() && terms[b].1.is_tangible() { n[0].gcd(&n[1]) } else { 0 };
    Some(normalize_piece(CurvePiece { pair: (i.clone(), j.clone()), anchor, dir, t_lo: lo, t_hi: hi, weight }))
}

/// Tangible root set of a two-variable polynomial as pieces and regions.
pub fn corner_locus_2d(f: &Polynomial, conv: Convention) -> Result<Curve2D> {
    require_plane(f)?;
    let s = conv.sign();
    let terms = essential_terms(f, conv);
    let mut pieces = Vec::new();
    for a in 0..terms.len() {
        for b in a + 1..terms.len() {
            if let Some(p) = tie_piece(&s, &terms, a, b) {
                pieces.push(p);
            }
        }
    }
    pieces.sort();
    let regions = terms
        .iter()
        .filter(|(_, c)| c.is_ghost())
        .map(|(i, c)| GhostRegion {
            dominant: i.clone(),
            half_planes: terms
                .iter()
                .filter(|(k, _)| k != i)
                .map(|(k, ck)| margin(&s, i, &value(c), k, &value(ck), true))
                .collect(),
        })
        .collect();
    let vertices: BTreeSet<Point2> = pieces.iter().flat_map(|p| p.ends().into_iter().map(|(v, _)| v)).collect();
    Ok(Curve2D { pieces, regions, vertices: vertices.into_iter().collect() })
}

/// Locus of `g` read in the order-reversed semifield: the min-convention
/// corner locus with points mapped through the duality `a ↦ -a`.
pub fn dual_curve(g: &Polynomial) -> Result<Curve2D> {
    Ok(corner_locus_2d(g, Convention::Min)?.negated())
}

/// Regions of the plane where a single tangible essential term strictly
/// dominates; each is convex, so this counts the complement components.
pub fn tangible_complement_components(f: &Polynomial) -> Result<usize> {
    require_plane(f)?;
    Ok(essential_terms(f, Convention::Max).iter().filter(|(_, c)| c.is_tangible()).count())
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SubdivisionEdge {
    pub ends: (Exp, Exp),
    pub lattice_length: i64,
}

/// Regular subdivision of the Newton polygon induced by the coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct NewtonSubdivision {
    /// Cell polygons, counterclockwise.
    pub cells: Vec<Vec<Exp>>,
    pub edges: Vec<SubdivisionEdge>,
    /// Vertices of the subdivision carrying ghost coefficients.
    pub ghost_vertices: Vec<Exp>,
}

fn cross(o: &Exp, a: &Exp, b: &Exp) -> i64 {
    (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
}

/// Strict convex hull of lattice points, counterclockwise.
fn convex_hull(points: &[Exp]) -> Vec<Exp> {
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let mut lower: Vec<Exp> = Vec::new();
    for p in &pts {
        while lower.len() >= 2 && cross(&lower[lower.len() - 2], &lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<Exp> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2 && cross(&upper[upper.len() - 2], &upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

fn edge(a: &Exp, b: &Exp) -> SubdivisionEdge {
    let (a, b) = if a <= b { (a.clone(), b.clone()) } else { (b.clone(), a.clone()) };
    let lattice_length = (b[0] - a[0]).gcd(&(b[1] - a[1]));
    SubdivisionEdge { ends: (a, b), lattice_length }
}

/// Projects the upper faces of the lifted terms onto the Newton polygon.
pub fn newton_subdivision(f: &Polynomial) -> Result<NewtonSubdivision> {
    require_plane(f)?;
    let pts: Vec<(Exp, Q)> = f.terms().map(|(e, c)| (e.clone(), value(c))).collect();
    let mut cells: BTreeSet<Vec<Exp>> = BTreeSet::new();
    let mut edges: BTreeSet<SubdivisionEdge> = BTreeSet::new();
    let n = pts.len();
    let all_collinear = (0..n).all(|c| n < 3 || cross(&pts[0].0, &pts[1].0, &pts[c].0) == 0);
    if all_collinear {
        // One-dimensional upper hull along the common line.
        let mut sorted = pts.clone();
        sorted.sort();
        let mut chain: Vec<(Exp, Q)> = Vec::new();
        for p in sorted {
            while chain.len() >= 2 {
                let (a, b) = (&chain[chain.len() - 2], &chain[chain.len() - 1]);
                let (da, db) = (step(&a.0, &b.0), step(&a.0, &p.0));
                if q(da) * (&p.1 - &a.1) - (&b.1 - &a.1) * q(db) >= q(0) {
                    chain.pop();
                } else {
                    break;
                }
            }
            chain.push(p);
        }
        for w in chain.windows(2) {
            edges.insert(edge(&w[0].0, &w[1].0));
        }
    } else {
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    let det = cross(&pts[a].0, &pts[b].0, &pts[c].0);
                    if det == 0 {
                        continue;
                    }
                    let Some(plane) = plane_through(&pts[a], &pts[b], &pts[c]) else { continue };
                    let height = |e: &Exp| &plane[0] * q(e[0]) + &plane[1] * q(e[1]) + &plane[2];
                    if pts.iter().all(|(e, h)| *h <= height(e)) {
                        let on: Vec<Exp> =
                            pts.iter().filter(|(e, h)| *h == height(e)).map(|(e, _)| e.clone()).collect();
                        cells.insert(convex_hull(&on));
                    }
                }
            }
        }
        for cell in &cells {
            for k in 0..cell.len() {
                edges.insert(edge(&cell[k], &cell[(k + 1) % cell.len()]));
            }
        }
    }
    let vertex_set: BTreeSet<&Exp> = edges.iter().flat_map(|e| [&e.ends.0, &e.ends.1]).collect();
    let ghost_vertices = vertex_set.into_iter().filter(|e| f.coeff(e).is_ghost()).cloned().collect();
    Ok(NewtonSubdivision { cells: cells.into_iter().collect(), edges: edges.into_iter().collect(), ghost_vertices })
}

/// Lattice steps from `a` to `b` along their common line, signed.
fn step(a: &Exp, b: &Exp) -> i64 {
    let (dx, dy) = (b[0] - a[0], b[1] - a[1]);
    let g = dx.gcd(&dy);
    if dx > 0 || (dx == 0 && dy > 0) {
        g
    } else {
        -g
    }
}

/// Coefficients `(α, β, γ)` of the plane `h = αx + βy + γ`.
fn plane_through(a: &(Exp, Q), b: &(Exp, Q), c: &(Exp, Q)) -> Option<[Q; 3]> {
    let (x1, y1) = (q(b.0[0] - a.0[0]), q(b.0[1] - a.0[1]));
    let (x2, y2) = (q(c.0[0] - a.0[0]), q(c.0[1] - a.0[1]));
    let (h1, h2) = (&b.1 - &a.1, &c.1 - &a.1);
    let det = &x1 * &y2 - &x2 * &y1;
    if det.is_zero() {
        return None;
    }
    let alpha = (&h1 * &y2 - &h2 * &y1) / &det;
    let beta = (&x1 * &h2 - &x2 * &h1) / &det;
    let gamma = &a.1 - &alpha * q(a.0[0]) - &beta * q(a.0[1]);
    Some([alpha, beta, gamma])
}

/// Pieces and subdivision edges match one to one, each piece is orthogonal
/// to its edge and positive weights equal lattice lengths.
pub fn duality_check(curve: &Curve2D, sub: &NewtonSubdivision) -> bool {
    let pairs: BTreeSet<(Exp, Exp)> = curve.pieces.iter().map(|p| p.pair.clone()).collect();
    let edge_pairs: BTreeSet<(Exp, Exp)> = sub.edges.iter().map(|e| e.ends.clone()).collect();
    if pairs != edge_pairs || pairs.len() != curve.pieces.len() {
        return false;
    }
    curve.pieces.iter().all(|p| {
        let e = sub.edges.iter().find(|e| e.ends == p.pair).unwrap();
        let v = [e.ends.1[0] - e.ends.0[0], e.ends.1[1] - e.ends.0[1]];
        let orthogonal = v[0] * p.dir[0] + v[1] * p.dir[1] == 0;
        orthogonal && (p.weight == 0 || p.weight == e.lattice_length)
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BalanceReport {
    pub balanced: Vec<Point2>,
    pub unbalanced: Vec<Point2>,
    /// Vertices on the closure of a ghost region, where balancing is not defined.
    pub skipped: Vec<Point2>,
}

impl BalanceReport {
    pub fn ok(&self) -> bool {
        self.unbalanced.is_empty()
    }
}

/// Sums weighted outgoing primitive directions at each vertex.
pub fn balancing_report(curve: &Curve2D) -> BalanceReport {
    let mut report = BalanceReport::default();
    for v in &curve.vertices {
        if curve.regions.iter().any(|r| r.closure_contains(v)) {
            report.skipped.push(v.clone());
            continue;
        }
        let mut sum = [0i64; 2];
        for p in &curve.pieces {
            for (end, out) in p.ends() {
                if end == *v {
                    sum[0] += p.weight * out[0];
                    sum[1] += p.weight * out[1];
                }
            }
        }
        if sum == [0, 0] {
            report.balanced.push(v.clone());
        } else {
            report.unbalanced.push(v.clone());
        }
    }
    report
}

pub fn balancing_check(curve: &Curve2D) -> bool {
    balancing_report(curve).ok()
}

/// Closed axis-parallel rectangle `[x0, x1] × [y0, y1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Window {
    pub x0: Q,
    pub y0: Q,
    pub x1: Q,
    pub y1: Q,
}

impl Window {
    pub fn new(x0: Q, y0: Q, x1: Q, y1: Q) -> Result<Window> {
        if x0 >= x1 || y0 >= y1 {
            return Err(Error::Invalid("empty window".into()));
        }
        Ok(Window { x0, y0, x1, y1 })
    }

    pub fn corners(&self) -> [Point2; 4] {
        [
            [self.x0.clone(), self.y0.clone()],
            [self.x1.clone(), self.y0.clone()],
            [self.x1.clone(), self.y1.clone()],
            [self.x0.clone(), self.y1.clone()],
        ]
    }
}

/// The rectangle lies in the closure of a single ghost region.
pub fn region_contains(regions: &[GhostRegion], rect: &Window) -> bool {
    regions.iter().any(|r| rect.corners().iter().all(|c| r.closure_contains(c)))
}

/// Part of the piece inside the window, as a parameter interval.
fn clip_piece(p: &CurvePiece, w: &Window) -> Option<(Q, Q)> {
    let mut lo = p.t_lo.clone();
    let mut hi = p.t_hi.clone();
    let axes = [(&p.anchor[0], p.dir[0], &w.x0, &w.x1), (&p.anchor[1], p.dir[1], &w.y0, &w.y1)];
    for (a, d, min, max) in axes {
        if d == 0 {
            if a < min || a > max {
                return None;
            }
            continue;
        }
        let (t1, t2) = ((min - a) / q(d), (max - a) / q(d));
        let (tmin, tmax) = if t1 <= t2 { (t1, t2) } else { (t2, t1) };
        lo = Some(lo.map_or(tmin.clone(), |l| l.max(tmin)));
        hi = Some(hi.map_or(tmax.clone(), |h| h.min(tmax)));
    }
    let (lo, hi) = (lo?, hi?);
    (lo <= hi).then_some((lo, hi))
}

/// Clips the window polygon by the closed half-planes of the region.
fn clip_region(r: &GhostRegion, w: &Window) -> Vec<Point2> {
    let mut poly: Vec<Point2> = w.corners().to_vec();
    for h in &r.half_planes {
        let mut out = Vec::new();
        for k in 0..poly.len() {
            let (a, b) = (&poly[k], &poly[(k + 1) % poly.len()]);
            let (va, vb) = (h.eval(a), h.eval(b));
            if !va.is_negative() {
                out.push(a.clone());
            }
            if (va.is_negative() && vb.is_positive()) || (va.is_positive() && vb.is_negative()) {
                let t = &va / (&va - &vb);
                out.push([&a[0] + &t * (&b[0] - &a[0]), &a[1] + &t * (&b[1] - &a[1])]);
            }
        }
        poly = out;
        if poly.is_empty() {
            break;
        }
    }
    poly
}

/// Screen coordinates with two decimals; `y` grows downward.
fn screen(p: &Point2, w: &Window) -> (String, String) {
    let x = q_to_f64(&p[0]);
    let y = q_to_f64(&(&w.y0 + &w.y1 - &p[1]));
    (fmt2(x), fmt2(y))
}

fn fmt2(v: f64) -> String {
    let s = format!("{:.2}", v);
    if s == "-0.00" {
        "0.00".into()
    } else {
        s
    }
}

/// Deterministic SVG drawing of the curve inside the window.
pub fn render_svg(curve: &Curve2D, window: &Window) -> String {
    let (wx, wy) = (q_to_f64(&(&window.x1 - &window.x0)), q_to_f64(&(&window.y1 - &window.y0)));
    let stroke = fmt2(wx.max(wy) / 200.0);
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}" width="400" height="400">"#,
        fmt2(q_to_f64(&window.x0)),
        fmt2(q_to_f64(&window.y0)),
        fmt2(wx),
        fmt2(wy)
    );
    for (k, r) in curve.regions.iter().enumerate() {
        let poly = clip_region(r, window);
        if poly.len() < 3 {
            continue;
        }
        let pts: Vec<String> = poly
            .iter()
            .map(|p| {
                let (x, y) = screen(p, window);
                format!("{x},{y}")
            })
            .collect();
        let _ =
            writeln!(out, r##"  <polygon id="region-{k}" points="{}" fill="#c8c8c8" stroke="none"/>"##, pts.join(" "));
    }
    for (k, p) in curve.pieces.iter().enumerate() {
        let Some((lo, hi)) = clip_piece(p, window) else { continue };
        let (a, b) = (screen(&p.at(&lo), window), screen(&p.at(&hi), window));
        let color = if p.weight > 0 { "#000000" } else { "#808080" };
        let _ = writeln!(
            out,
            r#"  <path id="piece-{k}" d="M {} {} L {} {}" stroke="{color}" stroke-width="{stroke}" fill="none"/>"#,
            a.0, a.1, b.0, b.1
        );
    }
    for (k, v) in curve.vertices.iter().enumerate() {
        let inside = v[0] >= window.x0 && v[0] <= window.x1 && v[1] >= window.y0 && v[1] <= window.y1;
        if inside {
            let (x, y) = screen(v, window);
            let _ = writeln!(out, r##"  <circle id="vertex-{k}" cx="{x}" cy="{y}" r="{stroke}" fill="#000000"/>"##);
        }
    }
    out.push_str("</svg>\n");
    out
}

/// Root class of a tangible point, for cross-checking curve membership.
pub fn classify_plane_point(f: &Polynomial, p: &Point2) -> Result<RootClass> {
    classify_point(f, &[Scalar::t(p[0].clone()), Scalar::t(p[1].clone())])
}
