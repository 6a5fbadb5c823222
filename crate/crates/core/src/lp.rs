//! Exact feasibility of mixed strict/weak linear inequality systems by
//! Fourier–Motzkin elimination over the rationals.

use std::collections::HashMap;

use num_traits::{One, Signed, Zero};

use crate::scalar::{q, Q};

/// `coeffs · x + constant > 0` when `strict`, otherwise `≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ineq {
    pub coeffs: Vec<Q>,
    pub constant: Q,
    pub strict: bool,
}

impl Ineq {
    pub fn new(coeffs: Vec<Q>, constant: Q, strict: bool) -> Ineq {
        Ineq { coeffs, constant, strict }
    }

    /// Value of the left-hand side at `x`.
    pub fn eval(&self, x: &[Q]) -> Q {
        self.coeffs.iter().zip(x).fold(self.constant.clone(), |acc, (a, b)| acc + a * b)
    }

    pub fn holds_at(&self, x: &[Q]) -> bool {
        let v = self.eval(x);
        if self.strict {
            v.is_positive()
        } else {
            !v.is_negative()
        }
    }

    /// Scales so the largest absolute coefficient is one.
    fn normalized(&self) -> Ineq {
        let m = self.coeffs.iter().map(|c| c.abs()).max().unwrap_or_else(Q::zero);
        if m.is_zero() {
            return self.clone();
        }
        Ineq {
            coeffs: self.coeffs.iter().map(|c| c / &m).collect(),
            constant: &self.constant / &m,
            strict: self.strict,
        }
    }
}

/// Keeps, for each normalized direction, only the tightest inequality.
/// Returns `None` when a constant inequality is violated.
fn reduce(rows: Vec<Ineq>) -> Option<Vec<Ineq>> {
    let mut best: HashMap<Vec<Q>, Ineq> = HashMap::new();
    let mut order = Vec::new();
    for r in rows {
        let r = r.normalized();
        if r.coeffs.iter().all(Zero::is_zero) {
            let ok = if r.strict { r.constant.is_positive() } else { !r.constant.is_negative() };
            if !ok {
                return None;
            }
            continue;
        }
        match best.get_mut(&r.coeffs) {
            Some(old) => {
                if r.constant < old.constant || (r.constant == old.constant && r.strict) {
                    *old = r;
                }
            }
            None => {
                order.push(r.coeffs.clone());
                best.insert(r.coeffs.clone(), r);
            }
        }
    }
    Some(order.into_iter().map(|k| best.remove(&k).unwrap()).collect())
}

/// Eliminates variable `k`; the result no longer involves it.
fn eliminate(rows: &[Ineq], k: usize) -> Vec<Ineq> {
    let (mut pos, mut neg, mut out) = (Vec::new(), Vec::new(), Vec::new());
    for r in rows {
        if r.coeffs[k].is_positive() {
            pos.push(r);
        } else if r.coeffs[k].is_negative() {
            neg.push(r);
        } else {
            out.push(r.clone());
        }
    }
    for p in &pos {
        for n in &neg {
            let a = -&n.coeffs[k];
            let b = p.coeffs[k].clone();
            let coeffs = p.coeffs.iter().zip(&n.coeffs).map(|(x, y)| x * &a + y * &b).collect();
            let constant = &p.constant * &a + &n.constant * &b;
            out.push(Ineq { coeffs, constant, strict: p.strict || n.strict });
        }
    }
    out
}

/// Runs the elimination and returns the systems at every level, where level
/// `k` only involves variables `0..k`. `None` means infeasible.
fn levels(n: usize, rows: &[Ineq]) -> Option<Vec<Vec<Ineq>>> {
    let mut current = reduce(rows.to_vec())?;
    let mut out = vec![Vec::new(); n + 1];
    for k in (0..n).rev() {
        let next = reduce(eliminate(&current, k))?;
        out[k + 1] = current;
        current = next;
    }
    out[0] = current;
    Some(out)
}

pub fn feasible(n: usize, rows: &[Ineq]) -> bool {
    levels(n, rows).is_some()
}

/// A feasible point, chosen deterministically: weak bounds are attained when
/// possible, otherwise the midpoint or a unit step away from the bound.
pub fn find_point(n: usize, rows: &[Ineq]) -> Option<Vec<Q>> {
    let lv = levels(n, rows)?;
    let mut x: Vec<Q> = Vec::with_capacity(n);
    for k in 0..n {
        let mut lower: Option<(Q, bool)> = None;
        let mut upper: Option<(Q, bool)> = None;
        for r in &lv[k + 1] {
            let a = &r.coeffs[k];
            if a.is_zero() {
                continue;
            }
            let rest = r.coeffs[..k].iter().zip(&x).fold(r.constant.clone(), |acc, (c, v)| acc + c * v);
            let bound = -rest / a;
            if a.is_positive() {
                if lower.as_ref().is_none_or(|(b, s)| bound > *b || (bound == *b && r.strict && !s)) {
                    lower = Some((bound, r.strict));
                }
            } else if upper.as_ref().is_none_or(|(b, s)| bound < *b || (bound == *b && r.strict && !s)) {
                upper = Some((bound, r.strict));
            }
        }
        let v = match (lower, upper) {
            (None, None) => Q::zero(),
            (Some((l, false)), _) => l,
            (Some((l, true)), None) => l + Q::one(),
            (None, Some((u, false))) => u,
            (None, Some((u, true))) => u - Q::one(),
            (Some((_, true)), Some((u, false))) => u,
            (Some((l, true)), Some((u, true))) => (l + u) / q(2),
        };
        x.push(v);
    }
    debug_assert!(rows.iter().all(|r| r.holds_at(&x)));
    Some(x)
}
