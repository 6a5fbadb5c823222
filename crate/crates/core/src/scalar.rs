//! Layered max-plus scalars in logarithmic notation.
//!
//! A scalar is the zero element (written `ninf`), a tangible value, or a ghost
//! value. Addition keeps the operand with the larger value and turns a tie into
//! a ghost; multiplication adds values and is tangible only when both factors
//! are. Values are exact rationals.
//!
//! Besides the standard model there is a signed model in which tangibles carry a
//! sign tag. Ghosts never carry a tag.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero as _};

use crate::error::{Error, Result};

/// Exact ground values.
pub type Q = BigRational;

/// Integer as a ground value.
pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Fraction `n/d` as a ground value. Panics when `d == 0`.
pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Renders a rational as `p/q` in lowest terms, or `p` when integral.
pub fn fmt_q(v: &Q) -> String {
    if v.denom().is_one() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

/// Parses `p` or `p/q` with an optional leading minus sign.
pub fn parse_q(s: &str) -> Option<Q> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a, Some(b)),
        None => (s, None),
    };
    let valid = |t: &str, signed: bool| {
        let t = if signed { t.strip_prefix('-').unwrap_or(t) } else { t };
        !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid(num, true) {
        return None;
    }
    let n: BigInt = num.parse().ok()?;
    let d: BigInt = match den {
        Some(d) if valid(d, false) => d.parse().ok()?,
        Some(_) => return None,
        None => BigInt::one(),
    };
    if d.is_zero() {
        return None;
    }
    Some(Q::new(n, d))
}

/// Nearest `f64`, for display purposes only.
pub fn q_to_f64(v: &Q) -> f64 {
    v.to_f64().unwrap_or(f64::NAN)
}

/// Model marker carried by tangible elements.
///
/// `Unit` is the standard model where equal values mean equal elements. In the
/// signed model two tangibles with the same value may differ by sign. `Unit`
/// behaves as the neutral tag when the two are mixed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tag {
    Unit,
    Pos,
    Neg,
}

impl Mul for Tag {
    type Output = Tag;

    fn mul(self, other: Tag) -> Tag {
        match (self, other) {
            (Tag::Unit, t) | (t, Tag::Unit) => t,
            (a, b) if a == b => Tag::Pos,
            _ => Tag::Neg,
        }
    }
}

impl Tag {
    fn pow_int(self, e: &BigInt) -> Tag {
        match self {
            Tag::Neg if e.is_odd() => Tag::Neg,
            Tag::Neg => Tag::Pos,
            t => t,
        }
    }
}

/// Which part of the semiring an element lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Layer {
    Zero,
    Tangible,
    Ghost,
}

/// A layered scalar.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Zero,
    Tangible(Q, Tag),
    Ghost(Q),
}

impl Scalar {
    /// Tangible element of the standard model.
    pub fn t(v: Q) -> Scalar {
        Scalar::Tangible(v, Tag::Unit)
    }

    pub fn g(v: Q) -> Scalar {
        Scalar::Ghost(v)
    }

    pub fn ti(n: i64) -> Scalar {
        Scalar::t(q(n))
    }

    pub fn gi(n: i64) -> Scalar {
        Scalar::g(q(n))
    }

    /// The multiplicative unit, value 0.
    pub fn one() -> Scalar {
        Scalar::ti(0)
    }

    pub fn value(&self) -> Option<&Q> {
        match self {
            Scalar::Zero => None,
            Scalar::Tangible(v, _) | Scalar::Ghost(v) => Some(v),
        }
    }

    pub fn layer(&self) -> Layer {
        match self {
            Scalar::Zero => Layer::Zero,
            Scalar::Tangible(..) => Layer::Tangible,
            Scalar::Ghost(_) => Layer::Ghost,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Scalar::Zero)
    }

    pub fn is_tangible(&self) -> bool {
        matches!(self, Scalar::Tangible(..))
    }

    pub fn is_ghost(&self) -> bool {
        matches!(self, Scalar::Ghost(_))
    }

    /// Member of the ghost ideal including zero.
    pub fn in_ghost_ideal(&self) -> bool {
        !self.is_tangible()
    }

    /// True for tangibles carrying a sign tag.
    pub fn is_signed(&self) -> bool {
        matches!(self, Scalar::Tangible(_, Tag::Pos | Tag::Neg))
    }

    /// The ghost map.
    pub fn nu(&self) -> Scalar {
        match self {
            Scalar::Tangible(v, _) => Scalar::Ghost(v.clone()),
            other => other.clone(),
        }
    }

    /// Tangible element with the same value; zero stays zero.
    pub fn tangible_lift(&self) -> Scalar {
        match self {
            Scalar::Ghost(v) => Scalar::t(v.clone()),
            other => other.clone(),
        }
    }

    /// The duality isomorphism onto the order-reversed semifield.
    pub fn dual(&self) -> Scalar {
        match self {
            Scalar::Zero => Scalar::Zero,
            Scalar::Tangible(v, t) => Scalar::Tangible(-v, *t),
            Scalar::Ghost(v) => Scalar::Ghost(-v),
        }
    }

    /// Compares ghost images; zero is the smallest element.
    pub fn cmp_nu(&self, other: &Scalar) -> Ordering {
        match (self.value(), other.value()) {
            (None, None) => Ordering::Equal,
            (None, Some(_)) => Ordering::Less,
            (Some(_), None) => Ordering::Greater,
            (Some(a), Some(b)) => a.cmp(b),
        }
    }

    /// Addition in the dual (min) convention: the smaller value wins.
    pub fn add_min(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Zero, x) | (x, Scalar::Zero) => x.clone(),
            _ => match self.cmp_nu(other) {
                Ordering::Less => self.clone(),
                Ordering::Greater => other.clone(),
                Ordering::Equal => self.nu(),
            },
        }
    }

    /// `self` raised to a rational power.
    pub fn pow(&self, e: &Q) -> Result<Scalar> {
        match self {
            Scalar::Zero => {
                if e.is_positive() {
                    Ok(Scalar::Zero)
                } else {
                    Err(Error::NotInvertible)
                }
            }
            Scalar::Ghost(v) => Ok(Scalar::Ghost(v * e)),
            Scalar::Tangible(v, tag) => {
                let tag = match tag {
                    Tag::Neg if e.denom().is_even() => return Err(Error::NoTangibleRoot),
                    t => t.pow_int(e.numer()),
                };
                Ok(Scalar::Tangible(v * e, tag))
            }
        }
    }

    /// Integer power; never fails for positive exponents.
    pub fn powi(&self, e: i64) -> Result<Scalar> {
        self.pow(&q(e))
    }

    /// Scalar ghost surpassing: `self = other + c` for some `c` in the ghost ideal.
    pub fn ghost_surpasses(&self, other: &Scalar) -> bool {
        self == other || (self.in_ghost_ideal() && self.cmp_nu(other) != Ordering::Less)
    }

    /// Same layer and same ghost image; ignores sign tags.
    pub fn equiv(&self, other: &Scalar) -> bool {
        self.layer() == other.layer() && self.cmp_nu(other) == Ordering::Equal
    }
}

impl Add for &Scalar {
    type Output = Scalar;

    fn add(self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Zero, x) | (x, Scalar::Zero) => x.clone(),
            _ => match self.cmp_nu(other) {
                Ordering::Greater => self.clone(),
                Ordering::Less => other.clone(),
                Ordering::Equal => self.nu(),
            },
        }
    }
}

impl Add for Scalar {
    type Output = Scalar;

    fn add(self, other: Scalar) -> Scalar {
        &self + &other
    }
}

impl Mul for &Scalar {
    type Output = Scalar;

    fn mul(self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Zero, _) | (_, Scalar::Zero) => Scalar::Zero,
            (Scalar::Tangible(a, s), Scalar::Tangible(b, t)) => Scalar::Tangible(a + b, *s * *t),
            (x, y) => Scalar::Ghost(x.value().unwrap() + y.value().unwrap()),
        }
    }
}

impl Mul for Scalar {
    type Output = Scalar;

    fn mul(self, other: Scalar) -> Scalar {
        &self * &other
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Zero => write!(f, "ninf"),
            Scalar::Tangible(v, Tag::Unit) => write!(f, "{}", fmt_q(v)),
            Scalar::Tangible(v, Tag::Pos) => write!(f, "{}:+", fmt_q(v)),
            Scalar::Tangible(v, Tag::Neg) => write!(f, "{}:-", fmt_q(v)),
            Scalar::Ghost(v) => write!(f, "{}g", fmt_q(v)),
        }
    }
}

impl FromStr for Scalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Scalar> {
        let s = s.trim();
        let bad = || Error::Syntax { pos: 0, msg: format!("invalid scalar `{s}`") };
        if s == "ninf" {
            return Ok(Scalar::Zero);
        }
        let (body, tag) = match s.rsplit_once(':') {
            Some((b, "+")) => (b, Some(Tag::Pos)),
            Some((b, "-")) => (b, Some(Tag::Neg)),
            Some(_) => return Err(bad()),
            None => (s, None),
        };
        if let Some(v) = body.strip_suffix('g') {
            if tag.is_some() {
                return Err(bad());
            }
            return parse_q(v).map(Scalar::Ghost).ok_or_else(bad);
        }
        let v = parse_q(body).ok_or_else(bad)?;
        Ok(Scalar::Tangible(v, tag.unwrap_or(Tag::Unit)))
    }
}
