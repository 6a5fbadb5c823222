//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr   = term { "+" term }
//! term   = factor { ["*"] factor }
//! factor = atom [ "^" exponent ]
//! atom   = scalar | variable | "(" expr ")"
//! ```
//!
//! `+` is the layered maximum and `*` (or juxtaposition) the product. Scalars
//! follow the scalar text form (`3`, `-5/2`, `3g`, `ninf`, `3:+`). Variables are
//! `x`, `y`, `z`, `w` for the first four indeterminates, or `x1`, `x2`, ....

use num_traits::{Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::poly::{scale_exp, Polynomial};
use crate::scalar::{parse_q, Scalar, Tag, Q};

/// Parses a non-Laurent polynomial whose arity is the largest variable index used.
pub fn parse(text: &str) -> Result<Polynomial> {
    parse_with(text, None, false)
}

/// Parses a Laurent polynomial; negative exponents are allowed.
pub fn parse_laurent(text: &str) -> Result<Polynomial> {
    parse_with(text, None, true)
}

/// Parses with an optional minimum arity.
pub fn parse_with(text: &str, arity: Option<usize>, laurent: bool) -> Result<Polynomial> {
    let mut parser = Parser { src: text.as_bytes(), pos: 0, max_var: 0 };
    parser.skip_ws();
    if parser.at_end() {
        return Err(parser.error("empty expression"));
    }
    let ast = parser.expr()?;
    parser.skip_ws();
    if !parser.at_end() {
        return Err(parser.error("unexpected character"));
    }
    let n = arity.unwrap_or(1).max(parser.max_var).max(1);
    let p = build(&ast, n)?;
    if laurent {
        p.with_laurent(true)
    } else if p.terms().any(|(e, _)| e.iter().any(|&x| x < 0)) {
        Err(Error::NegativeExponent)
    } else {
        p.with_laurent(false)
    }
}

enum Ast {
    Scalar(Scalar),
    Var(usize),
    Sum(Vec<Ast>),
    Product(Vec<Ast>),
    Power(Box<Ast>, Q, usize),
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    max_var: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Syntax { pos: self.pos, msg: msg.to_string() }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b) if b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, b: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Ast> {
        let mut terms = vec![self.term()?];
        while self.eat(b'+') {
            terms.push(self.term()?);
        }
        Ok(if terms.len() == 1 { terms.pop().unwrap() } else { Ast::Sum(terms) })
    }

    fn term(&mut self) -> Result<Ast> {
        let mut factors = vec![self.factor()?];
        loop {
            if self.eat(b'*') {
                factors.push(self.factor()?);
                continue;
            }
            self.skip_ws();
            match self.peek() {
                Some(b) if b == b'(' || b == b'-' || b.is_ascii_alphanumeric() => factors.push(self.factor()?),
                _ => break,
            }
        }
        Ok(if factors.len() == 1 { factors.pop().unwrap() } else { Ast::Product(factors) })
    }

    fn factor(&mut self) -> Result<Ast> {
        let atom = self.atom()?;
        if self.eat(b'^') {
            self.skip_ws();
            let at = self.pos;
            let e = if self.eat(b'(') {
                let e = self.rational()?;
                if !self.eat(b')') {
                    return Err(self.error("expected `)`"));
                }
                e
            } else {
                self.rational()?
            };
            return Ok(Ast::Power(Box::new(atom), e, at));
        }
        Ok(atom)
    }

    fn atom(&mut self) -> Result<Ast> {
        self.skip_ws();
        match self.peek() {
            None => Err(self.error("unexpected end of input")),
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected `)`"));
                }
                Ok(e)
            }
            Some(b) if b == b'-' || b.is_ascii_digit() => self.scalar(),
            Some(b) if b.is_ascii_alphabetic() => self.word(),
            Some(_) => Err(self.error("unexpected character")),
        }
    }

    fn digits(&mut self) -> &str {
        let start = self.pos;
        while matches!(self.peek(), Some(b) if b.is_ascii_digit()) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).unwrap()
    }

    fn rational(&mut self) -> Result<Q> {
        let start = self.pos;
        if self.peek() == Some(b'-') {
            self.pos += 1;
        }
        if self.digits().is_empty() {
            return Err(self.error("expected a number"));
        }
        if self.peek() == Some(b'/') {
            self.pos += 1;
            if self.digits().is_empty() {
                return Err(self.error("expected a denominator"));
            }
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        parse_q(text).ok_or_else(|| Error::Syntax { pos: start, msg: format!("invalid number `{text}`") })
    }

    fn scalar(&mut self) -> Result<Ast> {
        let v = self.rational()?;
        if self.peek() == Some(b'g') {
            self.pos += 1;
            return Ok(Ast::Scalar(Scalar::g(v)));
        }
        if self.peek() == Some(b':') {
            let tag = match self.src.get(self.pos + 1) {
                Some(b'+') => Tag::Pos,
                Some(b'-') => Tag::Neg,
                _ => return Err(self.error("expected `+` or `-` after `:`")),
            };
            self.pos += 2;
            return Ok(Ast::Scalar(Scalar::Tangible(v, tag)));
        }
        Ok(Ast::Scalar(Scalar::t(v)))
    }

    fn word(&mut self) -> Result<Ast> {
        let start = self.pos;
        if self.src[self.pos..].starts_with(b"ninf") {
            self.pos += 4;
            return Ok(Ast::Scalar(Scalar::Zero));
        }
        let c = self.src[self.pos];
        self.pos += 1;
        let index = match c {
            b'x' => {
                let d = self.digits();
                if d.is_empty() {
                    1
                } else {
                    match d.parse::<usize>() {
                        Ok(k) if k >= 1 => k,
                        _ => return Err(Error::Syntax { pos: start, msg: "variable index must be positive".into() }),
                    }
                }
            }
            b'y' => 2,
            b'z' => 3,
            b'w' => 4,
            _ => return Err(Error::Syntax { pos: start, msg: format!("unknown variable `{}`", c as char) }),
        };
        self.max_var = self.max_var.max(index);
        Ok(Ast::Var(index - 1))
    }
}

fn build(ast: &Ast, n: usize) -> Result<Polynomial> {
    match ast {
        Ast::Scalar(s) => Ok(Polynomial::constant(n, s.clone())),
        Ast::Var(k) => Ok(Polynomial::var(n, *k)),
        Ast::Sum(items) => {
            let mut acc = Polynomial::zero(n);
            for a in items {
                acc = &acc + &build(a, n)?;
            }
            Ok(acc)
        }
        Ast::Product(items) => {
            let mut acc = Polynomial::one(n);
            for a in items {
                acc = &acc * &build(a, n)?;
            }
            Ok(acc)
        }
        Ast::Power(base, e, at) => {
            let b = build(base, n)?;
            if e.is_integer() && !e.is_negative() {
                let m = e
                    .to_integer()
                    .to_u32()
                    .ok_or_else(|| Error::Syntax { pos: *at, msg: "exponent too large".into() })?;
                return Ok(b.pow(m));
            }
            monomial_power(&b, e).map_err(|err| match err {
                Error::Invalid(msg) => Error::Syntax { pos: *at, msg },
                other => other,
            })
        }
    }
}

/// Rational or negative power of a single term.
fn monomial_power(b: &Polynomial, e: &Q) -> Result<Polynomial> {
    let (exp, c) = match b.terms().next() {
        Some(t) if b.is_monomial() => t,
        _ => return Err(Error::Invalid("only a single term can be raised to a negative or fractional power".into())),
    };
    let exp =
        scale_exp(exp, e).ok_or_else(|| Error::Invalid("fractional power leaves a non-integer exponent".into()))?;
    Ok(Polynomial::monomial(exp, c.pow(e)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q, qf};

    #[test]
    fn grammar_basics() {
        let f = parse("(x + 7)*(x + 3)").unwrap();
        assert_eq!(f, Polynomial::univariate([(2, Scalar::ti(0)), (1, Scalar::ti(7)), (0, Scalar::ti(10))]));
        assert!(parse("ninf").unwrap().is_zero());
        assert_eq!(parse("2x").unwrap(), parse("2*x").unwrap());
        assert_eq!(parse("x y").unwrap(), parse("x1*x2").unwrap());
        assert_eq!(parse("x^2 + 3g*x + 5").unwrap().coeff1(1), Scalar::g(q(3)));
        assert_eq!(parse("x^(1/2)^2").ok(), None);
    }

    #[test]
    fn laurent_atoms() {
        let f = parse_laurent("x^-1 + 0").unwrap();
        assert!(f.is_laurent());
        assert_eq!(f.coeff1(-1), Scalar::one());
        assert_eq!(f.coeff1(0), Scalar::one());
        assert_eq!(parse("x^-1 + 0"), Err(Error::NegativeExponent));
    }

    #[test]
    fn rational_powers_of_terms() {
        assert_eq!(parse("(4x^2)^(1/2)").unwrap(), parse("2x").unwrap());
        assert_eq!(parse("3^(1/2)").unwrap(), Polynomial::constant(1, Scalar::t(qf(3, 2))));
        assert!(matches!(parse("(x+1)^(1/2)"), Err(Error::Syntax { .. })));
        assert!(matches!(parse("(x)^(1/2)"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        assert!(matches!(parse(""), Err(Error::Syntax { pos: 0, .. })));
        assert!(matches!(parse("x + "), Err(Error::Syntax { .. })));
        assert!(matches!(parse("x + q"), Err(Error::Syntax { pos: 4, .. })));
        assert!(matches!(parse("(x + 1"), Err(Error::Syntax { .. })));
        assert!(matches!(parse("3:*x"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn repeated_exponents_are_added() {
        assert_eq!(parse("x + x").unwrap(), parse("0g*x").unwrap());
        assert_eq!(parse("3 + 2 + 3").unwrap(), parse("3g").unwrap());
    }
}
