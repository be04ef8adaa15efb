//! Text form of polynomials.
//!
//! Terms are written `coeff*v^e*...` in descending order under the ring's
//! default monomial order, with variables inside a term in chain order.
//! Coefficients of `±1` are omitted, others are printed as `p/q` in lowest
//! terms. The parser accepts that form plus parentheses and powers of
//! subexpressions.

use std::fmt::{self, Write as _};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::monomial::Monomial;
use super::order::MonomialOrder;
use super::polynomial::Polynomial;
use super::ring::{Ring, Variable};
use super::Rational;
use crate::error::{Error, Result};

impl Polynomial {
    pub fn to_string_in(&self, order: &MonomialOrder) -> String {
        self.render(order, " ")
    }

    /// One term per line.
    pub fn to_pretty_string(&self) -> String {
        self.render(&MonomialOrder::new(self.ring().default_order()), "\n")
    }

    fn render(&self, order: &MonomialOrder, sep: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (pos, (m, c)) in self.sorted_terms(order).into_iter().enumerate() {
            let neg = c.is_negative();
            match (pos, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => write!(out, "{sep}- ").unwrap(),
                (_, false) => write!(out, "{sep}+ ").unwrap(),
            }
            let abs = c.abs();
            if m.is_one() {
                write!(out, "{abs}").unwrap();
                continue;
            }
            if !abs.is_one() {
                write!(out, "{abs}*").unwrap();
            }
            write_monomial(&mut out, self.ring(), m);
        }
        out
    }
}

fn write_monomial(out: &mut String, ring: &Ring, m: &Monomial) {
    for (pos, (i, e)) in m.pairs().enumerate() {
        if pos > 0 {
            out.push('*');
        }
        write!(out, "{}", ring.var(i)).unwrap();
        if e > 1 {
            write!(out, "^{e}").unwrap();
        }
    }
}

pub fn monomial_to_string(ring: &Ring, m: &Monomial) -> String {
    if m.is_one() {
        return "1".to_string();
    }
    let mut s = String::new();
    write_monomial(&mut s, ring, m);
    s
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in(&MonomialOrder::new(self.ring().default_order())))
    }
}

impl Polynomial {
    pub fn parse(ring: &Arc<Ring>, src: &str) -> Result<Polynomial> {
        let mut p = Parser {
            ring,
            src: src.as_bytes(),
            pos: 0,
        };
        let out = p.expr()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.err("unexpected trailing input"));
        }
        Ok(out)
    }
}

struct Parser<'a> {
    ring: &'a Arc<Ring>,
    src: &'a [u8],
    pos: usize,
}

const UNICODE_MINUS: &[u8] = "\u{2212}".as_bytes();

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        if self.src[self.pos..].starts_with(UNICODE_MINUS) {
            return Some(b'-');
        }
        self.src.get(self.pos).copied()
    }

    fn bump(&mut self) {
        if self.src[self.pos..].starts_with(UNICODE_MINUS) {
            self.pos += UNICODE_MINUS.len();
        } else {
            self.pos += 1;
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.bump();
            Ok(())
        } else {
            Err(self.err(&format!("expected `{}`", c as char)))
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = Polynomial::zero(self.ring);
        let mut first = true;
        loop {
            let sign = match self.peek() {
                Some(b'+') => {
                    self.bump();
                    1
                }
                Some(b'-') => {
                    self.bump();
                    -1
                }
                _ if first => 1,
                _ => break,
            };
            first = false;
            let t = self.term()?;
            acc = if sign < 0 { acc - t } else { acc + t };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.bump();
                    acc = acc * self.factor()?;
                }
                Some(b'/') => {
                    self.bump();
                    let d = self.factor()?;
                    let c = d
                        .as_constant()
                        .filter(|c| !c.is_zero())
                        .ok_or_else(|| self.err("division by a non-constant or zero"))?;
                    acc = acc.scale(&c.recip());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.bump();
            self.skip_ws();
            let e = self
                .uint()?
                .to_u32()
                .ok_or_else(|| self.err("exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn uint(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().expect("digits"))
    }

    fn small(&mut self) -> Result<usize> {
        self.skip_ws();
        self.uint()?
            .to_usize()
            .ok_or_else(|| self.err("index too large"))
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'(') => {
                self.bump();
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.uint()?;
                Ok(Polynomial::constant(self.ring, Rational::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let v = self.variable()?;
                let idx = self
                    .ring
                    .index_of(&v)
                    .ok_or_else(|| Error::UnknownVariable(v.to_string()))?;
                Ok(Polynomial::var_index(self.ring, idx))
            }
            _ => Err(self.err("expected a number, variable or `(`")),
        }
    }

    fn variable(&mut self) -> Result<Variable> {
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        if name == "T" && self.peek() == Some(b'[') {
            self.bump();
            let i = self.small()?;
            self.expect(b',')?;
            let j = self.small()?;
            self.expect(b',')?;
            let k = self.small()?;
            self.expect(b']')?;
            return Ok(Variable::t(i, j, k));
        }
        let indexed = |prefix: &str| {
            name.strip_prefix(prefix)
                .filter(|rest| !rest.is_empty() && rest.bytes().all(|b| b.is_ascii_digit()))
                .and_then(|rest| rest.parse::<usize>().ok())
        };
        if let Some(k) = indexed("U") {
            return Ok(Variable::U(k));
        }
        if let Some(k) = indexed("xi") {
            return Ok(Variable::Xi(k));
        }
        Ok(Variable::named(name))
    }
}
