//! Constructor expressions.
//!
//! ```text
//! expr := "Z/" n | "F" q
//!       | "mat(" k "," expr ")" | "tri(" k "," expr ")"
//!       | "prod(" expr ("," expr)* ")"
//!       | "quot(" expr "," "[" idx ("," idx)* "]" ")"
//!       | "poly(" expr "," "[" idx ("," idx)* "]" ")"
//!       | "opp(" expr ")"
//! ```
//!
//! `quot` takes element indices of the inner ring that generate a
//! two-sided ideal; `poly` takes the coefficients of a monic modulus,
//! constant term first.

use std::fmt;

use crate::config::Bounds;
use crate::error::{Error, Result};

use super::build::{
    integers_mod, matrix_ring, opposite, polynomial_quotient, prime_power_field, product,
    quotient_by_generators, triangular_ring,
};
use super::FiniteRing;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingExpr {
    Integers(usize),
    Field(usize),
    Matrix(usize, Box<RingExpr>),
    Triangular(usize, Box<RingExpr>),
    Product(Vec<RingExpr>),
    Quotient(Box<RingExpr>, Vec<usize>),
    Poly(Box<RingExpr>, Vec<usize>),
    Opposite(Box<RingExpr>),
}

fn join(xs: &[usize]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for RingExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingExpr::Integers(n) => write!(f, "Z/{n}"),
            RingExpr::Field(q) => write!(f, "F{q}"),
            RingExpr::Matrix(k, x) => write!(f, "mat({k},{x})"),
            RingExpr::Triangular(k, x) => write!(f, "tri({k},{x})"),
            RingExpr::Product(xs) => {
                write!(f, "prod(")?;
                for (i, x) in xs.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, ")")
            }
            RingExpr::Quotient(x, g) => write!(f, "quot({x},[{}])", join(g)),
            RingExpr::Poly(x, c) => write!(f, "poly({x},[{}])", join(c)),
            RingExpr::Opposite(x) => write!(f, "opp({x})"),
        }
    }
}

impl RingExpr {
    /// Builds the ring, rejecting any intermediate ring above `bounds.profile`.
    pub fn build(&self, bounds: &Bounds) -> Result<FiniteRing> {
        let ring = match self {
            RingExpr::Integers(n) => integers_mod(*n)?,
            RingExpr::Field(q) => prime_power_field(*q)?,
            RingExpr::Matrix(k, x) => matrix_ring(*k, &x.build(bounds)?)?,
            RingExpr::Triangular(k, x) => triangular_ring(*k, &x.build(bounds)?)?,
            RingExpr::Product(xs) => {
                let fs: Result<Vec<_>> = xs.iter().map(|x| x.build(bounds)).collect();
                product(&fs?)?
            }
            RingExpr::Quotient(x, g) => quotient_by_generators(&x.build(bounds)?, g)?.ring,
            RingExpr::Poly(x, c) => polynomial_quotient(&x.build(bounds)?, c)?,
            RingExpr::Opposite(x) => opposite(&x.build(bounds)?)?,
        };
        if ring.order() > bounds.profile {
            return Err(Error::OrderBound {
                which: "profile",
                order: ring.order(),
                bound: bounds.profile,
            });
        }
        let canonical = self.to_string();
        Ok(FiniteRing {
            name: canonical.clone(),
            provenance: canonical,
            ..ring
        })
    }
}

/// Parses and builds a constructor expression.
pub fn build_ring(spec: &str, bounds: &Bounds) -> Result<FiniteRing> {
    parse_expr(spec)?.build(bounds)
}

pub fn parse_expr(input: &str) -> Result<RingExpr> {
    let mut p = Parser { src: input.as_bytes(), pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("trailing input"));
    }
    Ok(e)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            offset: self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(token.as_bytes()) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{token}`")))
        }
    }

    fn number(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| Error::Parse {
                offset: start,
                message: "number too large".into(),
            })
    }

    fn index_list(&mut self) -> Result<Vec<usize>> {
        self.expect("[")?;
        let mut out = Vec::new();
        if self.eat("]") {
            return Ok(out);
        }
        loop {
            out.push(self.number()?);
            if self.eat("]") {
                return Ok(out);
            }
            self.expect(",")?;
        }
    }

    fn expr(&mut self) -> Result<RingExpr> {
        self.skip_ws();
        let start = self.pos;
        if self.eat("Z/") {
            return Ok(RingExpr::Integers(self.number()?));
        }
        for (kw, kind) in [("mat(", 0), ("tri(", 1)] {
            if self.eat(kw) {
                let k = self.number()?;
                self.expect(",")?;
                let x = Box::new(self.expr()?);
                self.expect(")")?;
                return Ok(if kind == 0 {
                    RingExpr::Matrix(k, x)
                } else {
                    RingExpr::Triangular(k, x)
                });
            }
        }
        if self.eat("prod(") {
            let mut xs = vec![self.expr()?];
            while self.eat(",") {
                xs.push(self.expr()?);
            }
            self.expect(")")?;
            return Ok(RingExpr::Product(xs));
        }
        for (kw, is_quot) in [("quot(", true), ("poly(", false)] {
            if self.eat(kw) {
                let x = Box::new(self.expr()?);
                self.expect(",")?;
                let list = self.index_list()?;
                self.expect(")")?;
                return Ok(if is_quot {
                    RingExpr::Quotient(x, list)
                } else {
                    RingExpr::Poly(x, list)
                });
            }
        }
        if self.eat("opp(") {
            let x = Box::new(self.expr()?);
            self.expect(")")?;
            return Ok(RingExpr::Opposite(x));
        }
        if self.eat("F") {
            return Ok(RingExpr::Field(self.number()?));
        }
        self.pos = start;
        Err(self.error("expected a ring constructor"))
    }
}
