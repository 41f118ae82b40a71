//! Expressions over the enveloping algebra.
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ['^' digits]
//! atom   := digits ['/' digits] | gen | param | '(' expr ')'
//! gen    := ('L' | 'J' | 'G') '(' ['-'] digits ')' | 'C1' | 'C2' | 'C3'
//! param  := alpha | beta | F | ell1 | ell2 | ell3 | lambda | mu | nu
//! ```
//!
//! Products do not commute, so an expression is a list of `coefficient *
//! word` terms with the words kept in the order written.

use ehv_core::{Generator, LieElement, Param, Scalar};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
#[error("{msg} at offset {at} in {input:?}")]
pub struct ParseError {
    pub input: String,
    pub at: usize,
    pub msg: String,
}

/// `sum c_i * w_i` with unnormalized words.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Expr(pub Vec<(Scalar, Vec<Generator>)>);

impl Expr {
    fn scalar(c: Scalar) -> Self {
        Expr(vec![(c, Vec::new())])
    }

    fn generator(g: Generator) -> Self {
        Expr(vec![(Scalar::one(), vec![g])])
    }

    fn add(mut self, other: Expr) -> Self {
        self.0.extend(other.0);
        self
    }

    fn neg(self) -> Self {
        Expr(self.0.into_iter().map(|(c, w)| (-c, w)).collect())
    }

    fn mul(&self, other: &Expr) -> Self {
        let mut out = Vec::new();
        for (a, u) in &self.0 {
            for (b, v) in &other.0 {
                let mut w = u.clone();
                w.extend(v);
                out.push((a * b, w));
            }
        }
        Expr(out)
    }

    /// The expression as a Lie element, if every term has exactly one generator.
    pub fn to_lie(&self) -> Option<LieElement> {
        let mut out = LieElement::zero();
        for (c, w) in &self.0 {
            match w.as_slice() {
                [g] => out.add_term(*g, c),
                _ if c.is_zero() => {}
                _ => return None,
            }
        }
        Some(out)
    }

    /// The expression as a pure scalar, if no term has a generator.
    pub fn to_scalar(&self) -> Option<Scalar> {
        let mut out = Scalar::zero();
        for (c, w) in &self.0 {
            if !w.is_empty() {
                return None;
            }
            out += c;
        }
        Some(out)
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            input: self.src.to_string(),
            at: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{c}'"))
        }
    }

    fn digits(&mut self) -> Result<i64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.src[self.pos..].starts_with(|c: char| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a number");
        }
        match self.src[start..self.pos].parse() {
            Ok(n) => Ok(n),
            Err(_) => self.err("number out of range"),
        }
    }

    fn ident(&mut self) -> &'a str {
        self.skip_ws();
        let start = self.pos;
        while self.src[self.pos..].starts_with(|c: char| c.is_ascii_alphanumeric() || c == '_') {
            self.pos += 1;
        }
        &self.src[start..self.pos]
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut acc = if self.eat('-') {
            self.term()?.neg()
        } else {
            self.term()?
        };
        loop {
            if self.eat('+') {
                acc = acc.add(self.term()?);
            } else if self.eat('-') {
                acc = acc.add(self.term()?.neg());
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let n = self.digits()?;
        let mut acc = Expr::scalar(Scalar::one());
        for _ in 0..n {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek() {
            None => self.err("unexpected end of input"),
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.digits()?;
                let den = if self.eat('/') { self.digits()? } else { 1 };
                if den == 0 {
                    return self.err("zero denominator");
                }
                Ok(Expr::scalar(Scalar::from_frac(num, den)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                let name = self.ident();
                let gen = match name {
                    "C1" => Some(Generator::C1),
                    "C2" => Some(Generator::C2),
                    "C3" => Some(Generator::C3),
                    "L" | "J" | "G" => {
                        self.expect('(')?;
                        let neg = self.eat('-');
                        let n = self.digits()?;
                        self.expect(')')?;
                        let n = if neg { -n } else { n };
                        Some(match name {
                            "L" => Generator::L(n),
                            "J" => Generator::J(n),
                            _ => Generator::G(n),
                        })
                    }
                    _ => None,
                };
                if let Some(g) = gen {
                    return Ok(Expr::generator(g));
                }
                match Param::from_name(name) {
                    Some(p) => Ok(Expr::scalar(Scalar::param(p))),
                    None => {
                        self.pos = start;
                        self.err(format!("unknown name {name:?}"))
                    }
                }
            }
            Some(c) => self.err(format!("unexpected '{c}'")),
        }
    }
}

pub fn parse(src: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { src, pos: 0 };
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(e)
}

pub fn parse_lie(src: &str) -> Result<LieElement, ParseError> {
    parse(src)?.to_lie().ok_or_else(|| ParseError {
        input: src.to_string(),
        at: 0,
        msg: "expected a linear combination of generators".into(),
    })
}

pub fn parse_scalar(src: &str) -> Result<Scalar, ParseError> {
    parse(src)?.to_scalar().ok_or_else(|| ParseError {
        input: src.to_string(),
        at: 0,
        msg: "expected a scalar".into(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use Generator::*;

    #[test]
    fn generators_and_products() {
        let e = parse("L(2)*L(-2)").unwrap();
        assert_eq!(e.0, vec![(Scalar::one(), vec![L(2), L(-2)])]);
        let e = parse("2*J(0) - 1/2*C1").unwrap();
        assert_eq!(e.0.len(), 2);
        assert_eq!(e.0[1].0, Scalar::from_frac(-1, 2));
    }

    #[test]
    fn powers_and_parameters() {
        let e = parse("(alpha + 1)*G(-1)^2").unwrap();
        assert_eq!(e.0.len(), 2);
        assert_eq!(e.0[0].1, vec![G(-1), G(-1)]);
        assert_eq!(parse_scalar("F^2").unwrap(), Scalar::param(Param::F).pow(2));
    }

    #[test]
    fn lie_elements() {
        let l = parse_lie("J(0) - 2*C2").unwrap();
        assert_eq!(l.coeff(C2), Scalar::from_int(-2));
        assert!(parse_lie("L(1)*L(2)").is_err());
    }

    #[test]
    fn errors_point_at_the_problem() {
        let e = parse("L(2) * X(1)").unwrap_err();
        assert_eq!(e.at, 7);
        assert!(parse("L(2").is_err());
        assert!(parse("1/0").is_err());
        assert!(parse("L(1) L(2)").is_err());
    }
}
