//! Text form of polynomials.
//!
//! Grammar (whitespace is ignored everywhere):
//!
//! ```text
//! poly   := ["+"|"-"] term (("+"|"-") term)*
//! term   := coeff ["*"] factor ("*" factor)* | coeff | factor ("*" factor)*
//! coeff  := digits ["/" digits]
//! factor := ident ["^" digits]
//! ident  := [A-Za-z][A-Za-z0-9_]*
//! ```

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poly::{PolyRing, Polynomial};

struct Cursor<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    ring: &'a PolyRing,
}

impl Cursor<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn column(&self) -> usize {
        self.chars.get(self.pos).map_or_else(
            || self.chars.last().map_or(1, |&(i, _)| i + 2),
            |&(i, _)| i + 1,
        )
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            column: self.column(),
            message: message.into(),
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().map(|&(_, c)| c).collect())
    }

    fn ident(&mut self) -> Option<String> {
        if !matches!(self.peek(), Some(c) if c.is_ascii_alphabetic()) {
            return None;
        }
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == '_') {
            self.pos += 1;
        }
        Some(self.chars[start..self.pos].iter().map(|&(_, c)| c).collect())
    }

    fn factor(&mut self, exps: &mut [u32]) -> Result<()> {
        let column = self.column();
        let name = self.ident().ok_or_else(|| self.error("expected a variable"))?;
        let index = self
            .ring
            .var_index(&name)
            .ok_or_else(|| Error::UnknownVariable(name.clone()))?;
        let e = if self.eat('^') {
            let d = self.digits().ok_or_else(|| self.error("malformed exponent"))?;
            d.parse::<u32>().map_err(|_| Error::Parse {
                column,
                message: format!("exponent `{d}` out of range"),
            })?
        } else {
            1
        };
        exps[index] = exps[index]
            .checked_add(e)
            .ok_or_else(|| self.error("exponent overflow"))?;
        Ok(())
    }

    fn term(&mut self) -> Result<(BigInt, BigInt, Monomial)> {
        let mut exps = vec![0u32; self.ring.nvars()];
        let (num, den) = match self.digits() {
            Some(n) => {
                let num: BigInt = n.parse().expect("digit string");
                let den = if self.eat('/') {
                    let d = self.digits().ok_or_else(|| self.error("expected a denominator"))?;
                    d.parse().expect("digit string")
                } else {
                    BigInt::one()
                };
                let explicit_star = self.eat('*');
                if explicit_star || matches!(self.peek(), Some(c) if c.is_ascii_alphabetic()) {
                    self.factor(&mut exps)?;
                    while self.eat('*') {
                        self.factor(&mut exps)?;
                    }
                }
                (num, den)
            }
            None => {
                self.factor(&mut exps)?;
                while self.eat('*') {
                    self.factor(&mut exps)?;
                }
                (BigInt::one(), BigInt::one())
            }
        };
        Ok((num, den, Monomial::new(exps)))
    }
}

impl PolyRing {
    /// Parse a polynomial written in the ring's variables.
    pub fn parse(&self, text: &str) -> Result<Polynomial> {
        let chars: Vec<(usize, char)> = text.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
        let mut cur = Cursor {
            chars,
            pos: 0,
            ring: self,
        };
        if cur.peek().is_none() {
            return Err(cur.error("empty polynomial"));
        }
        let dom = self.domain();
        let mut terms = Vec::new();
        let mut first = true;
        loop {
            let negative = if cur.eat('-') {
                true
            } else if cur.eat('+') || first {
                false
            } else {
                return Err(cur.error(format!("unexpected `{}`", cur.peek().unwrap())));
            };
            first = false;
            let (num, den, mon) = cur.term()?;
            let mut c = dom.from_fraction(&num, &den)?;
            if negative {
                c = dom.neg(&c);
            }
            terms.push((c, mon));
            if cur.peek().is_none() {
                break;
            }
        }
        self.from_terms(terms)
    }
}

/// Canonical text: terms in descending order, `*` between factors, ` + ` /
/// ` - ` between terms. Parsing the output yields the same polynomial.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let dom = self.ring().domain();
        let names = self.ring().vars();
        for (k, t) in self.terms().iter().enumerate() {
            let (negative, num, den) = dom.signed_parts(&t.coeff);
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let unit = num.is_one() && den.is_one();
            if !unit || t.mon.is_one() {
                write!(f, "{num}")?;
                if !den.is_one() {
                    write!(f, "/{den}")?;
                }
                if !t.mon.is_one() {
                    write!(f, "*")?;
                }
            }
            if !t.mon.is_one() {
                write!(f, "{}", t.mon.display(names))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Domain;
    use crate::order::MonomialOrder;

    fn ring() -> PolyRing {
        PolyRing::new(&["x", "y", "z"], Domain::Rationals, MonomialOrder::degrevlex()).unwrap()
    }

    #[test]
    fn parses_running_example() {
        let f = ring().parse("x^2+y^2+z^2").unwrap();
        assert_eq!(f.len(), 3);
        assert_eq!(f.to_string(), "x^2 + y^2 + z^2");
    }

    #[test]
    fn zero_and_constants() {
        let r = ring();
        assert!(r.parse("0").unwrap().is_zero());
        assert!(r.parse(" x - x ").unwrap().is_zero());
        assert_eq!(r.parse("-3/6").unwrap().to_string(), "-1/2");
    }

    #[test]
    fn coefficients_and_whitespace() {
        let r = ring();
        let f = r.parse("7 - 1/3 * z + 2x*y ^ 2").unwrap();
        assert_eq!(f.to_string(), "2*x*y^2 - 1/3*z + 7");
        assert_eq!(r.parse("x*x*y").unwrap(), r.parse("x^2*y").unwrap());
        // whitespace is ignored, so `x y` is the single identifier `xy`
        assert!(matches!(r.parse("x y"), Err(Error::UnknownVariable(v)) if v == "xy"));
    }

    #[test]
    fn errors() {
        let r = ring();
        assert!(matches!(r.parse("x4 + y3 + z2"), Err(Error::UnknownVariable(v)) if v == "x4"));
        assert!(matches!(r.parse("x^"), Err(Error::Parse { .. })));
        assert!(matches!(r.parse("x^-1"), Err(Error::Parse { .. })));
        assert!(matches!(r.parse("x^99999999999"), Err(Error::Parse { .. })));
        assert!(matches!(r.parse(""), Err(Error::Parse { .. })));
        assert!(matches!(r.parse("x +"), Err(Error::Parse { .. })));
        assert!(matches!(r.parse("1/0*x"), Err(Error::DivisionByZero)));
        let k = PolyRing::new(&["x"], Domain::Prime(7), MonomialOrder::lex()).unwrap();
        assert!(matches!(k.parse("x/7"), Err(Error::Parse { .. })));
        assert!(matches!(k.parse("1/7*x"), Err(Error::DivisionByZero)));
    }

    #[test]
    fn prime_field_formatting() {
        let k = PolyRing::new(&["x", "y"], Domain::Prime(32003), MonomialOrder::lex()).unwrap();
        let f = k.parse("x - 2*y + 1/2").unwrap();
        assert_eq!(f.to_string(), "x - 2*y - 16001");
        assert_eq!(k.parse(&f.to_string()).unwrap(), f);
    }
}
