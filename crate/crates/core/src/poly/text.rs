//! Text form of polynomials, e.g. `3*x[1,2]*x[2,1]^2 - 1/2*x[3,3]`.
//!
//! Terms are printed leading term first. The printer is generic; the
//! parser produces rational coefficients.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Monomial, Polynomial, VarId};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x[{},{}]", self.row, self.col)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (i, (v, e)) in self.vars().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            write!(f, "{v}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl<C: Scalar> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

struct Lexer<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        if self.eat(b) {
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", b as char)))
        }
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at byte {}", self.pos))
    }

    fn digits(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        Ok(std::str::from_utf8(&self.s[start..self.pos]).expect("ascii digits"))
    }

    fn small(&mut self) -> Result<usize> {
        self.digits()?.parse().map_err(|_| self.err("integer too large"))
    }

    fn coeff(&mut self) -> Result<BigRational> {
        let num = BigInt::from_str(self.digits()?).expect("digits");
        if self.eat(b'/') {
            let den = BigInt::from_str(self.digits()?).expect("digits");
            if den.is_zero() {
                return Err(self.err("zero denominator"));
            }
            Ok(BigRational::new(num, den))
        } else {
            Ok(BigRational::from_integer(num))
        }
    }

    fn factor(&mut self, n: usize) -> Result<Monomial> {
        self.expect(b'x')?;
        self.expect(b'[')?;
        let i = self.small()?;
        self.expect(b',')?;
        let j = self.small()?;
        self.expect(b']')?;
        let v = VarId::new(i, j);
        if !v.in_context(n) {
            return Err(Error::VarOutOfRange(v, n));
        }
        let e = if self.eat(b'^') { self.small()? as u32 } else { 1 };
        Ok(Monomial::var(v).pow(e))
    }

    fn factors(&mut self, n: usize) -> Result<Monomial> {
        let mut m = self.factor(n)?;
        while self.eat(b'*') {
            m = m.mul(&self.factor(n)?);
        }
        Ok(m)
    }

    fn term(&mut self, n: usize) -> Result<(Monomial, BigRational)> {
        match self.peek() {
            Some(b'x') => Ok((self.factors(n)?, BigRational::one())),
            Some(b) if b.is_ascii_digit() => {
                let c = self.coeff()?;
                let m = if self.eat(b'*') { self.factors(n)? } else { Monomial::one() };
                Ok((m, c))
            }
            _ => Err(self.err("expected a term")),
        }
    }
}

impl Polynomial<BigRational> {
    /// Parses the text form in the context of `n x n` variables.
    pub fn parse_in(s: &str, n: usize) -> Result<Self> {
        let mut lx = Lexer { s: s.as_bytes(), pos: 0 };
        let mut terms = Vec::new();
        let mut neg = if lx.eat(b'-') {
            true
        } else {
            lx.eat(b'+');
            false
        };
        loop {
            let (m, c) = lx.term(n)?;
            terms.push((m, if neg { -c } else { c }));
            match lx.peek() {
                None => break,
                Some(b'+') => {
                    lx.pos += 1;
                    neg = false;
                }
                Some(b'-') => {
                    lx.pos += 1;
                    neg = true;
                }
                Some(_) => return Err(lx.err("unexpected character")),
            }
        }
        Ok(Polynomial::from_terms(n, terms))
    }
}

#[cfg(test)]
mod tests {
    use crate::Poly;

    #[test]
    fn grammar_example() {
        let p = Poly::parse_in("3*x[1,2]*x[2,1]^2 - 1/2*x[3,3]", 3).unwrap();
        assert_eq!(p.to_string(), "3*x[1,2]*x[2,1]^2 - 1/2*x[3,3]");
        assert_eq!(p.num_terms(), 2);
    }

    #[test]
    fn printing_conventions() {
        let d = Poly::x(2, 1, 1) * Poly::x(2, 2, 2) - Poly::x(2, 1, 2) * Poly::x(2, 2, 1);
        assert_eq!(d.to_string(), "x[1,1]*x[2,2] - x[1,2]*x[2,1]");
        assert_eq!((-Poly::x(2, 1, 2)).to_string(), "-x[1,2]");
        assert_eq!(Poly::zero(2).to_string(), "0");
        assert_eq!(Poly::from_int(2, -7).to_string(), "-7");
        assert_eq!((Poly::x(2, 1, 1) + Poly::one(2)).to_string(), "x[1,1] + 1");
    }

    #[test]
    fn parse_errors() {
        assert!(Poly::parse_in("x[3,1]", 2).is_err());
        assert!(Poly::parse_in("x[1,1] +", 2).is_err());
        assert!(Poly::parse_in("1/0", 2).is_err());
        assert!(Poly::parse_in("y", 2).is_err());
        assert_eq!(Poly::parse_in("-x[1,1] + x[1,1]", 2).unwrap(), Poly::zero(2));
        assert_eq!(Poly::parse_in(" 0 ", 2).unwrap(), Poly::zero(2));
    }
}
