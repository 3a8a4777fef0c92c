//! Parser for the canonical closed-form text produced by `Display`.
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := int ['/' int] | '2^' exp | atom ['^' exp]
//! exp    := int | '(' ['-'] int ['/' int] ')'
//! atom   := pi | log2 | catalan | euler_gamma | zeta(m) | gamma(3/4)
//!         | exp(q*pi) | exp(q*pi*sqrt2)
//! ```

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use super::closed_form::two_power;
use super::{int, Atom, ClosedForm, Monomial, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse closed form at byte {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

struct Cursor<'a> {
    s: &'a [u8],
    i: usize,
}

impl<'a> Cursor<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { pos: self.i, msg: msg.into() })
    }

    fn ws(&mut self) {
        while self.i < self.s.len() && self.s[self.i].is_ascii_whitespace() {
            self.i += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.s.get(self.i).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.i += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{}'", c as char))
        }
    }

    fn keyword(&mut self, kw: &str) -> bool {
        self.ws();
        if self.s[self.i..].starts_with(kw.as_bytes()) {
            self.i += kw.len();
            true
        } else {
            false
        }
    }

    fn uint(&mut self) -> Result<BigInt, ParseError> {
        self.ws();
        let start = self.i;
        while self.i < self.s.len() && self.s[self.i].is_ascii_digit() {
            self.i += 1;
        }
        if start == self.i {
            return self.err("expected digits");
        }
        Ok(std::str::from_utf8(&self.s[start..self.i]).unwrap().parse().unwrap())
    }

    fn signed_rational(&mut self) -> Result<Rational, ParseError> {
        let neg = self.eat(b'-');
        let n = self.uint()?;
        let d = if self.eat(b'/') { self.uint()? } else { BigInt::from(1) };
        if d.is_zero() {
            return self.err("zero denominator");
        }
        let r = Rational::new(n, d);
        Ok(if neg { -r } else { r })
    }

    fn exponent(&mut self) -> Result<Rational, ParseError> {
        if self.eat(b'(') {
            let r = self.signed_rational()?;
            self.expect(b')')?;
            Ok(r)
        } else {
            Ok(Rational::from_integer(self.uint()?))
        }
    }

    fn atom(&mut self) -> Result<Atom, ParseError> {
        if self.keyword("pi") {
            Ok(Atom::Pi)
        } else if self.keyword("log2") {
            Ok(Atom::LogTwo)
        } else if self.keyword("catalan") {
            Ok(Atom::Catalan)
        } else if self.keyword("euler_gamma") {
            Ok(Atom::EulerGamma)
        } else if self.keyword("zeta(") {
            let m = self.uint()?;
            self.expect(b')')?;
            let m: u32 = m.try_into().map_err(|_| ParseError { pos: self.i, msg: "zeta index too large".into() })?;
            if m < 3 || m.is_multiple_of(2) {
                return self.err("zeta atom needs an odd index >= 3");
            }
            Ok(Atom::ZetaOdd(m))
        } else if self.keyword("gamma(3/4)") {
            Ok(Atom::GammaThreeQuarters)
        } else if self.keyword("exp(") {
            let q = self.signed_rational()?;
            self.expect(b'*')?;
            if !self.keyword("pi") {
                return self.err("expected pi inside exp(...)");
            }
            let atom = if self.eat(b'*') {
                if !self.keyword("sqrt2") {
                    return self.err("expected sqrt2");
                }
                Atom::ExpPiSqrt2(q)
            } else {
                Atom::ExpPi(q)
            };
            self.expect(b')')?;
            Ok(atom)
        } else {
            self.err("unknown atom")
        }
    }

    fn term(&mut self) -> Result<(Rational, Vec<(Atom, Rational)>), ParseError> {
        let mut coef = int(1);
        let mut factors = Vec::new();
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let n = self.uint()?;
                    if self.eat(b'^') {
                        if n != BigInt::from(2) {
                            return self.err("only 2 may carry an exponent");
                        }
                        let (k, m) = two_power(self.exponent()?);
                        coef *= k;
                        factors.extend(m.factors().map(|(a, e)| (a.clone(), e.clone())));
                    } else {
                        let d = if self.eat(b'/') { self.uint()? } else { BigInt::from(1) };
                        if d.is_zero() {
                            return self.err("zero denominator");
                        }
                        coef *= Rational::new(n, d);
                    }
                }
                Some(_) => {
                    let a = self.atom()?;
                    let e = if self.eat(b'^') { self.exponent()? } else { int(1) };
                    factors.push((a, e));
                }
                None => return self.err("unexpected end of input"),
            }
            if !self.eat(b'*') {
                return Ok((coef, factors));
            }
        }
    }
}

impl FromStr for ClosedForm {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let mut c = Cursor { s: s.as_bytes(), i: 0 };
        if c.peek().is_none() {
            return c.err("empty input");
        }
        let mut out = ClosedForm::zero();
        let mut sign = if c.eat(b'-') { -1 } else { 1 };
        loop {
            let (coef, factors) = c.term()?;
            let (k, m): (Rational, Monomial) = Monomial::canonical(factors);
            out += ClosedForm::term(coef * k * int(sign), m.factors().map(|(a, e)| (a.clone(), e.clone())));
            if c.eat(b'+') {
                sign = 1;
            } else if c.eat(b'-') {
                sign = -1;
            } else if c.peek().is_none() {
                return Ok(out);
            } else {
                return c.err("expected '+', '-' or end of input");
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn roundtrip(s: &str) {
        let cf: ClosedForm = s.parse().unwrap();
        let again: ClosedForm = cf.to_string().parse().unwrap();
        assert_eq!(cf, again, "{s}");
    }

    #[test]
    fn spec_examples() {
        let a: ClosedForm = "7/180 * pi^4".parse().unwrap();
        assert_eq!(a, ClosedForm::pi_pow(4).scale(&rat(7, 180)));
        let b: ClosedForm = "1/4*log2 + 1/6*pi".parse().unwrap();
        assert_eq!(b.to_string(), "1/6*pi + 1/4*log2");
        assert_eq!("0".parse::<ClosedForm>().unwrap(), ClosedForm::zero());
    }

    #[test]
    fn atoms_roundtrip() {
        for s in [
            "2^(1/4)*exp(-1/24*pi)",
            "pi^(1/4)*exp(1/12*pi)*gamma(3/4)^(-1)*2^(-1/2)",
            "-3*zeta(3) + 2*catalan*pi^2 - euler_gamma",
            "exp(1/24*pi*sqrt2)*2^(-1/8)",
            "pi^(-1) - 1/2",
        ] {
            roundtrip(s);
        }
    }

    #[test]
    fn rejects_garbage() {
        for s in ["", "pi +", "3^(1/2)", "zeta(4)", "foo", "1/0", "exp(1/2*e)"] {
            assert!(s.parse::<ClosedForm>().is_err(), "{s:?}");
        }
    }
}
