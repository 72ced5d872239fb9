//! Recursive-descent parser for the polynomial text grammar:
//!
//! ```text
//! expr   := ['+'|'-'] term { ('+'|'-') term }
//! term   := power { ['*'] power }
//! power  := atom [ '^' exponent ]
//! atom   := integer | variable | '(' expr ')'
//! exponent := integer | '(' ['-'] integer ')'
//! ```
//!
//! Variables are `x`, `y`, `z`, `w`; whitespace is insignificant.

use num_bigint::BigInt;

use super::{Monomial, Poly, Ring, VARIABLES};
use crate::error::{Error, Result};
use crate::field::Field;

pub fn parse_poly<F: Field>(text: &str, ring: &Ring<F>) -> Result<Poly<F>> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        ring,
    };
    let value = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.syntax(format!("unexpected '{}'", p.src[p.pos] as char)));
    }
    Ok(value)
}

struct Parser<'a, F: Field> {
    src: &'a [u8],
    pos: usize,
    ring: &'a Ring<F>,
}

impl<F: Field> Parser<'_, F> {
    fn syntax(&self, msg: impl Into<String>) -> Error {
        Error::Syntax {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Poly<F>> {
        let mut negate_first = false;
        match self.peek() {
            Some(b'+') => self.pos += 1,
            Some(b'-') => {
                self.pos += 1;
                negate_first = true;
            }
            _ => {}
        }
        let mut acc = self.term()?;
        if negate_first {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.add(&t)?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.sub(&t)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly<F>> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let f = self.power()?;
                    acc = acc.mul(&f)?;
                }
                Some(c) if c.is_ascii_alphanumeric() || c == b'(' || c == b'_' => {
                    let f = self.power()?;
                    acc = acc.mul(&f)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<Poly<F>> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.exponent()?;
            return base.pow(e);
        }
        Ok(base)
    }

    fn exponent(&mut self) -> Result<u32> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let start = self.pos;
                if self.peek() == Some(b'-') {
                    return Err(Error::NegativeExponent { pos: start });
                }
                let e = self.small_integer()?;
                if self.peek() != Some(b')') {
                    return Err(self.syntax("expected ')' after exponent"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(b'-') => Err(Error::NegativeExponent { pos: self.pos }),
            Some(c) if c.is_ascii_digit() => self.small_integer(),
            _ => Err(self.syntax("expected exponent")),
        }
    }

    fn digits(&mut self) -> Result<&str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.syntax("expected integer"));
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits"))
    }

    fn small_integer(&mut self) -> Result<u32> {
        let start = self.pos;
        let d = self.digits()?;
        d.parse::<u32>().map_err(|_| Error::Syntax {
            pos: start,
            msg: "exponent too large".into(),
        })
    }

    fn atom(&mut self) -> Result<Poly<F>> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.syntax("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits()?;
                let n: BigInt = d.parse().expect("digit string parses");
                Ok(self.ring.constant(self.ring.field.from_bigint(&n)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                match VARIABLES.iter().position(|v| *v == name) {
                    Some(i) => Ok(self.ring.term(self.ring.field.one(), Monomial::var(i))),
                    None => Err(Error::UnknownVariable {
                        name: name.to_string(),
                        pos: start,
                    }),
                }
            }
            Some(c) => Err(self.syntax(format!("unexpected '{}'", c as char))),
            None => Err(self.syntax("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, QQ};
    use crate::poly::Homogeneity;

    #[test]
    fn parse_examples() {
        let r = Ring::new(QQ);
        let f = parse_poly("x*z + y^2", &r).unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(f.homogeneity(), Homogeneity::Degree(2));
        assert!(parse_poly("y*w - w^2 - (y*w - w^2)", &r).unwrap().is_zero());
        let g = parse_poly("w^5", &r).unwrap();
        assert_eq!(g.len(), 1);
        assert_eq!(g.homogeneous_degree(), Some(5));
    }

    #[test]
    fn listing_syntax() {
        let r = Ring::new(Fp::new(32003).unwrap());
        let a = parse_poly("w^(5) + x*z^(4)", &r).unwrap();
        let b = parse_poly("w^5+x z^4", &r).unwrap();
        assert_eq!(a, b);
        assert_eq!(parse_poly("2x^2y", &r).unwrap(), parse_poly("2*x^2*y", &r).unwrap());
        assert_eq!(parse_poly("-(x+y)^2", &r).unwrap().len(), 3);
    }

    #[test]
    fn parse_errors() {
        let r = Ring::new(QQ);
        assert!(matches!(
            parse_poly("x + v", &r),
            Err(Error::UnknownVariable { ref name, pos: 4 }) if name == "v"
        ));
        assert!(matches!(parse_poly("x^-2", &r), Err(Error::NegativeExponent { .. })));
        assert!(matches!(parse_poly("x^(-2)", &r), Err(Error::NegativeExponent { .. })));
        assert!(matches!(parse_poly("x + * y", &r), Err(Error::Syntax { pos: 4, .. })));
        assert!(matches!(parse_poly("(x + y", &r), Err(Error::Syntax { .. })));
        assert!(matches!(parse_poly("", &r), Err(Error::Syntax { pos: 0, .. })));
    }

    #[test]
    fn print_parse_is_a_fixed_point() {
        let r = Ring::new(Fp::new(32003).unwrap());
        for s in ["-y*w+w^2", "x^3*w^5 - 2*y + 7", "0", "z^(4)*(x-y)"] {
            let p = parse_poly(s, &r).unwrap();
            let printed = p.to_string();
            assert_eq!(parse_poly(&printed, &r).unwrap(), p);
            assert_eq!(parse_poly(&printed, &r).unwrap().to_string(), printed);
        }
    }
}
