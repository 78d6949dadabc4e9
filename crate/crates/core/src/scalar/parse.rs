//! Parser for the canonical text form of field elements.
//!
//! Accepts sums, products, quotients, parentheses and integer powers of the
//! generators `v`, `U<i>`, `l<i>` and integer literals.

use num::BigInt;

use super::field::FieldElement;
use super::poly::Var;
use super::{Field, Ring};
use crate::error::{Error, Result};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<FieldElement> {
        let mut acc = if self.eat(b'-') {
            self.term()?.neg()
        } else {
            self.term()?
        };
        loop {
            if self.eat(b'+') {
                acc = acc.add(&self.term()?);
            } else if self.eat(b'-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<FieldElement> {
        let mut acc = self.power()?;
        loop {
            if self.eat(b'*') {
                acc = acc.mul(&self.power()?);
            } else if self.eat(b'/') {
                let at = self.pos;
                let d = self.power()?;
                if d.is_zero() {
                    return Err(Error::parse(at, "division by zero"));
                }
                acc = acc.div(&d);
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<FieldElement> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let neg = self.eat(b'-');
        let at = self.pos;
        let digits = self.digits();
        let e: i64 = digits
            .parse()
            .map_err(|_| Error::parse(at, "expected an integer exponent"))?;
        if neg && base.is_zero() {
            return Err(Error::parse(at, "negative power of zero"));
        }
        Ok(base.pow(if neg { -e } else { e }))
    }

    fn digits(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn atom(&mut self) -> Result<FieldElement> {
        let next = self.peek();
        let at = self.pos;
        match next {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return Err(Error::parse(self.pos, "expected ')'"));
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits();
                Ok(FieldElement::from_int(d.parse::<BigInt>().unwrap()))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.src.get(self.pos).is_some_and(u8::is_ascii_alphanumeric) {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                Var::parse(name)
                    .map(FieldElement::var)
                    .ok_or_else(|| Error::parse(start, format!("unknown generator '{name}'")))
            }
            Some(c) => Err(Error::parse(at, format!("unexpected character '{}'", c as char))),
            None => Err(Error::parse(at, "unexpected end of input")),
        }
    }
}

/// Parses a field element; the inverse of its `Display` form.
pub fn parse_field_element(text: &str) -> Result<FieldElement> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(Error::parse(p.pos, "trailing input"));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_prints() {
        let x = parse_field_element("(U1*v - U1^-1*v^-1)/(v - v^-1)").unwrap();
        let y = parse_field_element(&x.to_string()).unwrap();
        assert_eq!(x, y);
        assert_eq!(parse_field_element("2*l1 - l1 - l1").unwrap(), FieldElement::zero());
    }

    #[test]
    fn reports_position() {
        match parse_field_element("v + w") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 4),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_field_element("1/(v-v)").is_err());
        assert!(parse_field_element("(v").is_err());
    }
}
