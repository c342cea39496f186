//! Text format for equations.
//!
//! Terms of the form `[c][*]X^i[*]Y^j[*]Z^k` joined by `+` or `-`, where `c`
//! is an integer or a `p/q` rational. Exponent `1` and the coefficient `1`
//! may be omitted, `*` between factors is optional, and whitespace is
//! ignored everywhere. Examples: `Z^5 + X^2*Y*Z^3 + X^3*Y^3`,
//! `Z^2 - 3/2*X*Y^3 + X^2`.

use num_bigint::BigInt;
use thiserror::Error;

use super::poly::TriPoly;
use super::rat::Rat;

/// Parse failure with the byte offset of the offending character.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

/// Parses the equation grammar into a polynomial.
pub fn parse_poly(input: &str) -> Result<TriPoly, ParseError> {
    Parser {
        bytes: input.as_bytes(),
        pos: 0,
    }
    .parse()
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn parse(&mut self) -> Result<TriPoly, ParseError> {
        let mut poly = TriPoly::zero();
        self.skip_ws();
        if self.pos == self.bytes.len() {
            return Err(self.error("empty input"));
        }
        let mut negative = self.take_sign();
        loop {
            let term = self.parse_term(negative)?;
            poly = poly + term;
            self.skip_ws();
            match self.peek() {
                None => return Ok(poly),
                Some(b'+') => {
                    self.pos += 1;
                    negative = false;
                }
                Some(b'-') => {
                    self.pos += 1;
                    negative = true;
                }
                Some(_) => return Err(self.error("expected '+' or '-' between terms")),
            }
        }
    }

    fn parse_term(&mut self, negative: bool) -> Result<TriPoly, ParseError> {
        let mut coeff = if negative {
            -Rat::from_integer(BigInt::from(1))
        } else {
            Rat::from_integer(BigInt::from(1))
        };
        let mut exp = [0u32; 3];
        let mut saw_factor = false;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let q = self.parse_rational()?;
                    coeff *= q;
                    saw_factor = true;
                }
                Some(b'X') | Some(b'x') => {
                    self.pos += 1;
                    exp[0] += self.parse_exponent()?;
                    saw_factor = true;
                }
                Some(b'Y') | Some(b'y') => {
                    self.pos += 1;
                    exp[1] += self.parse_exponent()?;
                    saw_factor = true;
                }
                Some(b'Z') | Some(b'z') => {
                    self.pos += 1;
                    exp[2] += self.parse_exponent()?;
                    saw_factor = true;
                }
                _ => break,
            }
            // An optional '*' may separate factors.
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
                self.skip_ws();
                if !matches!(
                    self.peek(),
                    Some(c) if c.is_ascii_digit()
                        || matches!(c, b'X' | b'x' | b'Y' | b'y' | b'Z' | b'z')
                ) {
                    return Err(self.error("expected a factor after '*'"));
                }
            }
        }
        if !saw_factor {
            return Err(self.error("expected a term"));
        }
        Ok(TriPoly::monomial(coeff, exp[0], exp[1], exp[2]))
    }

    fn parse_exponent(&mut self) -> Result<u32, ParseError> {
        self.skip_ws();
        if self.peek() != Some(b'^') {
            return Ok(1);
        }
        self.pos += 1;
        self.skip_ws();
        let n = self.parse_integer()?;
        u32::try_from(&n).map_err(|_| self.error("exponent does not fit in u32"))
    }

    fn parse_rational(&mut self) -> Result<Rat, ParseError> {
        let numer = self.parse_integer()?;
        self.skip_ws();
        if self.peek() == Some(b'/') {
            self.pos += 1;
            self.skip_ws();
            let denom_at = self.pos;
            let denom = self.parse_integer()?;
            if denom == BigInt::from(0) {
                return Err(ParseError {
                    offset: denom_at,
                    message: "zero denominator".into(),
                });
            }
            Ok(Rat::new(numer, denom))
        } else {
            Ok(Rat::from_integer(numer))
        }
    }

    fn parse_integer(&mut self) -> Result<BigInt, ParseError> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        text.parse::<BigInt>().map_err(|e| ParseError {
            offset: start,
            message: e.to_string(),
        })
    }

    fn take_sign(&mut self) -> bool {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        }
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn error(&self, message: &str) -> ParseError {
        ParseError {
            offset: self.pos,
            message: message.to_string(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, ratio};

    #[test]
    fn parses_standard_forms() {
        let p = parse_poly("Z^5 + X^2*Y*Z^3 + X^3*Y^3").unwrap();
        assert_eq!(p.coeff(0, 0, 5), rat(1));
        assert_eq!(p.coeff(2, 1, 3), rat(1));
        assert_eq!(p.coeff(3, 3, 0), rat(1));
        assert_eq!(p.num_terms(), 3);
    }

    #[test]
    fn accepts_omitted_stars_and_whitespace() {
        assert_eq!(
            parse_poly("  z^2 - 3xY^2 ").unwrap(),
            parse_poly("Z^2 - 3*X*Y^2").unwrap()
        );
        assert_eq!(parse_poly("2X2").unwrap(), parse_poly("4*X").unwrap());
    }

    #[test]
    fn accepts_rational_coefficients_and_merges_duplicates() {
        let p = parse_poly("1/2*X + 1/3*X - Y").unwrap();
        assert_eq!(p.coeff(1, 0, 0), ratio(5, 6));
        assert_eq!(p.coeff(0, 1, 0), rat(-1));
        assert!(parse_poly("X - X").unwrap().is_zero());
    }

    #[test]
    fn reports_byte_offsets() {
        assert_eq!(parse_poly("Z^2 + ").unwrap_err().offset, 6);
        assert_eq!(parse_poly("Z^2 ? X").unwrap_err().offset, 4);
        assert_eq!(parse_poly("").unwrap_err().offset, 0);
        assert_eq!(parse_poly("X^").unwrap_err().offset, 2);
        assert_eq!(parse_poly("1/0*X").unwrap_err().offset, 2);
    }

    #[test]
    fn display_round_trips_through_the_parser() {
        for text in [
            "Z^3 + X^2*Z + Y^3 - X^4",
            "Z^5 + X^2*Y*Z^3 + X^3*Y^3",
            "-1/2*X*Y + 3*Z^7 - 4",
            "0",
        ] {
            let p = parse_poly(text).unwrap();
            assert_eq!(parse_poly(&p.to_string()).unwrap(), p);
        }
    }
}
