//! Text form of polynomials.
//!
//! Grammar accepted by [`parse_poly`] (whitespace between tokens is ignored):
//!
//! ```text
//! poly  := sign? term (('+' | '-') term)*
//! term  := uint | uint? 'x' ('^' uint)?
//! ```
//!
//! The canonical output lists powers in descending order with explicit signs
//! and omits unit coefficients and the exponent 1, e.g. `4x^6-3x^2`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Coeff, IntPoly, Poly};
use crate::error::{Error, Result};

/// Exponents above this are rejected instead of allocating a huge dense vector.
const MAX_EXPONENT: usize = 1 << 20;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
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

    fn uint(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    /// One term without its sign: `(coefficient, exponent)`.
    fn term(&mut self) -> Result<(BigInt, usize)> {
        let coeff = self
            .uint()
            .map(|digits| digits.parse::<BigInt>().expect("ascii digits"));
        if self.peek() != Some(b'x') {
            return match coeff {
                Some(c) => Ok((c, 0)),
                None => self.err("expected integer or 'x'"),
            };
        }
        self.pos += 1;
        let coeff = coeff.unwrap_or_else(BigInt::one);
        if self.peek() != Some(b'^') {
            return Ok((coeff, 1));
        }
        self.pos += 1;
        let exp_pos = self.pos;
        let Some(digits) = self.uint() else {
            return self.err("expected exponent after '^'");
        };
        match digits.parse::<usize>() {
            Ok(e) if e <= MAX_EXPONENT => Ok((coeff, e)),
            _ => Err(Error::Parse {
                pos: exp_pos,
                msg: format!("exponent {digits} too large"),
            }),
        }
    }
}

/// Parses an integer polynomial in `x`. Repeated powers are summed, so the
/// result is always canonical.
pub fn parse_poly(text: &str) -> Result<IntPoly> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let mut coeffs: Vec<BigInt> = Vec::new();
    let mut negative = match p.peek() {
        Some(b'-') => {
            p.pos += 1;
            true
        }
        Some(b'+') => {
            p.pos += 1;
            false
        }
        None => return p.err("empty polynomial"),
        _ => false,
    };
    loop {
        let (c, e) = p.term()?;
        if coeffs.len() <= e {
            coeffs.resize(e + 1, BigInt::zero());
        }
        if negative {
            coeffs[e] -= c;
        } else {
            coeffs[e] += c;
        }
        match p.peek() {
            None => break,
            Some(b'+') => negative = false,
            Some(b'-') => negative = true,
            Some(ch) => return p.err(format!("unexpected character '{}'", ch as char)),
        }
        p.pos += 1;
    }
    Ok(Poly::new(coeffs))
}

impl<T: Coeff> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs().iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if c.is_negative() {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            let mag = c.abs();
            if k == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                let s = mag.to_string();
                if s.contains('/') {
                    write!(f, "({s})")?;
                } else {
                    f.write_str(&s)?;
                }
            }
            f.write_str("x")?;
            if k > 1 {
                write!(f, "^{k}")?;
            }
        }
        Ok(())
    }
}

impl<T: Coeff> fmt::Debug for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}
