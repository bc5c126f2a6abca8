//! Parser for the cyclotomic string grammar.
//!
//! A value is a signed sum of terms; each term is a rational `a` or `a/b`, a
//! root `E(n)` or `E(n)^k`, or a product `c*E(n)^k`.  The literal `0` (or any
//! cancelling sum) denotes zero.  Whitespace is not part of the grammar.
//! Inputs need not be canonical — exponents outside the Zumbroich basis, a
//! non-minimal n, or repeated terms all reduce to the same value.

use num::BigInt;

use super::{Cyclotomic, Rational};
use crate::error::{Error, Result};

fn err(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line: 1, msg: format!("col {}: {}", pos + 1, msg.into()) }
}

struct Scanner<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
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
            Err(err(self.pos, format!("expected '{}'", b as char)))
        }
    }

    fn unsigned_integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(err(start, "expected a digit"));
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        text.parse::<BigInt>()
            .map_err(|e| err(start, format!("bad integer: {e}")))
    }

    fn unsigned_u64(&mut self) -> Result<u64> {
        let start = self.pos;
        let v = self.unsigned_integer()?;
        u64::try_from(v).map_err(|_| err(start, "integer out of range"))
    }

    /// rational := uint [ '/' uint ]
    fn rational(&mut self) -> Result<Rational> {
        let numer = self.unsigned_integer()?;
        if self.eat(b'/') {
            let start = self.pos;
            let denom = self.unsigned_integer()?;
            if denom == BigInt::from(0) {
                return Err(err(start, "zero denominator"));
            }
            Ok(Rational::new(numer, denom))
        } else {
            Ok(Rational::from_integer(numer))
        }
    }

    /// root := 'E' '(' uint ')' [ '^' [ '-' ] uint ]
    fn root(&mut self) -> Result<(u64, i64)> {
        self.expect(b'E')?;
        self.expect(b'(')?;
        let start = self.pos;
        let n = self.unsigned_u64()?;
        if n == 0 {
            return Err(err(start, "root order must be positive"));
        }
        self.expect(b')')?;
        let mut k: i64 = 1;
        if self.eat(b'^') {
            let neg = self.eat(b'-');
            let start = self.pos;
            let mag = self.unsigned_u64()?;
            let mag = i64::try_from(mag).map_err(|_| err(start, "exponent out of range"))?;
            k = if neg { -mag } else { mag };
        }
        Ok((n, k))
    }

    /// term := rational [ '*' root ] | root
    fn term(&mut self) -> Result<Cyclotomic> {
        if self.peek() == Some(b'E') {
            let (n, k) = self.root()?;
            return Cyclotomic::root_of_unity(n, k);
        }
        let c = self.rational()?;
        if self.eat(b'*') {
            let (n, k) = self.root()?;
            Ok(Cyclotomic::root_of_unity(n, k)?.scale(&c))
        } else {
            Ok(Cyclotomic::from_rational(c))
        }
    }
}

/// Parses the string grammar; accepts exactly the canonical [`Display`] output
/// (and non-canonical equivalents) with no surrounding whitespace.
pub fn parse_cyclotomic(input: &str) -> Result<Cyclotomic> {
    let mut sc = Scanner { bytes: input.as_bytes(), pos: 0 };
    let mut acc = Cyclotomic::zero();
    let mut negative = sc.eat(b'-');
    loop {
        let term = sc.term()?;
        acc = if negative { acc.sub(&term) } else { acc.add(&term) };
        match sc.peek() {
            Some(b'+') => {
                sc.pos += 1;
                negative = false;
            }
            Some(b'-') => {
                sc.pos += 1;
                negative = true;
            }
            None => return Ok(acc),
            Some(other) => {
                return Err(err(sc.pos, format!("unexpected '{}'", other as char)))
            }
        }
    }
}
