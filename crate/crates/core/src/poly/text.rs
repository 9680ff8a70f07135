//! Canonical text form: terms in decreasing order, `" + "`/`" - "` between
//! terms, unit coefficients omitted, `p/q` coefficients, `x^k` powers, `*`
//! between factors. Example: `-2*xh*yh - xe*yf - xf*ye`.
//!
//! The parser accepts the same grammar with arbitrary whitespace:
//!
//! ```text
//! poly   := sign? term (sign term)*
//! term   := factor ('*' factor)*
//! factor := number ('/' number)? | ident ('^' number)?
//! ```

use super::{MPoly, Monomial, PolyError, RingRef};
use crate::rational::Rat;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let names = self.ring().names();
        for (k, (m, c)) in self.terms().iter().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let a = c.abs();
            let mut factors: Vec<String> = Vec::new();
            if !a.is_one() || m.is_one() {
                factors.push(a.to_string());
            }
            for (i, &e) in m.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(names[i].clone()),
                    _ => factors.push(format!("{}^{}", names[i], e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl MPoly {
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    pub fn parse(ring: &RingRef, text: &str) -> Result<MPoly, PolyError> {
        let src: Vec<(usize, char)> = text.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
        let mut p = Parser { ring, src: &src, pos: 0, len: text.len() };
        p.poly()
    }
}

struct Parser<'a> {
    ring: &'a RingRef,
    src: &'a [(usize, char)],
    pos: usize,
    len: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.src.get(self.pos).map(|&(_, c)| c)
    }

    fn offset(&self) -> usize {
        self.src.get(self.pos).map_or(self.len, |&(o, _)| o)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, PolyError> {
        Err(PolyError::Parse { pos: self.offset(), msg: msg.into() })
    }

    fn poly(&mut self) -> Result<MPoly, PolyError> {
        if self.src.is_empty() {
            return self.err("empty input");
        }
        let mut terms = Vec::new();
        let mut first = true;
        while self.pos < self.src.len() {
            let sign = match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    Rat::one()
                }
                Some('-') => {
                    self.pos += 1;
                    -Rat::one()
                }
                _ if first => Rat::one(),
                Some(c) => return self.err(format!("expected '+' or '-', found '{c}'")),
                None => unreachable!(),
            };
            first = false;
            let (m, c) = self.term()?;
            terms.push((m, sign * c));
        }
        Ok(MPoly::from_terms(self.ring, terms))
    }

    fn term(&mut self) -> Result<(Monomial, Rat), PolyError> {
        let mut mono = Monomial::one(self.ring.nvars());
        let mut coeff = Rat::one();
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => coeff *= self.number()?,
                Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                    let start = self.offset();
                    let name = self.ident();
                    let Some(v) = self.ring.index_of(&name) else {
                        return Err(PolyError::Parse { pos: start, msg: format!("unknown variable '{name}'") });
                    };
                    let mut e: u32 = 1;
                    if self.peek() == Some('^') {
                        self.pos += 1;
                        let n = self.digits()?;
                        e = n.try_into().map_err(|_| PolyError::ExponentOverflow)?;
                    }
                    let total = mono.exponent(v) as u32 + e;
                    if total > u8::MAX as u32 {
                        return Err(PolyError::ExponentOverflow);
                    }
                    mono.set_exponent(v, total as u8);
                }
                Some(c) => return self.err(format!("unexpected '{c}'")),
                None => return self.err("unexpected end of input"),
            }
            if self.peek() == Some('*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok((mono, coeff))
    }

    fn ident(&mut self) -> String {
        let mut s = String::new();
        while let Some(c) = self.peek() {
            if c.is_ascii_alphanumeric() || c == '_' {
                s.push(c);
                self.pos += 1;
            } else {
                break;
            }
        }
        s
    }

    fn digits(&mut self) -> Result<BigInt, PolyError> {
        let mut s = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            s.push(c);
            self.pos += 1;
        }
        if s.is_empty() {
            return self.err("expected digits");
        }
        Ok(s.parse().expect("ascii digits"))
    }

    fn number(&mut self) -> Result<Rat, PolyError> {
        let n = self.digits()?;
        if self.peek() == Some('/') {
            self.pos += 1;
            let d = self.digits()?;
            if d.is_zero() {
                return self.err("zero denominator");
            }
            return Ok(Rat::new(n, d));
        }
        Ok(Rat::from_integer(n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{MonomialOrder, Ring};

    fn sl2_ring() -> RingRef {
        Ring::new(["xe", "xh", "xf", "ye", "yh", "yf"], MonomialOrder::DegRevLex)
    }

    #[test]
    fn canonical_form_example() {
        let r = sl2_ring();
        let p = MPoly::parse(&r, "- xe*yf -2 * xh * yh - xf*ye").unwrap();
        // degrevlex with xe > xh > xf > ye > yh > yf puts xf*ye first
        assert_eq!(p.to_text(), "-xf*ye - 2*xh*yh - xe*yf");
        assert_eq!(MPoly::parse(&r, &p.to_text()).unwrap(), p);
    }

    #[test]
    fn coefficients_and_constants() {
        let r = sl2_ring();
        let p = MPoly::parse(&r, "-1/4*xe + 3/6 + xh^2").unwrap();
        assert_eq!(p.to_text(), "xh^2 - 1/4*xe + 1/2");
        assert_eq!(MPoly::zero(&r).to_text(), "0");
        assert_eq!(MPoly::parse(&r, "0").unwrap(), MPoly::zero(&r));
        assert_eq!(MPoly::parse(&r, "-1").unwrap().to_text(), "-1");
    }

    #[test]
    fn rejects_outside_grammar() {
        let r = sl2_ring();
        for bad in ["", "(xe)", "xe +", "xq", "xe^", "1/0", "xe xh", "2**xe", "xe+-xh"] {
            assert!(MPoly::parse(&r, bad).is_err(), "accepted {bad:?}");
        }
    }
}
