//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr     := term (("+" | "-") term)*
//! term     := factor ("*" factor)*
//! factor   := base ("^" uint)?
//! base     := rational | identifier | "(" expr ")" | ("+" | "-") factor
//! rational := int ("/" uint)?
//! ```
//!
//! Whitespace is insignificant and there is no implicit multiplication.

use num_bigint::BigInt;

use crate::error::{Error, Result};

use super::{Monomial, PolyRing, Polynomial};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: &'a PolyRing,
}

pub(super) fn parse(src: &str, ring: &PolyRing) -> Result<Polynomial> {
    let mut p = Parser {
        src: src.as_bytes(),
        pos: 0,
        ring,
    };
    p.skip_ws();
    if p.at_end() {
        return Err(p.error("empty expression"));
    }
    let f = p.expr()?;
    p.skip_ws();
    if !p.at_end() {
        return Err(p.error(&format!("unexpected `{}`", p.src[p.pos] as char)));
    }
    Ok(f)
}

fn max_exponents(f: &Polynomial) -> Vec<u64> {
    let mut out = vec![0u64; f.ring().nvars()];
    for (m, _) in f.terms() {
        for (o, &e) in out.iter_mut().zip(m.exponents()) {
            *o = (*o).max(e as u64);
        }
    }
    out
}

impl<'a> Parser<'a> {
    fn error(&self, msg: &str) -> Error {
        Error::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            let start = self.pos;
            let rhs = self.factor()?;
            let a = max_exponents(&acc);
            let b = max_exponents(&rhs);
            if a.iter().zip(&b).any(|(x, y)| x + y > u32::MAX as u64) {
                self.pos = start;
                return Err(self.error("exponent overflow"));
            }
            acc = &acc * &rhs;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.base()?;
        if self.eat(b'^') {
            self.skip_ws();
            let start = self.pos;
            let digits = self.digits();
            if digits.is_empty() {
                return Err(self.error("expected exponent"));
            }
            let e: u32 = digits.parse().map_err(|_| Error::Syntax {
                pos: start,
                msg: "exponent out of range".into(),
            })?;
            if max_exponents(&base)
                .iter()
                .any(|&m| m * e as u64 > u32::MAX as u64)
            {
                return Err(Error::Syntax {
                    pos: start,
                    msg: "exponent overflow".into(),
                });
            }
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn digits(&mut self) -> &'a str {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).unwrap()
    }

    fn base(&mut self) -> Result<Polynomial> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            None => Err(self.error("unexpected end of input")),
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected `)`"));
                }
                Ok(inner)
            }
            Some(b'-') => {
                self.pos += 1;
                Ok(-&self.factor()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.factor()
            }
            Some(c) if c.is_ascii_digit() => {
                let num: BigInt = self.digits().parse().unwrap();
                let den = if self.eat(b'/') {
                    self.skip_ws();
                    let d = self.digits();
                    if d.is_empty() {
                        return Err(self.error("expected denominator"));
                    }
                    let d: BigInt = d.parse().unwrap();
                    if d == BigInt::from(0) {
                        return Err(Error::Syntax {
                            pos: start,
                            msg: "zero denominator".into(),
                        });
                    }
                    d
                } else {
                    BigInt::from(1)
                };
                let c = self.ring.field().from_ratio(&num, &den)?;
                Ok(Polynomial::constant(self.ring, c))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == b'_') {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let i = self
                    .ring
                    .var_index(name)
                    .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
                Ok(Polynomial::monomial(
                    self.ring,
                    Monomial::var(self.ring.nvars(), i),
                    self.ring.field().one(),
                ))
            }
            Some(c) => Err(self.error(&format!("unexpected `{}`", c as char))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{CoefficientField, MonomialOrder};

    fn ring() -> PolyRing {
        PolyRing::new(
            &["x", "y"],
            CoefficientField::Rationals,
            MonomialOrder::GrevLex,
        )
        .unwrap()
    }

    #[test]
    fn grammar_reading() {
        let r = ring();
        let f = parse("x^2*y - 3*y + 1", &r).unwrap();
        let t: Vec<(Vec<u32>, String)> = f
            .terms()
            .iter()
            .map(|(m, c)| (m.exponents().to_vec(), c.to_string()))
            .collect();
        assert_eq!(
            t,
            vec![
                (vec![2, 1], "1".to_string()),
                (vec![0, 1], "-3".to_string()),
                (vec![0, 0], "1".to_string())
            ]
        );
    }

    #[test]
    fn cancellation_and_expansion() {
        let r = ring();
        assert!(parse("x - x", &r).unwrap().is_zero());
        assert_eq!(parse("(x+y)*(x-y)", &r).unwrap().to_string(), "x^2 - y^2");
        assert_eq!(parse(" ( x ) ^ 3 ", &r).unwrap().to_string(), "x^3");
        assert_eq!(parse("-x*-y", &r).unwrap().to_string(), "x*y");
        assert_eq!(parse("3/6*x", &r).unwrap().to_string(), "1/2*x");
    }

    #[test]
    fn error_positions() {
        let r = ring();
        assert_eq!(
            parse("x + * y", &r),
            Err(Error::Syntax {
                pos: 4,
                msg: "unexpected `*`".into()
            })
        );
        assert_eq!(parse("x y", &r).unwrap_err(), Error::Syntax {
            pos: 2,
            msg: "unexpected `y`".into()
        });
        assert!(matches!(parse("(x + y", &r), Err(Error::Syntax { .. })));
        assert!(matches!(parse("", &r), Err(Error::Syntax { .. })));
        assert!(matches!(parse("x^", &r), Err(Error::Syntax { .. })));
        assert!(matches!(parse("1/0", &r), Err(Error::Syntax { .. })));
        assert!(matches!(
            parse("x^99999999999", &r),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            parse("x^4000000000*x^4000000000", &r),
            Err(Error::Syntax { .. })
        ));
        assert_eq!(parse("z", &r), Err(Error::UnknownVariable("z".into())));
    }

    #[test]
    fn denominators_in_prime_fields() {
        let r = PolyRing::new(
            &["x"],
            CoefficientField::prime(5).unwrap(),
            MonomialOrder::GrevLex,
        )
        .unwrap();
        assert_eq!(parse("1/2*x", &r).unwrap().to_string(), "3*x");
        assert!(matches!(parse("x/5", &r), Err(Error::Syntax { .. })));
        assert!(matches!(parse("1/5", &r), Err(Error::FieldMismatch(_))));
    }
}
