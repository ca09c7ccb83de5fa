//! Coefficient fields: the rationals and prime fields `F_p` with `p < 2^31`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldKind {
    Rationals,
    PrimeField,
}

/// The coefficient field of a polynomial ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoefficientField {
    Rationals,
    /// Residues modulo a prime `p`, stored as least non-negative representatives.
    Prime(u32),
}

/// A field element. The variant always matches the owning ring's field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coeff {
    Rational(BigRational),
    Modular(u32),
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl CoefficientField {
    pub fn prime(p: u64) -> Result<Self> {
        if p >= 1 << 31 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(CoefficientField::Prime(p as u32))
    }

    pub fn kind(&self) -> FieldKind {
        match self {
            CoefficientField::Rationals => FieldKind::Rationals,
            CoefficientField::Prime(_) => FieldKind::PrimeField,
        }
    }

    /// 0 for the rationals.
    pub fn characteristic(&self) -> u32 {
        match *self {
            CoefficientField::Rationals => 0,
            CoefficientField::Prime(p) => p,
        }
    }

    pub fn zero(&self) -> Coeff {
        match self {
            CoefficientField::Rationals => Coeff::Rational(BigRational::zero()),
            CoefficientField::Prime(_) => Coeff::Modular(0),
        }
    }

    pub fn one(&self) -> Coeff {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Coeff {
        match *self {
            CoefficientField::Rationals => Coeff::Rational(BigRational::from_integer(n.into())),
            CoefficientField::Prime(p) => Coeff::Modular(n.rem_euclid(p as i64) as u32),
        }
    }

    /// Maps `num / den` into the field. Fails when `den` vanishes in the field.
    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Coeff> {
        match *self {
            CoefficientField::Rationals => {
                if den.is_zero() {
                    return Err(Error::FieldMismatch(format!("{num}/{den}")));
                }
                Ok(Coeff::Rational(BigRational::new(num.clone(), den.clone())))
            }
            CoefficientField::Prime(p) => {
                let pb = BigInt::from(p);
                let n = num.mod_floor(&pb).to_u32().unwrap();
                let d = den.mod_floor(&pb).to_u32().unwrap();
                if d == 0 {
                    return Err(Error::FieldMismatch(format!(
                        "denominator {den} vanishes modulo {p}"
                    )));
                }
                Ok(Coeff::Modular(mul_mod(n, inv_mod(d, p), p)))
            }
        }
    }

    pub fn is_zero(&self, a: &Coeff) -> bool {
        match a {
            Coeff::Rational(q) => q.is_zero(),
            Coeff::Modular(v) => *v == 0,
        }
    }

    pub fn is_one(&self, a: &Coeff) -> bool {
        match a {
            Coeff::Rational(q) => q.is_one(),
            Coeff::Modular(v) => *v == 1,
        }
    }

    pub fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (a, b) {
            (Coeff::Rational(x), Coeff::Rational(y)) => Coeff::Rational(x + y),
            (Coeff::Modular(x), Coeff::Modular(y)) => {
                let p = self.characteristic() as u64;
                Coeff::Modular(((*x as u64 + *y as u64) % p) as u32)
            }
            _ => unreachable!("coefficient variants from different fields"),
        }
    }

    pub fn neg(&self, a: &Coeff) -> Coeff {
        match a {
            Coeff::Rational(x) => Coeff::Rational(-x),
            Coeff::Modular(0) => Coeff::Modular(0),
            Coeff::Modular(x) => Coeff::Modular(self.characteristic() - x),
        }
    }

    pub fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (a, b) {
            (Coeff::Rational(x), Coeff::Rational(y)) => Coeff::Rational(x * y),
            (Coeff::Modular(x), Coeff::Modular(y)) => {
                Coeff::Modular(mul_mod(*x, *y, self.characteristic()))
            }
            _ => unreachable!("coefficient variants from different fields"),
        }
    }

    /// Panics on zero.
    pub fn inv(&self, a: &Coeff) -> Coeff {
        match a {
            Coeff::Rational(x) => {
                assert!(!x.is_zero(), "inverse of zero");
                Coeff::Rational(x.recip())
            }
            Coeff::Modular(x) => {
                assert!(*x != 0, "inverse of zero");
                Coeff::Modular(inv_mod(*x, self.characteristic()))
            }
        }
    }

    pub fn div(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.mul(a, &self.inv(b))
    }
}

impl fmt::Display for CoefficientField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientField::Rationals => write!(f, "Q"),
            CoefficientField::Prime(p) => write!(f, "Fp {p}"),
        }
    }
}

impl Coeff {
    /// True for negative rationals; residues are never negative.
    pub fn is_negative(&self) -> bool {
        match self {
            Coeff::Rational(q) => q.is_negative(),
            Coeff::Modular(_) => false,
        }
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Rational(q) => write!(f, "{q}"),
            Coeff::Modular(v) => write!(f, "{v}"),
        }
    }
}

fn mul_mod(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

fn inv_mod(a: u32, p: u32) -> u32 {
    // Fermat: a^(p-2)
    let mut result = 1u32;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = mul_mod(result, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    result
}
