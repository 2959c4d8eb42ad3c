//! Coefficient fields: exact rationals and prime fields GF(p).
//!
//! Scalars do not know which field they belong to. Arithmetic goes through a
//! [`Domain`], which plays the role of the field `K`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The default prime used by fuzz suites.
pub const DEFAULT_PRIME: u64 = 32003;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Domain {
    Rationals,
    /// GF(p); `p` is checked prime on construction.
    Prime(u64),
}

/// A field element. Rationals are kept in lowest terms with a positive
/// denominator (guaranteed by `BigRational`); residues lie in `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Residue(u64),
}

impl Domain {
    pub fn prime(p: u64) -> Result<Domain> {
        if is_prime(p) {
            Ok(Domain::Prime(p))
        } else {
            Err(Error::InvalidRing(format!("{p} is not prime")))
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Domain::Rationals => Scalar::Rational(BigRational::zero()),
            Domain::Prime(_) => Scalar::Residue(0),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            Domain::Rationals => Scalar::Rational(BigRational::one()),
            Domain::Prime(_) => Scalar::Residue(1),
        }
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        self.from_bigint(&BigInt::from(v))
    }

    pub fn from_bigint(&self, v: &BigInt) -> Scalar {
        match self {
            Domain::Rationals => Scalar::Rational(BigRational::from_integer(v.clone())),
            Domain::Prime(p) => {
                let r = v.mod_floor(&BigInt::from(*p));
                Scalar::Residue(r.to_u64().expect("residue fits in u64"))
            }
        }
    }

    pub fn from_fraction(&self, num: &BigInt, den: &BigInt) -> Result<Scalar> {
        let d = self.from_bigint(den);
        let inv = self.inv(&d).ok_or(Error::DivisionByZero)?;
        Ok(self.mul(&self.from_bigint(num), &inv))
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Residue(r) => *r == 0,
        }
    }

    pub fn is_one(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Residue(r) => *r == 1,
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Domain::Rationals, Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x + y),
            (Domain::Prime(p), Scalar::Residue(x), Scalar::Residue(y)) => {
                let s = x + y;
                Scalar::Residue(if s >= *p { s - p } else { s })
            }
            _ => panic!("scalar does not belong to {self:?}"),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (Domain::Rationals, Scalar::Rational(x)) => Scalar::Rational(-x),
            (Domain::Prime(p), Scalar::Residue(x)) => Scalar::Residue(if *x == 0 { 0 } else { p - x }),
            _ => panic!("scalar does not belong to {self:?}"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Domain::Rationals, Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x - y),
            (Domain::Prime(p), Scalar::Residue(x), Scalar::Residue(y)) => {
                Scalar::Residue(if x >= y { x - y } else { p - (y - x) })
            }
            _ => panic!("scalar does not belong to {self:?}"),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Domain::Rationals, Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x * y),
            (Domain::Prime(p), Scalar::Residue(x), Scalar::Residue(y)) => {
                Scalar::Residue(mul_mod(*x, *y, *p))
            }
            _ => panic!("scalar does not belong to {self:?}"),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: &Scalar) -> Option<Scalar> {
        if self.is_zero(a) {
            return None;
        }
        Some(match (self, a) {
            (Domain::Rationals, Scalar::Rational(x)) => Scalar::Rational(x.recip()),
            (Domain::Prime(p), Scalar::Residue(x)) => Scalar::Residue(pow_mod(*x, p - 2, *p)),
            _ => panic!("scalar does not belong to {self:?}"),
        })
    }

    /// Signed integer view used for printing: rationals as-is, residues in the
    /// symmetric range `(-p/2, p/2]`.
    pub fn signed_parts(&self, a: &Scalar) -> (bool, BigInt, BigInt) {
        match (self, a) {
            (_, Scalar::Rational(q)) => (q.is_negative(), q.numer().abs(), q.denom().clone()),
            (Domain::Prime(p), Scalar::Residue(r)) => {
                if *r > p / 2 {
                    (true, BigInt::from(p - r), BigInt::one())
                } else {
                    (false, BigInt::from(*r), BigInt::one())
                }
            }
            _ => panic!("scalar does not belong to {self:?}"),
        }
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Domain::Rationals => write!(f, "QQ"),
            Domain::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
