use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Coefficient field; elements are plain values, arithmetic goes through
/// the field object so that the modulus of `F_p` can be chosen at run time.
pub trait Field: Clone + Debug + Send + Sync {
    type Elem: Clone + PartialEq + Eq + Hash + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    #[allow(clippy::wrong_self_convention)]
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Panics on zero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn characteristic(&self) -> u64;
    fn name(&self) -> String;
    fn format(&self, a: &Self::Elem) -> String;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        assert!(!a.is_zero(), "inverse of zero");
        a.recip()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn name(&self) -> String {
        "Q".into()
    }
    fn format(&self, a: &BigRational) -> String {
        a.to_string()
    }
}

/// `Z/pZ` for a prime `p < 2^32`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p >= 1 << 32 {
            return Err(Error::InvalidParams(format!("modulus {p} too large")));
        }
        if !is_prime(p) {
            return Err(Error::InvalidParams(format!("{p} is not prime")));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    (2..)
        .take_while(|d| d * d <= n)
        .all(|d| !n.is_multiple_of(d))
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }
    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverse of zero");
        // Fermat: a^(p-2)
        let (mut base, mut exp, mut acc) = (*a, self.p - 2, 1u64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        acc
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
    fn name(&self) -> String {
        format!("F{}", self.p)
    }
    fn format(&self, a: &u64) -> String {
        a.to_string()
    }
}

/// A field chosen at run time, e.g. from a command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldKind {
    Rationals,
    Prime(PrimeField),
}

impl FieldKind {
    /// Accepts `q`, `Q`, `f<p>` or `F<p>` for a prime `p`.
    pub fn parse(s: &str) -> Result<Self> {
        let lower = s.to_ascii_lowercase();
        if lower == "q" {
            return Ok(FieldKind::Rationals);
        }
        let p = lower
            .strip_prefix('f')
            .and_then(|d| d.parse::<u64>().ok())
            .ok_or_else(|| {
                Error::InvalidParams(format!("unknown field {s:?}; expected q or f<p>"))
            })?;
        Ok(FieldKind::Prime(PrimeField::new(p)?))
    }

    pub fn name(&self) -> String {
        match self {
            FieldKind::Rationals => Rationals.name(),
            FieldKind::Prime(f) => f.name(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        let f = PrimeField::new(7).unwrap();
        for a in 1..7 {
            assert_eq!(f.mul(&a, &f.inv(&a)), 1);
        }
        assert_eq!(f.from_i64(-1), 6);
        assert_eq!(f.neg(&0), 0);
        let f2 = PrimeField::new(2).unwrap();
        assert_eq!(f2.from_i64(-1), 1);
        assert_eq!(f2.inv(&1), 1);
    }

    #[test]
    fn composite_moduli_rejected() {
        assert!(PrimeField::new(4).is_err());
        assert!(PrimeField::new(1).is_err());
        assert!(FieldKind::parse("f9").is_err());
        assert!(FieldKind::parse("r").is_err());
        assert_eq!(FieldKind::parse("Q").unwrap(), FieldKind::Rationals);
        assert_eq!(FieldKind::parse("f3").unwrap().name(), "F3");
    }
}
