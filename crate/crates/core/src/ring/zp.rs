use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Domain, DomainDescriptor, Field, FiniteField};
use crate::error::{Error, Result};

/// A prime `2 <= p < 2^31`, validated at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Modulus(u32);

impl Modulus {
    pub fn new(p: u64) -> Result<Self> {
        if !(2..1 << 31).contains(&p) {
            return Err(Error::ModulusOutOfRange(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Modulus(p as u32))
    }

    #[inline(always)]
    pub fn get(self) -> u32 {
        self.0
    }

    #[inline(always)]
    pub(crate) fn reduce_i64(self, v: i64) -> u32 {
        v.rem_euclid(self.0 as i64) as u32
    }

    #[inline(always)]
    pub(crate) fn add(self, a: u32, b: u32) -> u32 {
        let s = a as u64 + b as u64;
        let p = self.0 as u64;
        (if s >= p { s - p } else { s }) as u32
    }

    #[inline(always)]
    pub(crate) fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.0 - b
        }
    }

    #[inline(always)]
    pub(crate) fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.0 as u64) as u32
    }

    pub(crate) fn pow(self, mut base: u32, mut exp: u64) -> u32 {
        let mut acc = 1 % self.0;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    pub(crate) fn inv(self, a: u32) -> Option<u32> {
        (a != 0).then(|| self.pow(a, self.0 as u64 - 2))
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of `GF(p)`, stored as its canonical representative in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Zp {
    value: u32,
    modulus: Modulus,
}

impl Zp {
    pub fn new(value: u64, modulus: Modulus) -> Self {
        Zp {
            value: (value % modulus.get() as u64) as u32,
            modulus,
        }
    }

    pub fn from_signed(value: i64, modulus: Modulus) -> Self {
        Zp {
            value: modulus.reduce_i64(value),
            modulus,
        }
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn modulus(self) -> Modulus {
        self.modulus
    }

    #[inline(always)]
    fn same(self, rhs: Zp) -> Modulus {
        assert_eq!(self.modulus, rhs.modulus, "GF(p) descriptor mismatch");
        self.modulus
    }
}

impl Add for Zp {
    type Output = Zp;
    #[inline(always)]
    fn add(self, rhs: Zp) -> Zp {
        let m = self.same(rhs);
        Zp {
            value: m.add(self.value, rhs.value),
            modulus: m,
        }
    }
}

impl Sub for Zp {
    type Output = Zp;
    #[inline(always)]
    fn sub(self, rhs: Zp) -> Zp {
        let m = self.same(rhs);
        Zp {
            value: m.sub(self.value, rhs.value),
            modulus: m,
        }
    }
}

impl Mul for Zp {
    type Output = Zp;
    #[inline(always)]
    fn mul(self, rhs: Zp) -> Zp {
        let m = self.same(rhs);
        Zp {
            value: m.mul(self.value, rhs.value),
            modulus: m,
        }
    }
}

impl Neg for Zp {
    type Output = Zp;
    #[inline(always)]
    fn neg(self) -> Zp {
        Zp {
            value: self.modulus.sub(0, self.value),
            modulus: self.modulus,
        }
    }
}

impl fmt::Display for Zp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Domain for Zp {
    type Ctx = Modulus;

    fn ctx(&self) -> Modulus {
        self.modulus
    }

    fn zero_in(ctx: &Modulus) -> Self {
        Zp::new(0, *ctx)
    }

    fn one_in(ctx: &Modulus) -> Self {
        Zp::new(1, *ctx)
    }

    fn from_i64(ctx: &Modulus, v: i64) -> Self {
        Zp::from_signed(v, *ctx)
    }

    #[inline(always)]
    fn is_zero(&self) -> bool {
        self.value == 0
    }

    #[inline(always)]
    fn is_one(&self) -> bool {
        self.value == 1
    }

    fn descriptor(ctx: &Modulus) -> DomainDescriptor {
        DomainDescriptor::Gfp(*ctx)
    }

    fn inv(&self) -> Option<Self> {
        self.modulus.inv(self.value).map(|value| Zp {
            value,
            modulus: self.modulus,
        })
    }

    fn parse_in(ctx: &Modulus, text: &str) -> Result<Self> {
        let v: i64 = text
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("`{text}` is not a GF({ctx}) element")))?;
        Ok(Zp::from_signed(v, *ctx))
    }

    fn to_json(&self) -> serde_json::Value {
        serde_json::Value::from(self.value)
    }

    fn from_json(ctx: &Modulus, value: &serde_json::Value) -> Result<Self> {
        value
            .as_i64()
            .map(|v| Zp::from_signed(v, *ctx))
            .ok_or_else(|| Error::Parse(format!("{value} is not a GF({ctx}) element")))
    }
}

impl Field for Zp {}

impl FiniteField for Zp {
    fn elements(ctx: &Modulus) -> Vec<Self> {
        (0..ctx.get() as u64).map(|v| Zp::new(v, *ctx)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validates_primes() {
        assert!(Modulus::new(2).is_ok());
        assert!(Modulus::new(2_147_483_647).is_ok());
        assert_eq!(Modulus::new(1), Err(Error::ModulusOutOfRange(1)));
        assert_eq!(Modulus::new(9), Err(Error::NotPrime(9)));
        assert_eq!(
            Modulus::new(1 << 31),
            Err(Error::ModulusOutOfRange(1 << 31))
        );
    }

    #[test]
    fn canonical_representatives() {
        let p = Modulus::new(7).unwrap();
        assert_eq!(Zp::from_signed(-1, p).value(), 6);
        assert_eq!(Zp::new(15, p).value(), 1);
        assert_eq!((-Zp::new(0, p)).value(), 0);
        let big = Modulus::new(2_147_483_647).unwrap();
        let a = Zp::new(2_147_483_646, big);
        assert_eq!((a * a).value(), 1);
        assert_eq!((a + a).value(), 2_147_483_645);
    }

    #[test]
    #[should_panic(expected = "descriptor mismatch")]
    fn operator_mismatch_panics() {
        let _ = Zp::new(1, Modulus::new(3).unwrap()) + Zp::new(1, Modulus::new(5).unwrap());
    }
}
