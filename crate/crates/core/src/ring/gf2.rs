use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Domain, DomainDescriptor, Field, FiniteField};
use crate::error::{Error, Result};

/// An element of the binary field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Gf2(u8);

impl Gf2 {
    pub const ZERO: Gf2 = Gf2(0);
    pub const ONE: Gf2 = Gf2(1);

    pub fn new(bit: bool) -> Self {
        Gf2(bit as u8)
    }

    pub fn bit(self) -> bool {
        self.0 != 0
    }
}

impl From<bool> for Gf2 {
    fn from(bit: bool) -> Self {
        Gf2::new(bit)
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Add for Gf2 {
    type Output = Gf2;
    #[inline(always)]
    fn add(self, rhs: Gf2) -> Gf2 {
        Gf2(self.0 ^ rhs.0)
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Sub for Gf2 {
    type Output = Gf2;
    #[inline(always)]
    fn sub(self, rhs: Gf2) -> Gf2 {
        Gf2(self.0 ^ rhs.0)
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Mul for Gf2 {
    type Output = Gf2;
    #[inline(always)]
    fn mul(self, rhs: Gf2) -> Gf2 {
        Gf2(self.0 & rhs.0)
    }
}

impl Neg for Gf2 {
    type Output = Gf2;
    #[inline(always)]
    fn neg(self) -> Gf2 {
        self
    }
}

impl Zero for Gf2 {
    fn zero() -> Self {
        Gf2::ZERO
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl One for Gf2 {
    fn one() -> Self {
        Gf2::ONE
    }
}

impl fmt::Display for Gf2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Domain for Gf2 {
    type Ctx = ();

    fn ctx(&self) {}

    fn zero_in(_: &()) -> Self {
        Gf2::ZERO
    }

    fn one_in(_: &()) -> Self {
        Gf2::ONE
    }

    fn from_i64(_: &(), v: i64) -> Self {
        Gf2((v & 1) as u8)
    }

    #[inline(always)]
    fn is_zero(&self) -> bool {
        self.0 == 0
    }

    #[inline(always)]
    fn is_one(&self) -> bool {
        self.0 == 1
    }

    fn descriptor(_: &()) -> DomainDescriptor {
        DomainDescriptor::Gf2
    }

    fn inv(&self) -> Option<Self> {
        (self.0 == 1).then_some(Gf2::ONE)
    }

    fn parse_in(_: &(), text: &str) -> Result<Self> {
        let v: i64 = text
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("`{text}` is not a GF(2) element")))?;
        Ok(Gf2::from_i64(&(), v.rem_euclid(2)))
    }

    fn to_json(&self) -> serde_json::Value {
        serde_json::Value::from(self.0)
    }

    fn from_json(_: &(), value: &serde_json::Value) -> Result<Self> {
        value
            .as_i64()
            .map(|v| Gf2::from_i64(&(), v.rem_euclid(2)))
            .ok_or_else(|| Error::Parse(format!("{value} is not a GF(2) element")))
    }
}

impl Field for Gf2 {}

impl FiniteField for Gf2 {
    fn elements(_: &()) -> Vec<Self> {
        vec![Gf2::ZERO, Gf2::ONE]
    }
}
