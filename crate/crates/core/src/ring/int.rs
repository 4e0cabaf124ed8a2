use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{Domain, DomainDescriptor};
use crate::error::{Error, Result};

impl Domain for BigInt {
    type Ctx = ();

    fn ctx(&self) {}

    fn zero_in(_: &()) -> Self {
        BigInt::zero()
    }

    fn one_in(_: &()) -> Self {
        BigInt::one()
    }

    fn from_i64(_: &(), v: i64) -> Self {
        BigInt::from(v)
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn is_one(&self) -> bool {
        One::is_one(self)
    }

    fn descriptor(_: &()) -> DomainDescriptor {
        DomainDescriptor::Int
    }

    fn inv(&self) -> Option<Self> {
        (self.abs() == BigInt::one()).then(|| self.clone())
    }

    fn parse_in(_: &(), text: &str) -> Result<Self> {
        text.trim()
            .parse()
            .map_err(|_| Error::Parse(format!("`{text}` is not an integer")))
    }

    fn to_json(&self) -> serde_json::Value {
        match self.to_i64() {
            Some(v) => serde_json::Value::from(v),
            None => serde_json::Value::from(self.to_string()),
        }
    }

    fn from_json(_: &(), value: &serde_json::Value) -> Result<Self> {
        if let Some(v) = value.as_i64() {
            return Ok(BigInt::from(v));
        }
        value
            .as_str()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::Parse(format!("{value} is not an integer")))
    }
}
