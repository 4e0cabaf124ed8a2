//! Coefficient domains.
//!
//! Every algorithm in this crate is generic over a [`Domain`]: a commutative
//! integral domain with exact arithmetic. Domains whose elements need no
//! runtime parameters (`GF(2)`, the integers) use `()` as their context;
//! prime fields and polynomials over a prime field carry their [`Modulus`].
//!
//! Four instances ship with the crate:
//!
//! | descriptor     | type                 | field | factorial |
//! |----------------|----------------------|-------|-----------|
//! | `gf2`          | [`Gf2`]              | yes   | yes       |
//! | `gfp:p`        | [`Zp`]               | yes   | yes       |
//! | `int`          | [`num_bigint::BigInt`] | no  | yes       |
//! | `gfp_poly:p`   | [`FpPoly`]           | no    | yes       |

mod descriptor;
mod fp_poly;
mod gf2;
mod int;
mod zp;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

pub use descriptor::DomainDescriptor;
pub use fp_poly::FpPoly;
pub use gf2::Gf2;
pub use zp::{Modulus, Zp};

use crate::error::{Error, Result};

/// A commutative, unital integral domain with exact arithmetic.
///
/// The std operators panic when the operands live in different contexts
/// (e.g. two prime fields with different moduli); [`dom_add`] and [`dom_mul`]
/// are the checked counterparts.
pub trait Domain:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// Runtime parameters shared by all elements of one domain instance.
    type Ctx: Clone + PartialEq + fmt::Debug;

    fn ctx(&self) -> Self::Ctx;
    fn zero_in(ctx: &Self::Ctx) -> Self;
    fn one_in(ctx: &Self::Ctx) -> Self;
    /// Image of an integer under the canonical map `Z -> D`.
    fn from_i64(ctx: &Self::Ctx, v: i64) -> Self;
    fn is_zero(&self) -> bool;

    fn is_one(&self) -> bool {
        *self == Self::one_in(&self.ctx())
    }

    fn descriptor(ctx: &Self::Ctx) -> DomainDescriptor;

    /// Multiplicative inverse, when `self` is a unit.
    fn inv(&self) -> Option<Self>;

    /// Parses one element from its literal form (`5`, `-12`, `(1,2)`).
    fn parse_in(ctx: &Self::Ctx, text: &str) -> Result<Self>;

    fn to_json(&self) -> serde_json::Value;
    fn from_json(ctx: &Self::Ctx, value: &serde_json::Value) -> Result<Self>;
}

/// Domains in which every nonzero element is invertible.
pub trait Field: Domain {
    /// Inverse of a nonzero element. Panics on zero.
    fn inverse(&self) -> Self {
        self.inv().expect("inverse of zero")
    }
}

/// Finite fields small enough to enumerate.
pub trait FiniteField: Field {
    fn elements(ctx: &Self::Ctx) -> Vec<Self>;
}

fn check_same<T: Domain>(a: &T, b: &T) -> Result<()> {
    let (ca, cb) = (a.ctx(), b.ctx());
    if ca != cb {
        return Err(Error::DescriptorMismatch(
            T::descriptor(&ca).to_string(),
            T::descriptor(&cb).to_string(),
        ));
    }
    Ok(())
}

/// Exact sum, rejecting operands from different domain instances.
pub fn dom_add<T: Domain>(a: &T, b: &T) -> Result<T> {
    check_same(a, b)?;
    Ok(a.clone() + b.clone())
}

/// Exact product, rejecting operands from different domain instances.
pub fn dom_mul<T: Domain>(a: &T, b: &T) -> Result<T> {
    check_same(a, b)?;
    Ok(a.clone() * b.clone())
}

/// Field inverse. Fails on non-field domains and on zero.
pub fn dom_inv<T: Domain>(a: &T) -> Result<T> {
    let desc = T::descriptor(&a.ctx());
    if !desc.is_field() {
        return Err(Error::NotAField(desc.to_string()));
    }
    a.inv().ok_or(Error::ZeroInverse)
}

/// Splits `a,b,(c,d),e` at top-level commas.
pub(crate) fn split_top_level(text: &str) -> Result<Vec<&str>> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in text.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(Error::Parse(format!("unbalanced `)` in `{text}`")));
                }
            }
            ',' if depth == 0 => {
                parts.push(text[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(Error::Parse(format!("unbalanced `(` in `{text}`")));
    }
    parts.push(text[start..].trim());
    Ok(parts)
}
