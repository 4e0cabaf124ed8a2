use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Domain, DomainDescriptor, Modulus};
use crate::error::{Error, Result};

/// A polynomial in `y` over `GF(p)`, used as a coefficient domain so that
/// `(GF(p)[y])[x]` inputs can be handled.
///
/// Coefficients are ascending in `y` with no trailing zeros; the written
/// form is a parenthesised list, `(1,2)` for `1 + 2y`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FpPoly {
    coeffs: Vec<u32>,
    modulus: Modulus,
}

impl FpPoly {
    pub fn new(coeffs: Vec<u64>, modulus: Modulus) -> Self {
        let p = modulus.get() as u64;
        let mut poly = FpPoly {
            coeffs: coeffs.into_iter().map(|c| (c % p) as u32).collect(),
            modulus,
        };
        poly.trim();
        poly
    }

    pub fn constant(c: u64, modulus: Modulus) -> Self {
        FpPoly::new(vec![c], modulus)
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    fn same(&self, rhs: &FpPoly) -> Modulus {
        assert_eq!(self.modulus, rhs.modulus, "GF(p)[y] descriptor mismatch");
        self.modulus
    }

    fn zip_with(self, rhs: FpPoly, op: impl Fn(u32, u32) -> u32) -> FpPoly {
        let m = self.same(&rhs);
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let get = |v: &Vec<u32>, i: usize| v.get(i).copied().unwrap_or(0);
        let mut out = FpPoly {
            coeffs: (0..len)
                .map(|i| op(get(&self.coeffs, i), get(&rhs.coeffs, i)))
                .collect(),
            modulus: m,
        };
        out.trim();
        out
    }
}

impl Add for FpPoly {
    type Output = FpPoly;
    fn add(self, rhs: FpPoly) -> FpPoly {
        let m = self.modulus;
        self.zip_with(rhs, |a, b| m.add(a, b))
    }
}

impl Sub for FpPoly {
    type Output = FpPoly;
    fn sub(self, rhs: FpPoly) -> FpPoly {
        let m = self.modulus;
        self.zip_with(rhs, |a, b| m.sub(a, b))
    }
}

impl Mul for FpPoly {
    type Output = FpPoly;
    fn mul(self, rhs: FpPoly) -> FpPoly {
        let m = self.same(&rhs);
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return FpPoly {
                coeffs: Vec::new(),
                modulus: m,
            };
        }
        let mut out = vec![0u32; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = m.add(out[i + j], m.mul(a, b));
            }
        }
        let mut out = FpPoly {
            coeffs: out,
            modulus: m,
        };
        out.trim();
        out
    }
}

impl Neg for FpPoly {
    type Output = FpPoly;
    fn neg(mut self) -> FpPoly {
        let m = self.modulus;
        for c in &mut self.coeffs {
            *c = m.sub(0, *c);
        }
        self
    }
}

impl fmt::Display for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "(0)");
        }
        write!(f, "(")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl Domain for FpPoly {
    type Ctx = Modulus;

    fn ctx(&self) -> Modulus {
        self.modulus
    }

    fn zero_in(ctx: &Modulus) -> Self {
        FpPoly::new(Vec::new(), *ctx)
    }

    fn one_in(ctx: &Modulus) -> Self {
        FpPoly::constant(1, *ctx)
    }

    fn from_i64(ctx: &Modulus, v: i64) -> Self {
        FpPoly::new(vec![ctx.reduce_i64(v) as u64], *ctx)
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn descriptor(ctx: &Modulus) -> DomainDescriptor {
        DomainDescriptor::GfpPoly(*ctx)
    }

    /// Units of `GF(p)[y]` are the nonzero constants.
    fn inv(&self) -> Option<Self> {
        if self.coeffs.len() != 1 {
            return None;
        }
        self.modulus
            .inv(self.coeffs[0])
            .map(|c| FpPoly::constant(c as u64, self.modulus))
    }

    fn parse_in(ctx: &Modulus, text: &str) -> Result<Self> {
        let text = text.trim();
        let inner = match text.strip_prefix('(').and_then(|t| t.strip_suffix(')')) {
            Some(inner) => inner,
            None => text,
        };
        let coeffs = inner
            .split(',')
            .map(|c| {
                c.trim()
                    .parse::<i64>()
                    .map(|v| ctx.reduce_i64(v) as u64)
                    .map_err(|_| Error::Parse(format!("`{text}` is not a GF({ctx})[y] element")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FpPoly::new(coeffs, *ctx))
    }

    fn to_json(&self) -> serde_json::Value {
        serde_json::Value::from(self.coeffs.clone())
    }

    fn from_json(ctx: &Modulus, value: &serde_json::Value) -> Result<Self> {
        let err = || Error::Parse(format!("{value} is not a GF({ctx})[y] element"));
        let items = value.as_array().ok_or_else(err)?;
        let coeffs = items
            .iter()
            .map(|c| c.as_i64().map(|v| ctx.reduce_i64(v) as u64).ok_or_else(err))
            .collect::<Result<Vec<_>>>()?;
        Ok(FpPoly::new(coeffs, *ctx))
    }
}
