//! Dense univariate polynomials over a [`Domain`], paired polynomials, and
//! the two Laurent functionals the sequence algorithms need (polynomial part
//! of `f * s(1/x)` and the series expansion of `u2 / u`).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::ring::{split_top_level, Domain};
use crate::sequence::Sequence;

/// Coefficients `c_0, ..., c_d` ascending in `x`. Always canonical: the
/// coefficient list is empty (zero polynomial) or ends in a nonzero value.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly<T: Domain> {
    coeffs: Vec<T>,
    ctx: T::Ctx,
}

impl<T: Domain> Poly<T> {
    pub fn zero(ctx: T::Ctx) -> Self {
        Poly {
            coeffs: Vec::new(),
            ctx,
        }
    }

    pub fn one(ctx: T::Ctx) -> Self {
        Poly::constant(T::one_in(&ctx))
    }

    pub fn x(ctx: T::Ctx) -> Self {
        Poly::monomial(T::one_in(&ctx), 1)
    }

    pub fn constant(c: T) -> Self {
        Poly::monomial(c, 0)
    }

    /// `c * x^k`.
    pub fn monomial(c: T, k: usize) -> Self {
        let ctx = c.ctx();
        if c.is_zero() {
            return Poly::zero(ctx);
        }
        let mut coeffs = vec![T::zero_in(&ctx); k];
        coeffs.push(c);
        Poly { coeffs, ctx }
    }

    pub fn from_coeffs(ctx: T::Ctx, coeffs: Vec<T>) -> Self {
        let mut p = Poly { coeffs, ctx };
        p.trim();
        p
    }

    pub fn from_i64s(ctx: T::Ctx, coeffs: &[i64]) -> Self {
        let coeffs = coeffs.iter().map(|&c| T::from_i64(&ctx, c)).collect();
        Poly::from_coeffs(ctx, coeffs)
    }

    /// Comma-separated ascending coefficients: `1,0,0,1` is `x^3 + 1`.
    pub fn parse(ctx: T::Ctx, text: &str) -> Result<Self> {
        if text.trim().is_empty() {
            return Ok(Poly::zero(ctx));
        }
        let coeffs = split_top_level(text)?
            .into_iter()
            .map(|t| T::parse_in(&ctx, t))
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::from_coeffs(ctx, coeffs))
    }

    /// Inverse of [`Poly::parse`]; the zero polynomial is `0`.
    pub fn to_text(&self) -> String {
        if self.coeffs.is_empty() {
            return T::zero_in(&self.ctx).to_string();
        }
        self.coeffs
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(self.coeffs.iter().map(|c| c.to_json()).collect())
    }

    pub fn from_json(ctx: T::Ctx, value: &serde_json::Value) -> Result<Self> {
        let items = value
            .as_array()
            .ok_or_else(|| Error::Parse(format!("{value} is not a coefficient list")))?;
        let coeffs = items
            .iter()
            .map(|c| T::from_json(&ctx, c))
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::from_coeffs(ctx, coeffs))
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn ctx(&self) -> &T::Ctx {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree as a signed integer with `-1` for zero; convenient in degree
    /// arithmetic.
    pub fn deg_i64(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| T::zero_in(&self.ctx))
    }

    pub fn lead(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> T {
        self.coeff(0)
    }

    pub fn is_monic(&self) -> bool {
        self.lead().is_some_and(|c| c.is_one())
    }

    /// Largest `k` with `x^k | f`.
    pub fn x_valuation(&self) -> Result<usize> {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .ok_or(Error::ZeroPolynomial)
    }

    /// `x^deg(f) f(1/x)`; the reciprocal of zero is zero.
    pub fn reciprocal(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Poly::from_coeffs(self.ctx.clone(), coeffs)
    }

    /// `x^k f`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![T::zero_in(&self.ctx); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly {
            coeffs,
            ctx: self.ctx.clone(),
        }
    }

    /// `f / x^k`, dropping the low coefficients.
    pub fn unshift(&self, k: usize) -> Self {
        Poly::from_coeffs(
            self.ctx.clone(),
            self.coeffs.iter().skip(k).cloned().collect(),
        )
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Poly::zero(self.ctx.clone());
        }
        Poly::from_coeffs(
            self.ctx.clone(),
            self.coeffs.iter().map(|a| c.clone() * a.clone()).collect(),
        )
    }

    pub(crate) fn scale_in_place(&mut self, c: &T) {
        if c.is_one() {
            return;
        }
        for a in &mut self.coeffs {
            *a = c.clone() * a.clone();
        }
        self.trim();
    }

    /// `self -= c * x^k * g`.
    pub(crate) fn sub_scaled_shifted(&mut self, c: &T, k: usize, g: &Poly<T>) {
        if c.is_zero() || g.is_zero() {
            return;
        }
        let need = g.coeffs.len() + k;
        if self.coeffs.len() < need {
            self.coeffs.resize(need, T::zero_in(&self.ctx));
        }
        for (a, b) in self.coeffs[k..need].iter_mut().zip(&g.coeffs) {
            *a = a.clone() - c.clone() * b.clone();
        }
        self.trim();
    }

    /// `self += c * x^k * g`.
    pub(crate) fn add_scaled_shifted(&mut self, c: &T, k: usize, g: &Poly<T>) {
        self.sub_scaled_shifted(&-c.clone(), k, g);
    }

    /// `a x^e f + b x^e2 g`.
    pub fn add_scaled(a: &T, e: usize, f: &Poly<T>, b: &T, e2: usize, g: &Poly<T>) -> Result<Self> {
        if f.ctx != g.ctx {
            return Err(Error::DescriptorMismatch(
                T::descriptor(&f.ctx).to_string(),
                T::descriptor(&g.ctx).to_string(),
            ));
        }
        let mut out = f.scale(a).shift(e);
        out.add_scaled_shifted(b, e2, g);
        Ok(out)
    }

    /// Schoolbook product.
    pub fn mul(&self, g: &Poly<T>) -> Self {
        assert_eq!(self.ctx, g.ctx, "polynomial descriptor mismatch");
        if self.is_zero() || g.is_zero() {
            return Poly::zero(self.ctx.clone());
        }
        let mut out = vec![T::zero_in(&self.ctx); self.coeffs.len() + g.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (o, b) in out[i..].iter_mut().zip(&g.coeffs) {
                *o = o.clone() + a.clone() * b.clone();
            }
        }
        Poly::from_coeffs(self.ctx.clone(), out)
    }

    /// Checked product, rejecting operands from different domain instances.
    pub fn try_mul(&self, g: &Poly<T>) -> Result<Self> {
        if self.ctx != g.ctx {
            return Err(Error::DescriptorMismatch(
                T::descriptor(&self.ctx).to_string(),
                T::descriptor(&g.ctx).to_string(),
            ));
        }
        Ok(self.mul(g))
    }

    /// Pseudo-division of `self` by `g`: returns `(q, r, scale)` with
    /// `scale * self = q * g + r`, `r = 0` or `deg r < deg g`, and
    /// `scale = lead(g)^(deg self - deg g + 1)`. When `deg self < deg g` the
    /// result is `(0, self, 1)`.
    pub fn pseudo_divide(&self, g: &Poly<T>) -> Result<(Poly<T>, Poly<T>, T)> {
        let dg = g.degree().ok_or(Error::ZeroPolynomial)?;
        let one = T::one_in(&self.ctx);
        let df = match self.degree() {
            Some(df) if df >= dg => df,
            _ => return Ok((Poly::zero(self.ctx.clone()), self.clone(), one)),
        };
        let lead = g.lead().expect("nonzero divisor").clone();
        let m = df - dg;
        let mut q = Poly::zero(self.ctx.clone());
        let mut r = self.clone();
        let mut scale = one;
        for k in (0..=m).rev() {
            let c = r.coeff(dg + k);
            q.scale_in_place(&lead);
            q.add_scaled_shifted(&c, k, &Poly::one(self.ctx.clone()));
            r.scale_in_place(&lead);
            r.sub_scaled_shifted(&c, k, g);
            scale = scale * lead.clone();
        }
        Ok((q, r, scale))
    }

    /// Evaluates the polynomial at a domain element (Horner).
    pub fn eval(&self, at: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero_in(&self.ctx), |acc, c| acc * at.clone() + c.clone())
    }
}

/// The polynomial part of `f * s(1/x)` where `s(1/x) = s_1 x^-1 + ... + s_n x^-n`.
///
/// This is the second component `f_2` of a realisation pair. Its degree is
/// below `deg f`, so `f = 0` or a constant `f` give zero.
pub fn poly_part<T: Domain>(f: &Poly<T>, s: &Sequence<T>) -> Poly<T> {
    let d = f.coeffs.len();
    let coeffs = (0..d)
        .map(|j| {
            // (f * s)_j = sum_{k > j} f_k s_{k - j}
            ((j + 1)..d).fold(T::zero_in(&f.ctx), |acc, k| {
                acc + f.coeffs[k].clone() * s.get((k - j) as i64)
            })
        })
        .collect();
    Poly::from_coeffs(f.ctx.clone(), coeffs)
}

/// First `m` terms of the expansion `u2 / u = sum_{j >= 1} s_j x^-j`.
///
/// Requires `u` monic with `deg u = d >= 1` and `deg u2 < d`; no division is
/// performed.
pub fn series_prefix<T: Domain>(u2: &Poly<T>, u: &Poly<T>, m: usize) -> Result<Sequence<T>> {
    let d = u
        .degree()
        .filter(|&d| d >= 1)
        .ok_or_else(|| Error::DegreeViolation("deg(u) must be at least 1".into()))?;
    if !u.is_monic() {
        return Err(Error::NotMonic);
    }
    if u2.degree().is_some_and(|d2| d2 >= d) {
        return Err(Error::DegreeViolation(
            "deg(u2) must be below deg(u)".into(),
        ));
    }
    let ctx = u.ctx.clone();
    let mut terms: Vec<T> = Vec::with_capacity(m);
    for j in 1..=m {
        let mut sj = if j <= d {
            u2.coeff(d - j)
        } else {
            T::zero_in(&ctx)
        };
        for i in 1..j.min(d + 1) {
            sj = sj - u.coeffs[d - i].clone() * terms[j - i - 1].clone();
        }
        terms.push(sj);
    }
    Ok(Sequence::from_parts(ctx, terms))
}

fn write_term<T: Domain>(f: &mut fmt::Formatter<'_>, first: bool, c: &T, k: usize) -> fmt::Result {
    let text = c.to_string();
    let (neg, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest.to_string()),
        None => (false, text),
    };
    if first {
        if neg {
            write!(f, "-")?;
        }
    } else {
        write!(f, "{}", if neg { " - " } else { " + " })?;
    }
    let unit = body == "1" || body == "(1)";
    match (k, unit) {
        (0, _) => write!(f, "{body}"),
        (1, true) => write!(f, "x"),
        (1, false) => write!(f, "{body}*x"),
        (_, true) => write!(f, "x^{k}"),
        (_, false) => write!(f, "{body}*x^{k}"),
    }
}

impl<T: Domain> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            write_term(f, first, c, k)?;
            first = false;
        }
        Ok(())
    }
}

impl<T: Domain> Add for &Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        let mut out = self.clone();
        out.add_scaled_shifted(&T::one_in(&self.ctx), 0, rhs);
        out
    }
}

impl<T: Domain> Sub for &Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        let mut out = self.clone();
        out.sub_scaled_shifted(&T::one_in(&self.ctx), 0, rhs);
        out
    }
}

impl<T: Domain> Mul for &Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        Poly::mul(self, rhs)
    }
}

impl<T: Domain> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
            ctx: self.ctx.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<T: Domain> $tr for Poly<T> {
            type Output = Poly<T>;
            fn $m(self, rhs: Poly<T>) -> Poly<T> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);

impl<T: Domain> Neg for Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        -&self
    }
}

/// A pair `(f, f2)` of polynomials, acted on componentwise by `D[x]`.
#[derive(Debug, Clone, PartialEq)]
pub struct PairedPoly<T: Domain> {
    pub f: Poly<T>,
    pub f2: Poly<T>,
}

impl<T: Domain> PairedPoly<T> {
    pub fn new(f: Poly<T>, f2: Poly<T>) -> Self {
        assert_eq!(f.ctx, f2.ctx, "paired polynomial descriptor mismatch");
        PairedPoly { f, f2 }
    }

    pub fn zero(ctx: T::Ctx) -> Self {
        PairedPoly::new(Poly::zero(ctx.clone()), Poly::zero(ctx))
    }

    /// `(f, f_2(s))`: the realisation pair of `f` with respect to `s`.
    pub fn realisation_of(f: Poly<T>, s: &Sequence<T>) -> Self {
        let f2 = poly_part(&f, s);
        PairedPoly { f, f2 }
    }

    pub fn ctx(&self) -> &T::Ctx {
        &self.f.ctx
    }

    /// `(-f2, f)`.
    pub fn tilde(&self) -> Self {
        PairedPoly {
            f: -&self.f2,
            f2: self.f.clone(),
        }
    }

    /// `f * g + f2 * g2`.
    pub fn dot(&self, other: &PairedPoly<T>) -> Poly<T> {
        &Poly::mul(&self.f, &other.f) + &Poly::mul(&self.f2, &other.f2)
    }

    pub fn scale(&self, c: &T) -> Self {
        PairedPoly {
            f: self.f.scale(c),
            f2: self.f2.scale(c),
        }
    }

    pub fn shift(&self, k: usize) -> Self {
        PairedPoly {
            f: self.f.shift(k),
            f2: self.f2.shift(k),
        }
    }

    pub fn mul_poly(&self, q: &Poly<T>) -> Self {
        PairedPoly {
            f: q.mul(&self.f),
            f2: q.mul(&self.f2),
        }
    }

    pub(crate) fn scale_in_place(&mut self, c: &T) {
        self.f.scale_in_place(c);
        self.f2.scale_in_place(c);
    }

    pub(crate) fn sub_scaled_shifted(&mut self, c: &T, k: usize, g: &PairedPoly<T>) {
        self.f.sub_scaled_shifted(c, k, &g.f);
        self.f2.sub_scaled_shifted(c, k, &g.f2);
    }

    pub fn to_text(&self) -> String {
        format!("({} | {})", self.f, self.f2)
    }
}

impl<T: Domain> Add for &PairedPoly<T> {
    type Output = PairedPoly<T>;
    fn add(self, rhs: &PairedPoly<T>) -> PairedPoly<T> {
        PairedPoly {
            f: &self.f + &rhs.f,
            f2: &self.f2 + &rhs.f2,
        }
    }
}

impl<T: Domain> Sub for &PairedPoly<T> {
    type Output = PairedPoly<T>;
    fn sub(self, rhs: &PairedPoly<T>) -> PairedPoly<T> {
        PairedPoly {
            f: &self.f - &rhs.f,
            f2: &self.f2 - &rhs.f2,
        }
    }
}

impl<T: Domain> fmt::Display for PairedPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.f, self.f2)
    }
}
