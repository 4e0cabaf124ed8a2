//! Naive reference implementations for cross-checking the engine.
//!
//! Nothing here calls into the engine or shares its helpers: annihilation is
//! tested straight from the recurrence definition and polynomial division
//! uses field inverses. Production code never calls these functions.

use crate::error::{Error, Result};
use crate::poly::{PairedPoly, Poly};
use crate::ring::{Domain, Field, FiniteField};
use crate::sequence::Sequence;

const MAX_LEN_GF2: usize = 12;
const MAX_LEN_GF3: usize = 8;

fn check_size<T: FiniteField>(ctx: &T::Ctx, n: usize) -> Result<Vec<T>> {
    let elements = T::elements(ctx);
    let limit = match elements.len() {
        2 => MAX_LEN_GF2,
        3 => MAX_LEN_GF3,
        q => {
            return Err(Error::DomainTooLarge(format!(
                "field of order {q} (at most 3 supported)"
            )))
        }
    };
    if n > limit {
        return Err(Error::DomainTooLarge(format!(
            "length {n} over a field of order {} (at most {limit})",
            elements.len()
        )));
    }
    Ok(elements)
}

/// `f_0 s_(j-d) + ... + f_d s_j = 0` for `d + 1 <= j <= n`.
fn annihilates<T: Domain>(f: &[T], s: &[T]) -> bool {
    let d = f.len() - 1;
    (d + 1..=s.len()).all(|j| {
        let mut acc = T::zero_in(&s[0].ctx());
        for (k, c) in f.iter().enumerate() {
            acc = acc + c.clone() * s[j - d + k - 1].clone();
        }
        acc.is_zero()
    })
}

/// Every coefficient vector of length `d + 1` with a nonzero top entry and,
/// when `nonzero_constant` is set, a nonzero bottom entry.
fn candidates<T: Domain>(elements: &[T], d: usize, nonzero_constant: bool) -> Vec<Vec<T>> {
    let q = elements.len();
    let total = q.pow(d as u32 + 1);
    (0..total)
        .map(|mut idx| {
            (0..=d)
                .map(|_| {
                    let c = elements[idx % q].clone();
                    idx /= q;
                    c
                })
                .collect::<Vec<T>>()
        })
        .filter(|f| !f[d].is_zero() && (!nonzero_constant || !f[0].is_zero()))
        .collect()
}

/// Least degree of a nonzero annihilator of `s` (with `f_0 != 0` when
/// `nonzero_constant` is set), together with every annihilator of that
/// degree. Scalar multiples are listed separately.
pub fn brute_min_annihilator<T: FiniteField>(
    s: &Sequence<T>,
    nonzero_constant: bool,
) -> Result<(usize, Vec<Poly<T>>)> {
    let elements = check_size::<T>(s.ctx(), s.len())?;
    for d in 0..=s.len() + 1 {
        let witnesses: Vec<Poly<T>> = candidates(&elements, d, nonzero_constant)
            .into_iter()
            .filter(|f| s.is_empty() || annihilates(f, s.terms()))
            .map(|f| Poly::from_coeffs(s.ctx().clone(), f))
            .collect();
        if !witnesses.is_empty() {
            return Ok((d, witnesses));
        }
    }
    unreachable!("x^(n+1) + 1 annihilates every sequence of length n")
}

/// `sum_{j >= 0} (f * s(1/x))_j x^j`, with `(f * s)_j = sum_i f_i s_(i-j)`.
pub fn realisation_part<T: Domain>(f: &Poly<T>, s: &Sequence<T>) -> Poly<T> {
    let n = s.len();
    let coeffs = (0..f.coeffs().len())
        .map(|j| {
            let mut acc = T::zero_in(f.ctx());
            for (i, c) in f.coeffs().iter().enumerate() {
                if i > j && i - j <= n {
                    acc = acc + c.clone() * s.terms()[i - j - 1].clone();
                }
            }
            acc
        })
        .collect();
    Poly::from_coeffs(f.ctx().clone(), coeffs)
}

/// All minimal realisations `(f, f2)` by exhaustive search.
pub fn brute_mr_set<T: FiniteField>(
    s: &Sequence<T>,
    nonzero_constant: bool,
) -> Result<Vec<PairedPoly<T>>> {
    let (_, witnesses) = brute_min_annihilator(s, nonzero_constant)?;
    Ok(witnesses
        .into_iter()
        .map(|f| {
            let f2 = realisation_part(&f, s);
            PairedPoly::new(f, f2)
        })
        .collect())
}

fn monic_scale<T: Field>(f: &Poly<T>) -> T {
    f.lead().expect("nonzero").inverse()
}

/// Quotient and remainder over a field.
fn divide<T: Field>(f: &Poly<T>, g: &Poly<T>) -> (Poly<T>, Poly<T>) {
    let dg = g.degree().expect("nonzero divisor");
    let inv = monic_scale(g);
    let mut q = vec![T::zero_in(f.ctx()); f.coeffs().len().saturating_sub(dg)];
    let mut r: Vec<T> = f.coeffs().to_vec();
    while r.len() > dg && !r.is_empty() {
        let top = r.len() - 1;
        let c = r[top].clone() * inv.clone();
        let k = top - dg;
        for (i, b) in g.coeffs().iter().enumerate() {
            r[k + i] = r[k + i].clone() - c.clone() * b.clone();
        }
        q[k] = c;
        r.pop();
        while r.last().is_some_and(|x| x.is_zero()) {
            r.pop();
        }
    }
    (
        Poly::from_coeffs(f.ctx().clone(), q),
        Poly::from_coeffs(f.ctx().clone(), r),
    )
}

fn combine<T: Field>(a: &Poly<T>, q: &Poly<T>, b: &Poly<T>) -> Poly<T> {
    a - &Poly::mul(q, b)
}

/// Extended Euclid over a field: `(g, a, a2)` with `a u + a2 u2 = g` and `g`
/// the monic gcd. `u2 = 0` or `u2 = u` give `(monic u, lead(u)^-1, 0)`.
pub fn ext_euclid<T: Field>(u: &Poly<T>, u2: &Poly<T>) -> Result<(Poly<T>, Poly<T>, Poly<T>)> {
    let ctx = u.ctx().clone();
    let zero = Poly::zero(ctx.clone());
    if u.is_zero() && u2.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if u2.is_zero() || u == u2 {
        let c = monic_scale(u);
        return Ok((u.scale(&c), Poly::constant(c), zero));
    }
    if u.is_zero() {
        let c = monic_scale(u2);
        return Ok((u2.scale(&c), zero, Poly::constant(c)));
    }
    let (mut r0, mut r1) = (u.clone(), u2.clone());
    let (mut a0, mut a1) = (Poly::one(ctx.clone()), zero.clone());
    let (mut b0, mut b1) = (zero, Poly::one(ctx));
    while !r1.is_zero() {
        let (q, r) = divide(&r0, &r1);
        let a = combine(&a0, &q, &a1);
        let b = combine(&b0, &q, &b1);
        r0 = std::mem::replace(&mut r1, r);
        a0 = std::mem::replace(&mut a1, a);
        b0 = std::mem::replace(&mut b1, b);
    }
    let c = monic_scale(&r0);
    Ok((r0.scale(&c), a0.scale(&c), b0.scale(&c)))
}
