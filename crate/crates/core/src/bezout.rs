//! Bezout coefficients for a polynomial pair through the realisation engine.
//!
//! For `u` monic of degree `d` and `deg u2 < d`, the first `2d` terms of
//! `u2 / u` determine the rational function, so a minimal realisation `mu`
//! of those terms satisfies `(u, u2) = w * (mu, mu2)` with `w = gcd(u, u2)`
//! up to a unit. The coefficient pair `(-mu2', mu')` then gives
//! `f . (u, u2) = nabla * w` without any division.

use crate::error::{Error, Result};
use crate::lfsr::{MrState, Realisation};
use crate::poly::{series_prefix, PairedPoly, Poly};
use crate::ring::Domain;
use crate::sequence::Sequence;

/// Maps coefficients for `(u, u2')` back to coefficients for `(u, u2)` after
/// the substitution `u2' = l2 * u - l * u2`.
#[derive(Debug, Clone, PartialEq)]
pub struct EqualDegreeAdapter<T: Domain> {
    pub l: T,
    pub l2: T,
}

impl<T: Domain> EqualDegreeAdapter<T> {
    /// `(f, f2) -> (f + l2 f2, -l f2)`.
    pub fn apply(&self, f: &PairedPoly<T>) -> PairedPoly<T> {
        PairedPoly::new(&f.f + &f.f2.scale(&self.l2), -&f.f2.scale(&self.l))
    }
}

/// Replaces `u2` (with `deg u2 = deg u`, `u` monic) by `l2 * u - l * u2`,
/// which has lower degree.
pub fn reduce_equal_degree<T: Domain>(
    u: &Poly<T>,
    u2: &Poly<T>,
) -> Result<(Poly<T>, EqualDegreeAdapter<T>)> {
    if !u.is_monic() {
        return Err(Error::NotMonic);
    }
    if u.degree() != u2.degree() {
        return Err(Error::Precondition("deg(u2) must equal deg(u)".into()));
    }
    let l = u.lead().expect("monic").clone();
    let l2 = u2.lead().expect("same degree as u").clone();
    let reduced = &u.scale(&l2) - &u2.scale(&l);
    Ok((reduced, EqualDegreeAdapter { l, l2 }))
}

#[derive(Debug, Clone, PartialEq)]
pub struct BezoutPair<T: Domain> {
    /// Coefficients with `f.f * u + f.f2 * u2 = g`.
    pub f: PairedPoly<T>,
    pub nabla: T,
    /// `nabla * gcd(u, u2)`, up to a unit of the domain.
    pub g: Poly<T>,
    /// Scalar multiplications spent inside the engine.
    pub multiplications: u64,
}

impl<T: Domain> BezoutPair<T> {
    /// Re-expands `f.f * u + f.f2 * u2` and compares it with `g`.
    pub fn verify(&self, u: &Poly<T>, u2: &Poly<T>) -> bool {
        PairedPoly::new(u.clone(), u2.clone()).dot(&self.f) == self.g
    }
}

/// Bezout coefficients for `(u, u2)` with `u` monic, `d = deg u >= 1` and
/// `deg u2 <= d`. `u2 = 0` yields `f = (1, 0)`, `nabla = 1`, `g = u`.
pub fn bezout_pair<T: Domain>(u: &Poly<T>, u2: &Poly<T>) -> Result<BezoutPair<T>> {
    if !u.is_monic() {
        return Err(Error::NotMonic);
    }
    let d = u
        .degree()
        .filter(|&d| d >= 1)
        .ok_or_else(|| Error::DegreeViolation("deg(u) must be at least 1".into()))?;
    if u.ctx() != u2.ctx() {
        return Err(Error::DescriptorMismatch(
            T::descriptor(u.ctx()).to_string(),
            T::descriptor(u2.ctx()).to_string(),
        ));
    }
    let ctx = u.ctx().clone();
    if u2.is_zero() {
        return Ok(BezoutPair {
            f: PairedPoly::new(Poly::one(ctx.clone()), Poly::zero(ctx.clone())),
            nabla: T::one_in(&ctx),
            g: u.clone(),
            multiplications: 0,
        });
    }
    match u2.degree() {
        Some(d2) if d2 > d => Err(Error::DegreeViolation(
            "deg(u2) must not exceed deg(u)".into(),
        )),
        Some(d2) if d2 == d => {
            let (reduced, adapter) = reduce_equal_degree(u, u2)?;
            let inner = bezout_pair(u, &reduced)?;
            let f = adapter.apply(&inner.f);
            let g = PairedPoly::new(u.clone(), u2.clone()).dot(&f);
            Ok(BezoutPair { f, g, ..inner })
        }
        _ => {
            let s = series_prefix(u2, u, 2 * d)?;
            let st = MrState::run(&s, T::zero_in(&ctx))?;
            let f = st.mu_prime().tilde();
            let g = PairedPoly::new(u.clone(), u2.clone()).dot(&f);
            Ok(BezoutPair {
                f,
                nabla: st.nabla().clone(),
                g,
                multiplications: st.multiplications(),
            })
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LrsIdentity<T: Domain> {
    /// `f . mu = nabla`.
    pub f: PairedPoly<T>,
    pub nabla: T,
    pub mu: PairedPoly<T>,
    /// The prefix covers at least `2 deg(mu)` terms and `mu` did not change
    /// during the last `deg(mu)` of them.
    pub stable: bool,
}

/// Identity `f . mu = nabla` for a prefix of a linear recurring sequence.
///
/// The identity holds for any prefix; `stable` reports whether the prefix is
/// long enough for `mu` to be the recurrence of the whole sequence.
pub fn lrs_identity<T: Domain>(s: &Sequence<T>) -> Result<LrsIdentity<T>> {
    if s.is_empty() {
        return Err(Error::EmptySequence);
    }
    let st = MrState::run(s, T::zero_in(s.ctx()))?;
    let Realisation {
        mu,
        bez_numu,
        nabla,
        ..
    } = st.realisation();
    let d = st.lc();
    let log = st.step_log();
    let stable = s.len() >= 2 * d && log[log.len() - d..].iter().all(|r| r.delta.is_zero());
    Ok(LrsIdentity {
        f: bez_numu,
        nabla,
        mu,
        stable,
    })
}
