//! Perfect linear-complexity profiles and the binary stability criterion.
//!
//! A sequence has a perfect profile when `LC_j = floor((j + 1) / 2)` for
//! every prefix. Equivalently every odd-index discrepancy is nonzero, or the
//! exponent alternates `0, 1, 0, 1, ...`. Over `GF(2)` this is also
//! equivalent to `s_1 = 1` and `s_(j+1) = s_j + s_(j/2)` for even `j`.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::lfsr::{discrepancy, MrState};
use crate::poly::{PairedPoly, Poly};
use crate::ring::{Domain, Field, Gf2};
use crate::sequence::Sequence;

#[derive(Debug, Clone, PartialEq)]
pub struct PlcpReport<T: Domain> {
    pub is_plcp: bool,
    /// `LC_1, ..., LC_n`.
    pub profile: Vec<usize>,
    /// `Delta_1, Delta_3, ...`.
    pub odd_discrepancies: Vec<T>,
    /// `e_1, ..., e_n`.
    pub exponent_trace: Vec<i64>,
    /// The profile, discrepancy and exponent criteria gave the same answer.
    pub criteria_agree: bool,
}

pub fn is_plcp<T: Domain>(s: &Sequence<T>) -> Result<PlcpReport<T>> {
    if s.is_empty() {
        return Err(Error::EmptySequence);
    }
    let mut st = MrState::new(s.ctx().clone());
    let mut exponent_trace = Vec::with_capacity(s.len());
    for t in s.terms() {
        st.step(t.clone())?;
        exponent_trace.push(st.e());
    }
    let profile = st.lc_profile();
    let odd_discrepancies: Vec<T> = st
        .step_log()
        .iter()
        .step_by(2)
        .map(|r| r.delta.clone())
        .collect();
    let by_profile = profile.iter().enumerate().all(|(i, &lc)| lc == (i + 2) / 2);
    let by_delta = odd_discrepancies.iter().all(|d| !d.is_zero());
    let by_exponent = exponent_trace
        .iter()
        .enumerate()
        .all(|(i, &e)| e == if (i + 1) % 2 == 0 { 1 } else { 0 });
    Ok(PlcpReport {
        is_plcp: by_profile,
        criteria_agree: by_profile == by_delta && by_delta == by_exponent,
        profile,
        odd_discrepancies,
        exponent_trace,
    })
}

/// `(q - 1)^ceil(n/2) * q^floor(n/2)`: the number of length-`n` sequences
/// over `GF(q)` with a perfect profile.
pub fn count_plcp(q: u64, n: u32) -> Result<BigUint> {
    if q < 2 || n < 1 {
        return Err(Error::Precondition("count needs q >= 2 and n >= 1".into()));
    }
    Ok(BigUint::from(q - 1).pow(n.div_ceil(2)) * BigUint::from(q).pow(n / 2))
}

/// `s_1 = 1` and `s_(j+1) = s_j + s_(j/2)` for every even `j` with
/// `j + 1 <= n`. Only defined over `GF(2)`.
pub fn is_stable<T: Domain>(s: &Sequence<T>) -> Result<bool> {
    let desc = T::descriptor(s.ctx());
    if !desc.is_binary_field() {
        return Err(Error::Precondition(format!(
            "stability is defined over gf2, not {desc}"
        )));
    }
    if s.is_empty() || !s.get(1).is_one() {
        return Ok(false);
    }
    Ok((2..s.len())
        .step_by(2)
        .all(|j| s.get(j as i64 + 1) == s.get(j as i64) + s.get(j as i64 / 2)))
}

/// The two- and three-step recursion valid on perfect-profile sequences.
///
/// `mu^(1) = (x - Delta_1 eps, Delta_1)`; for even `j` the update is
/// `Delta_(j-1) mu^(j-1) - Delta_j mu^(j-2)` (skipped when `Delta_j = 0`),
/// for odd `j >= 3` it is `Delta_(j-2) x mu^(j-1) - Delta_j mu^(j-3)`.
pub fn plcp_mr_specialized<T: Domain>(s: &Sequence<T>, epsilon: T) -> Result<PairedPoly<T>> {
    if !is_plcp(s)?.is_plcp {
        return Err(Error::Precondition(
            "sequence does not have a perfect profile".into(),
        ));
    }
    let ctx = s.ctx().clone();
    let x = Poly::x(ctx.clone());
    let mut mus: Vec<PairedPoly<T>> = vec![PairedPoly::new(
        Poly::one(ctx.clone()),
        Poly::zero(ctx.clone()),
    )];
    let mut deltas: Vec<T> = vec![T::zero_in(&ctx)];
    for j in 1..=s.len() {
        let delta = discrepancy(&mus[j - 1].f, &s.prefix(j))?;
        let next = if j == 1 {
            PairedPoly::new(
                &x - &Poly::constant(delta.clone() * epsilon.clone()),
                Poly::constant(delta.clone()),
            )
        } else if j % 2 == 0 {
            if delta.is_zero() {
                mus[j - 1].clone()
            } else {
                &mus[j - 1].scale(&deltas[j - 1]) - &mus[j - 2].scale(&delta)
            }
        } else {
            &mus[j - 1].shift(1).scale(&deltas[j - 2]) - &mus[j - 3].scale(&delta)
        };
        mus.push(next);
        deltas.push(delta);
    }
    Ok(mus.pop().expect("n >= 1"))
}

/// Builds the unique sequence whose engine discrepancies (with `eps = 0`)
/// are `deltas`. Nonzero odd entries give a perfect profile.
pub fn sequence_with_discrepancies<T: Field>(ctx: T::Ctx, deltas: &[T]) -> Result<Sequence<T>> {
    let mut st = MrState::<T>::new(ctx.clone());
    let mut terms: Vec<T> = Vec::with_capacity(deltas.len());
    for target in deltas {
        let mu = &st.mu().f;
        let d = mu.degree().expect("minimal polynomials are nonzero");
        let j = terms.len() + 1;
        let partial = (0..d).fold(T::zero_in(&ctx), |acc, k| {
            acc + mu.coeff(k) * terms[j - d + k - 1].clone()
        });
        let lead = mu.lead().expect("nonzero").clone();
        let term = (target.clone() - partial) * lead.inverse();
        st.step(term.clone())?;
        debug_assert!(st.step_log()[j - 1].delta == *target);
        terms.push(term);
    }
    Sequence::new(ctx, terms)
}

/// Outcome of an exhaustive scan over `GF(2)^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StableScan {
    pub n: usize,
    pub plcp_count: u64,
    pub stable_count: u64,
    /// `is_plcp == is_stable` for every sequence.
    pub equivalence_holds: bool,
    /// `sigma_0 = 1` and `sigma_2 = 0` along every perfect-profile prefix.
    pub sigma_holds: bool,
    /// For odd `n`: stable iff every even-index coefficient of `t` vanishes.
    pub t_series_holds: bool,
    pub count_matches: bool,
}

impl StableScan {
    pub fn holds(&self) -> bool {
        self.equivalence_holds && self.sigma_holds && self.t_series_holds && self.count_matches
    }
}

/// `nu^2 + (x + 1) nu mu + mu^2` for `(mu, nu)`.
fn sigma(m: &PairedPoly<Gf2>) -> Poly<Gf2> {
    let x1 = Poly::from_i64s((), &[1, 1]);
    let cross = Poly::mul(&x1, &Poly::mul(&m.f2, &m.f));
    &(&Poly::mul(&m.f2, &m.f2) + &cross) + &Poly::mul(&m.f, &m.f)
}

/// `t_0 = s_1 + 1` and `t_j = s_j + s_(j+1) + s_(j/2)` for even `j < n`.
fn t_even_vanishes(s: &Sequence<Gf2>) -> bool {
    let n = s.len() as i64;
    (s.get(1) + Gf2::ONE).is_zero()
        && (2..n)
            .step_by(2)
            .all(|j| (s.get(j) + s.get(j + 1) + s.get(j / 2)).is_zero())
}

/// Checks that perfect-profile and stable sequences coincide on all of
/// `GF(2)^n`, `1 <= n <= 18`.
pub fn check_plcp_stable_equivalence(n: usize) -> Result<StableScan> {
    if !(1..=18).contains(&n) {
        return Err(Error::DomainTooLarge(format!(
            "exhaustive scan needs 1 <= n <= 18, got {n}"
        )));
    }
    let mut scan = StableScan {
        n,
        plcp_count: 0,
        stable_count: 0,
        equivalence_holds: true,
        sigma_holds: true,
        t_series_holds: true,
        count_matches: false,
    };
    for bits in 0u32..1 << n {
        let terms = (0..n).map(|i| Gf2::from(bits >> i & 1 == 1)).collect();
        let s = Sequence::new((), terms)?;
        let mut st = MrState::<Gf2>::new(());
        let mut plcp = true;
        let mut sigma_ok = sigma(st.mu()).coeff(0).is_one();
        for (i, t) in s.terms().iter().enumerate() {
            st.step(*t)?;
            let j = i + 1;
            plcp &= st.lc() == j.div_ceil(2);
            if plcp {
                let sg = sigma(st.mu());
                sigma_ok &= sg.coeff(0).is_one() && sg.coeff(2).is_zero();
            }
        }
        let stable = is_stable(&s)?;
        scan.plcp_count += plcp as u64;
        scan.stable_count += stable as u64;
        scan.equivalence_holds &= plcp == stable;
        if plcp {
            scan.sigma_holds &= sigma_ok;
        }
        if n % 2 == 1 {
            scan.t_series_holds &= stable == t_even_vanishes(&s);
        }
    }
    scan.count_matches = BigUint::from(scan.plcp_count) == count_plcp(2, n as u32)?;
    Ok(scan)
}
