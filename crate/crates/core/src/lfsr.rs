//! The minimal-realisation engine.
//!
//! [`MrState`] is a division-free state machine over any [`Domain`]. After
//! consuming `s_1, ..., s_j` it holds
//!
//! * `mu = (mu, mu2)`: a minimal realisation of `s^(j)`, so `mu` is a
//!   minimal polynomial and `mu2` the polynomial part of `mu * s(1/x)`;
//! * `mu_prime`: the realisation in force just before the last degree jump;
//! * `e = j + 1 - 2 deg(mu)`, the exponent;
//! * `nabla`, a nonzero product of discrepancies;
//! * `bez = (f, f2)` with `f * mu + f2 * mu' = nabla`.
//!
//! The second Bezout identity `-mu2' * mu + mu' * mu2 = nabla` holds for the
//! pair itself; [`Realisation::bez_numu`] is its coefficient pair.

use crate::error::{Error, Result};
use crate::poly::{PairedPoly, Poly};
use crate::ring::{dom_inv, Domain};
use crate::sequence::Sequence;

/// One consumed term: the discrepancy `delta` of step `j`, the exponent
/// `e_before = e_(j-1)` it was compared against, and whether the degree
/// jumped.
#[derive(Debug, Clone, PartialEq)]
pub struct StepRecord<T: Domain> {
    pub delta: T,
    pub e_before: i64,
    pub jumped: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MrState<T: Domain> {
    ctx: T::Ctx,
    terms: Vec<T>,
    mu: PairedPoly<T>,
    mu_prime: PairedPoly<T>,
    e: i64,
    delta_prime: T,
    nabla: T,
    bez: PairedPoly<T>,
    epsilon: T,
    step_log: Vec<StepRecord<T>>,
    mults: u64,
}

/// `mu = (1, 0)`, `mu' = (epsilon, -1)`, `e = 1`, `delta' = nabla = 1`,
/// `bez = (1, 0)`.
pub fn mr_init<T: Domain>(ctx: T::Ctx, epsilon: T) -> Result<MrState<T>> {
    if epsilon.ctx() != ctx {
        return Err(Error::DescriptorMismatch(
            T::descriptor(&ctx).to_string(),
            T::descriptor(&epsilon.ctx()).to_string(),
        ));
    }
    let one = Poly::one(ctx.clone());
    let zero = Poly::zero(ctx.clone());
    Ok(MrState {
        mu: PairedPoly::new(one.clone(), zero.clone()),
        mu_prime: PairedPoly::new(
            Poly::constant(epsilon.clone()),
            Poly::constant(T::from_i64(&ctx, -1)),
        ),
        e: 1,
        delta_prime: T::one_in(&ctx),
        nabla: T::one_in(&ctx),
        bez: PairedPoly::new(one, zero),
        epsilon,
        terms: Vec::new(),
        step_log: Vec::new(),
        mults: 0,
        ctx,
    })
}

/// Consumes one term, returning the advanced state.
pub fn mr_step<T: Domain>(mut st: MrState<T>, s_next: T) -> Result<MrState<T>> {
    st.step(s_next)?;
    Ok(st)
}

impl<T: Domain> MrState<T> {
    pub fn new(ctx: T::Ctx) -> Self {
        let eps = T::zero_in(&ctx);
        mr_init(ctx, eps).expect("zero lives in its own context")
    }

    /// Runs the engine over all of `s`.
    pub fn run(s: &Sequence<T>, epsilon: T) -> Result<Self> {
        let mut st = mr_init(s.ctx().clone(), epsilon)?;
        for t in s.terms() {
            st.step(t.clone())?;
        }
        Ok(st)
    }

    pub fn step(&mut self, s_next: T) -> Result<()> {
        if s_next.ctx() != self.ctx {
            return Err(Error::DescriptorMismatch(
                T::descriptor(&self.ctx).to_string(),
                T::descriptor(&s_next.ctx()).to_string(),
            ));
        }
        self.terms.push(s_next);
        let delta = self.current_discrepancy();
        let e = self.e;
        let jumped = !delta.is_zero() && e > 0;
        if !delta.is_zero() {
            self.mults += (self.mu.f.coeffs().len()
                + self.mu.f2.coeffs().len()
                + self.mu_prime.f.coeffs().len()
                + self.mu_prime.f2.coeffs().len()) as u64
                + 1;
            if e <= 0 {
                let k = (-e) as usize;
                // mu := delta' mu - delta x^-e mu'
                self.mu.scale_in_place(&self.delta_prime);
                self.mu.sub_scaled_shifted(&delta, k, &self.mu_prime);
                // bez := (f, delta' f2 + delta x^-e f)
                self.bez.f2.scale_in_place(&self.delta_prime);
                self.bez.f2.add_scaled_shifted(&delta, k, &self.bez.f);
                self.nabla = self.delta_prime.clone() * self.nabla.clone();
            } else {
                let k = e as usize;
                // mu' := mu, mu := delta' x^e mu - delta mu'
                self.mu_prime.scale_in_place(&-delta.clone());
                self.mu_prime
                    .sub_scaled_shifted(&-self.delta_prime.clone(), k, &self.mu);
                std::mem::swap(&mut self.mu, &mut self.mu_prime);
                // bez := (-f2, delta' x^e f2 + delta f), with the old delta'
                self.bez.f.scale_in_place(&delta);
                self.bez
                    .f
                    .add_scaled_shifted(&self.delta_prime, k, &self.bez.f2);
                std::mem::swap(&mut self.bez.f, &mut self.bez.f2);
                self.bez.f = -std::mem::replace(&mut self.bez.f, Poly::zero(self.ctx.clone()));
                self.delta_prime = delta.clone();
                self.nabla = delta.clone() * self.nabla.clone();
                self.e = -e;
            }
        }
        self.e += 1;
        self.step_log.push(StepRecord {
            delta,
            e_before: e,
            jumped,
        });
        Ok(())
    }

    /// `sum_{k=0}^{d} mu_k s_(j-d+k)` for the newest index `j`.
    fn current_discrepancy(&mut self) -> T {
        let j = self.terms.len();
        let coeffs = self.mu.f.coeffs();
        let d = coeffs.len() - 1;
        self.mults += coeffs.len() as u64;
        // d <= LC_(j-1) <= j - 1, so the window lies inside s_1..s_j.
        let window = &self.terms[j - 1 - d..j];
        coeffs
            .iter()
            .zip(window)
            .fold(T::zero_in(&self.ctx), |acc, (m, s)| {
                acc + m.clone() * s.clone()
            })
    }

    pub fn ctx(&self) -> &T::Ctx {
        &self.ctx
    }

    /// Number of consumed terms.
    pub fn j(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> &[T] {
        &self.terms
    }

    pub fn sequence(&self) -> Sequence<T> {
        Sequence::from_parts(self.ctx.clone(), self.terms.clone())
    }

    pub fn mu(&self) -> &PairedPoly<T> {
        &self.mu
    }

    pub fn mu_prime(&self) -> &PairedPoly<T> {
        &self.mu_prime
    }

    pub fn e(&self) -> i64 {
        self.e
    }

    pub fn delta_prime(&self) -> &T {
        &self.delta_prime
    }

    pub fn nabla(&self) -> &T {
        &self.nabla
    }

    pub fn bez(&self) -> &PairedPoly<T> {
        &self.bez
    }

    pub fn epsilon(&self) -> &T {
        &self.epsilon
    }

    pub fn step_log(&self) -> &[StepRecord<T>] {
        &self.step_log
    }

    /// Scalar multiplications spent on discrepancies and realisation updates.
    pub fn multiplications(&self) -> u64 {
        self.mults
    }

    /// `LC_j = (j + 1 - e_j) / 2`.
    pub fn lc(&self) -> usize {
        ((self.j() as i64 + 1 - self.e) / 2) as usize
    }

    /// The last step `j' < j` at which the degree jumped, or `None` if there
    /// was none (the index function is then `-1`).
    pub fn last_jump_before(&self, j: usize) -> Option<usize> {
        self.step_log[..j.saturating_sub(1).min(self.step_log.len())]
            .iter()
            .rposition(|r| r.jumped)
            .map(|i| i + 1)
    }

    /// The most recent jump index at or before the current step.
    pub fn last_jump(&self) -> Option<usize> {
        self.step_log.iter().rposition(|r| r.jumped).map(|i| i + 1)
    }

    /// `LC_1, ..., LC_j` recovered from the step log.
    pub fn lc_profile(&self) -> Vec<usize> {
        let mut lc = 0usize;
        self.step_log
            .iter()
            .enumerate()
            .map(|(i, r)| {
                if r.jumped {
                    lc = i + 1 - lc;
                }
                lc
            })
            .collect()
    }

    pub fn realisation(&self) -> Realisation<T> {
        Realisation {
            mu: self.mu.clone(),
            mu_prime: self.mu_prime.clone(),
            bez_numu: self.mu_prime.tilde(),
            bez_fg: self.bez.clone(),
            nabla: self.nabla.clone(),
            e: self.e,
        }
    }

    /// `f * mu + f2 * mu' = nabla`, re-expanded.
    pub fn fg_identity_holds(&self) -> bool {
        let lhs = &Poly::mul(&self.bez.f, &self.mu.f) + &Poly::mul(&self.bez.f2, &self.mu_prime.f);
        lhs == Poly::constant(self.nabla.clone())
    }

    /// `-mu2' * mu + mu' * mu2 = nabla`, re-expanded.
    pub fn numu_identity_holds(&self) -> bool {
        verify_identity(&self.mu_prime.tilde(), &self.mu, &self.nabla)
    }
}

/// Everything one pass of the engine produces.
#[derive(Debug, Clone, PartialEq)]
pub struct Realisation<T: Domain> {
    pub mu: PairedPoly<T>,
    pub mu_prime: PairedPoly<T>,
    /// `(-mu2', mu')`, so that `bez_numu . mu = nabla`.
    pub bez_numu: PairedPoly<T>,
    /// `(f, f2)` with `f * mu + f2 * mu' = nabla`.
    pub bez_fg: PairedPoly<T>,
    pub nabla: T,
    pub e: i64,
}

impl<T: Domain> Realisation<T> {
    pub fn fg_holds(&self) -> bool {
        let lhs =
            &Poly::mul(&self.bez_fg.f, &self.mu.f) + &Poly::mul(&self.bez_fg.f2, &self.mu_prime.f);
        lhs == Poly::constant(self.nabla.clone())
    }

    pub fn numu_holds(&self) -> bool {
        verify_identity(&self.bez_numu, &self.mu, &self.nabla)
    }

    /// Rescales so that `mu` is monic. Both identities keep holding with
    /// `nabla` rescaled by the same factor; `bez_numu` is unchanged.
    pub fn monic(&self) -> Result<Self> {
        let lead = self.mu.f.lead().ok_or(Error::ZeroPolynomial)?;
        let c = dom_inv(lead)?;
        Ok(Realisation {
            mu: self.mu.scale(&c),
            mu_prime: self.mu_prime.clone(),
            bez_numu: self.bez_numu.clone(),
            bez_fg: PairedPoly::new(self.bez_fg.f.clone(), self.bez_fg.f2.scale(&c)),
            nabla: c * self.nabla.clone(),
            e: self.e,
        })
    }
}

/// `Delta(f, s) = sum_{k=0}^{d} f_k s_(n-d+k)` with `d = deg f`; terms outside
/// `1..=n` read as zero.
pub fn discrepancy<T: Domain>(f: &Poly<T>, s: &Sequence<T>) -> Result<T> {
    let d = f.degree().ok_or(Error::ZeroPolynomial)?;
    if s.is_empty() {
        return Err(Error::EmptySequence);
    }
    let n = s.len() as i64;
    Ok(f.coeffs()
        .iter()
        .enumerate()
        .fold(T::zero_in(f.ctx()), |acc, (k, c)| {
            acc + c.clone() * s.get(n - d as i64 + k as i64)
        }))
}

/// `f` annihilates `s` when `sum_k f_k s_(j-d+k) = 0` for every
/// `d + 1 <= j <= n`. The zero polynomial annihilates everything.
pub fn is_annihilator<T: Domain>(f: &Poly<T>, s: &Sequence<T>) -> bool {
    let Some(d) = f.degree() else { return true };
    let zero = T::zero_in(f.ctx());
    (d + 1..=s.len()).all(|j| {
        let window = &s.terms()[j - 1 - d..j];
        f.coeffs()
            .iter()
            .zip(window)
            .fold(zero.clone(), |acc, (c, t)| acc + c.clone() * t.clone())
            .is_zero()
    })
}

pub fn minimal_polynomial<T: Domain>(s: &Sequence<T>, epsilon: T) -> Result<Poly<T>> {
    if s.is_empty() {
        return Err(Error::EmptySequence);
    }
    Ok(MrState::run(s, epsilon)?.mu.f)
}

pub fn minimal_realisation<T: Domain>(s: &Sequence<T>, epsilon: T) -> Result<Realisation<T>> {
    if s.is_empty() {
        return Err(Error::EmptySequence);
    }
    Ok(MrState::run(s, epsilon)?.realisation())
}

pub fn lc_profile<T: Domain>(s: &Sequence<T>, epsilon: T) -> Result<Vec<usize>> {
    Ok(MrState::run(s, epsilon)?.lc_profile())
}

/// For a jump step (`e_(n-1) > 0`, `Delta_n != 0`) taken from `st_before`,
/// returns `(a, nabla_n)` with `a . (mu^(n-1), mu^(n)) = nabla_n`.
pub fn next_identity<T: Domain>(st_before: &MrState<T>, delta: &T) -> Result<(PairedPoly<T>, T)> {
    if st_before.e <= 0 {
        return Err(Error::Precondition(format!(
            "exponent {} is not positive",
            st_before.e
        )));
    }
    if delta.is_zero() {
        return Err(Error::Precondition("discrepancy is zero".into()));
    }
    let k = st_before.e as usize;
    let f = &st_before.bez.f;
    let f2 = &st_before.bez.f2;
    let mut a = f.scale(delta);
    a.add_scaled_shifted(&st_before.delta_prime, k, f2);
    Ok((
        PairedPoly::new(a, -f2),
        delta.clone() * st_before.nabla.clone(),
    ))
}

/// `a.f * b.f + a.f2 * b.f2 == expected` as polynomials.
pub fn verify_identity<T: Domain>(a: &PairedPoly<T>, b: &PairedPoly<T>, expected: &T) -> bool {
    a.ctx() == b.ctx() && a.dot(b) == Poly::constant(expected.clone())
}
