//! Reciprocal annihilators and the linear complexity of reversed sequences.

use crate::error::{Error, Result};
use crate::lfsr::{is_annihilator, MrState};
use crate::poly::Poly;
use crate::ring::Domain;
use crate::sequence::Sequence;

/// Linear complexity of `(s_n, ..., s_1)`.
pub fn reverse_lc<T: Domain>(s: &Sequence<T>, epsilon: T) -> Result<usize> {
    Ok(MrState::run(&s.reversed(), epsilon)?.lc())
}

/// Whether `f*`, the reciprocal of `f`, annihilates `(s_n, ..., s_(k+1))`
/// where `x^k` is the largest power of `x` dividing `f`. `f` must annihilate
/// `s`; the answer is then always `true`.
pub fn reciprocal_annihilates<T: Domain>(f: &Poly<T>, s: &Sequence<T>) -> Result<bool> {
    let k = f.x_valuation()?;
    if !is_annihilator(f, s) {
        return Err(Error::NotAnnihilator);
    }
    let window = s.slice(k + 1, s.len()).reversed();
    Ok(is_annihilator(&f.reciprocal(), &window))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IyReport {
    pub lc: usize,
    pub rev_lc: usize,
    pub mu_vanishes_at_zero: bool,
    /// `rev_lc = lc` when `mu_0 != 0`, `rev_lc = lc + 1` when `mu_0 = 0`.
    pub verdict: bool,
}

/// Compares `LC(s)` with the linear complexity of the reversed sequence for
/// `n = 2 LC` exactly, over a factorial domain.
pub fn iy_classify<T: Domain>(s: &Sequence<T>, epsilon: T) -> Result<IyReport> {
    if !T::descriptor(s.ctx()).is_factorial() {
        return Err(Error::Precondition("domain must be factorial".into()));
    }
    let st = MrState::run(s, epsilon.clone())?;
    let lc = st.lc();
    if s.len() != 2 * lc {
        return Err(Error::Precondition(format!(
            "needs n = 2 LC, got n = {} and LC = {lc}",
            s.len()
        )));
    }
    let rev_lc = reverse_lc(s, epsilon)?;
    let mu_vanishes_at_zero = st.mu().f.constant_term().is_zero();
    let expected = if mu_vanishes_at_zero { lc + 1 } else { lc };
    Ok(IyReport {
        lc,
        rev_lc,
        mu_vanishes_at_zero,
        verdict: rev_lc == expected,
    })
}

/// Largest `m <= n` with `m = 2 LC(s^(m))`, if any `m >= 1` qualifies.
pub fn max_valid_prefix<T: Domain>(s: &Sequence<T>, epsilon: T) -> Result<Option<usize>> {
    let profile = MrState::run(s, epsilon)?.lc_profile();
    Ok((1..=s.len()).rev().find(|&m| m == 2 * profile[m - 1]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Gf2;

    fn g2(c: &[i64]) -> Poly<Gf2> {
        Poly::from_i64s((), c)
    }

    fn seq2(c: &[i64]) -> Sequence<Gf2> {
        Sequence::from_i64s((), c)
    }

    #[test]
    fn reverse_lc_examples() {
        assert_eq!(reverse_lc(&seq2(&[1, 1, 0, 0]), Gf2::ZERO), Ok(3));
        assert_eq!(reverse_lc(&seq2(&[1, 0, 1]), Gf2::ZERO), Ok(2));
        assert_eq!(reverse_lc(&seq2(&[0, 0, 0]), Gf2::ZERO), Ok(0));
    }

    #[test]
    fn reciprocal_examples() {
        let s = seq2(&[1, 1, 0, 0]);
        assert_eq!(reciprocal_annihilates(&g2(&[0, 0, 1]), &s), Ok(true));
        let t = seq2(&[0, 1, 1, 0, 0, 1, 0, 1]);
        assert_eq!(reciprocal_annihilates(&g2(&[0, 1, 1, 0, 1]), &t), Ok(true));
        assert_eq!(
            reciprocal_annihilates(&g2(&[1, 1]), &t),
            Err(Error::NotAnnihilator)
        );
    }

    #[test]
    fn iy_examples() {
        let r = iy_classify(&seq2(&[1, 1, 0, 0]), Gf2::ZERO).unwrap();
        assert_eq!(
            (r.lc, r.rev_lc, r.mu_vanishes_at_zero, r.verdict),
            (2, 3, true, true)
        );
        let r = iy_classify(&seq2(&[1, 0, 1, 0]), Gf2::ZERO).unwrap();
        assert!(!r.mu_vanishes_at_zero);
        assert_eq!(r.rev_lc, r.lc);
        assert!(r.verdict);
        assert!(matches!(
            iy_classify(&seq2(&[1, 1, 1, 0]), Gf2::ZERO),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn valid_prefix() {
        assert_eq!(
            max_valid_prefix(&seq2(&[1, 1, 0, 0, 0]), Gf2::ZERO),
            Ok(Some(4))
        );
        assert_eq!(max_valid_prefix(&seq2(&[0, 0]), Gf2::ZERO), Ok(None));
    }
}
