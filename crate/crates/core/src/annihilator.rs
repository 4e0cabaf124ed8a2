//! Annihilators with a nonzero constant term.
//!
//! `Ann*(s)` is the set of annihilators `f` with `f_0 != 0` and `LC*` their
//! least degree. When the minimal polynomial `mu` already has `mu_0 != 0` it
//! is such an annihilator. Otherwise `mu' ` supplies the constant term:
//! `mu + a mu'` when `e <= 0`, or `q mu + a mu'` with `deg q = e` when
//! `e > 0`, the latter of degree `n + 1 - LC`.

use crate::error::{Error, Result};
use crate::lfsr::{is_annihilator, MrState};
use crate::poly::{PairedPoly, Poly};
use crate::ring::Domain;
use crate::sequence::Sequence;

fn run_nonzero<T: Domain>(s: &Sequence<T>, epsilon: T) -> Result<MrState<T>> {
    if s.is_empty() {
        return Err(Error::EmptySequence);
    }
    if s.is_all_zero() {
        return Err(Error::AllZeroSequence);
    }
    MrState::run(s, epsilon)
}

/// `LC` if `e <= 0` or `mu_0 != 0`, else `n + 1 - LC`.
pub fn lc_bullet<T: Domain>(s: &Sequence<T>, epsilon: T) -> Result<usize> {
    let st = run_nonzero(s, epsilon)?;
    let lc = st.lc();
    if st.e() <= 0 || !st.mu().f.constant_term().is_zero() {
        Ok(lc)
    } else {
        Ok(s.len() + 1 - lc)
    }
}

/// A minimal realisation whose polynomial does not vanish at zero:
/// `mu` itself, `mu + mu'` when `e <= 0`, or `x^e mu + mu'`.
pub fn min_nonvanishing<T: Domain>(s: &Sequence<T>, epsilon: T) -> Result<PairedPoly<T>> {
    let st = run_nonzero(s, epsilon)?;
    if !st.mu().f.constant_term().is_zero() {
        return Ok(st.mu().clone());
    }
    let k = st.e().max(0) as usize;
    Ok(&st.mu().shift(k) + st.mu_prime())
}

/// `q mu + a mu'` for `e > 0` (with `deg q = e`) or `mu + a mu'` for
/// `e <= 0` (where `q` must be `1`). Requires `mu_0 = 0` and `a != 0`.
pub fn mr_bullet_family<T: Domain>(
    s: &Sequence<T>,
    q: &Poly<T>,
    a: &T,
    epsilon: T,
) -> Result<PairedPoly<T>> {
    let st = run_nonzero(s, epsilon)?;
    if !st.mu().f.constant_term().is_zero() {
        return Err(Error::Precondition(
            "minimal polynomial does not vanish at 0".into(),
        ));
    }
    if a.is_zero() {
        return Err(Error::Precondition("a must be nonzero".into()));
    }
    let e = st.e();
    if e > 0 && q.degree() != Some(e as usize) {
        return Err(Error::DegreeViolation(format!("deg(q) must equal e = {e}")));
    }
    if e <= 0 && *q != Poly::one(s.ctx().clone()) {
        return Err(Error::DegreeViolation("q must be 1 when e <= 0".into()));
    }
    Ok(&st.mu().mul_poly(q) + &st.mu_prime().scale(a))
}

/// The result of extending `s` by one term that forces a degree jump.
#[derive(Debug, Clone, PartialEq)]
pub struct JumpExtension<T: Domain> {
    pub s_next: T,
    pub delta: T,
    /// `mu^(n+1) + f' mu^(n)`.
    pub mu_ext: PairedPoly<T>,
    pub nabla: T,
    /// `(-mu2^(n), mu^(n)) . mu_ext = nabla`, re-expanded.
    pub identity_holds: bool,
}

/// [`extend_by_jump_with`] with `f' = 0`.
pub fn extend_by_jump<T: Domain>(s: &Sequence<T>, epsilon: T) -> Result<JumpExtension<T>> {
    let zero = Poly::zero(s.ctx().clone());
    extend_by_jump_with(s, epsilon, &zero)
}

/// For `e > 0` and `mu_0 = 0`, chooses `s_(n+1)` so that `Delta_(n+1) != 0`
/// and returns `mu^(n+1) + f' mu^(n)` with `f' = 0` or `deg f' <= e - 1`.
///
/// Over a field `s_(n+1)` makes `Delta_(n+1) = 1`; otherwise it is `0` when
/// that already gives a nonzero discrepancy and `1` when it does not.
pub fn extend_by_jump_with<T: Domain>(
    s: &Sequence<T>,
    epsilon: T,
    f_prime: &Poly<T>,
) -> Result<JumpExtension<T>> {
    let mut st = run_nonzero(s, epsilon)?;
    let e = st.e();
    if e <= 0 || !st.mu().f.constant_term().is_zero() {
        return Err(Error::Precondition("needs e > 0 and mu_0 = 0".into()));
    }
    if f_prime.deg_i64() > e - 1 {
        return Err(Error::DegreeViolation(format!(
            "deg(f') must be at most {}",
            e - 1
        )));
    }
    let ctx = s.ctx().clone();
    let before = st.mu().clone();
    let mu = &before.f;
    let d = mu.degree().expect("nonzero");
    let n = s.len();
    // Delta_(n+1) = c + lead(mu) s_(n+1)
    let c = (0..d).fold(T::zero_in(&ctx), |acc, k| {
        acc + mu.coeff(k) * s.get((n + 1 - d + k) as i64)
    });
    let lead = mu.lead().expect("nonzero").clone();
    let s_next = if T::descriptor(&ctx).is_field() {
        (T::one_in(&ctx) - c.clone()) * lead.inv().expect("field")
    } else if c.is_zero() {
        T::one_in(&ctx)
    } else {
        T::zero_in(&ctx)
    };
    st.step(s_next.clone())?;
    let delta = st.step_log().last().expect("just stepped").delta.clone();
    let mu_ext = &st.mu().clone() + &before.mul_poly(f_prime);
    let nabla = st.nabla().clone();
    let identity_holds = before.tilde().dot(&mu_ext) == Poly::constant(nabla.clone());
    Ok(JumpExtension {
        s_next,
        delta,
        mu_ext,
        nabla,
        identity_holds,
    })
}

/// Pseudo-division of a candidate `f` by the minimal polynomial.
#[derive(Debug, Clone, PartialEq)]
pub struct CharDecomposition<T: Domain> {
    pub q: Poly<T>,
    pub r: Poly<T>,
    /// `scale * f = q * mu + r`; equals `lead(mu)^(e+1)` when
    /// `deg f = n + 1 - LC`.
    pub scale: T,
    /// `n'`, the prefix length before the last degree jump.
    pub n_prime: Option<usize>,
    /// `scale * (f, f2) = q * (mu, mu2) + (r, r2)` with all second
    /// components taken against `s`.
    pub composition_holds: bool,
    /// `f` has the least degree among annihilators with `f_0 != 0`.
    pub verdict: bool,
}

/// Decides whether `f` in `Ann*(s)` has minimal degree when `mu_0 = 0` and
/// `e > 0`, by pseudo-dividing `f` by `mu`.
///
/// The verdict requires `deg f = n + 1 - LC`, `r_0 != 0` and `r` a minimal
/// polynomial of `s^(n')`; over a field also `r = a mu'`.
pub fn char_decompose<T: Domain>(
    f: &Poly<T>,
    s: &Sequence<T>,
    epsilon: T,
) -> Result<CharDecomposition<T>> {
    let n = s.len();
    if n < 2 {
        return Err(Error::Precondition("needs n >= 2".into()));
    }
    let st = run_nonzero(s, epsilon)?;
    let mu = st.mu();
    let e = st.e();
    if e <= 0 || !mu.f.constant_term().is_zero() {
        return Err(Error::Precondition("needs e > 0 and mu_0 = 0".into()));
    }
    if f.is_zero() || f.constant_term().is_zero() {
        return Err(Error::Precondition("f must not vanish at 0".into()));
    }
    if !is_annihilator(f, s) {
        return Err(Error::NotAnnihilator);
    }
    let (q, r, scale) = f.pseudo_divide(&mu.f)?;
    let n_prime = st.last_jump().map(|j| j - 1);

    let f_bar = PairedPoly::realisation_of(f.clone(), s);
    let r_bar = PairedPoly::realisation_of(r.clone(), s);
    let composition_holds = f_bar.scale(&scale) == &mu.mul_poly(&q) + &r_bar;

    let lc = st.lc();
    let profile = st.lc_profile();
    // n' = 0 leaves s' empty, whose minimal polynomials are the nonzero
    // constants.
    let minimal_r = match n_prime {
        Some(0) => r.degree() == Some(0),
        Some(np) => {
            let s_prime = s.prefix(np);
            !r.constant_term().is_zero()
                && is_annihilator(&r, &s_prime)
                && r.degree() == Some(profile[np - 1])
        }
        _ => false,
    };
    let field_form = !T::descriptor(s.ctx()).is_field() || {
        let mp = &st.mu_prime().f;
        match (r.lead(), mp.lead()) {
            (Some(lr), Some(lm)) => r.scale(lm) == mp.scale(lr),
            _ => false,
        }
    };
    let verdict = f.degree() == Some(n + 1 - lc) && minimal_r && field_form;
    Ok(CharDecomposition {
        q,
        r,
        scale,
        n_prime,
        composition_holds,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Gf2, Modulus, Zp};
    use num_bigint::BigInt;

    fn g2(c: &[i64]) -> Poly<Gf2> {
        Poly::from_i64s((), c)
    }

    fn seq2(c: &[i64]) -> Sequence<Gf2> {
        Sequence::from_i64s((), c)
    }

    fn table() -> Sequence<Gf2> {
        seq2(&[0, 1, 1, 0, 0, 1, 0, 1])
    }

    #[test]
    fn lc_bullet_examples() {
        assert_eq!(lc_bullet(&table(), Gf2::ZERO), Ok(5));
        assert_eq!(lc_bullet(&seq2(&[1]), Gf2::ZERO), Ok(1));
        assert_eq!(lc_bullet(&seq2(&[0, 1, 0, 0]), Gf2::ZERO), Ok(3));
        assert_eq!(
            lc_bullet(&seq2(&[0, 0]), Gf2::ZERO),
            Err(Error::AllZeroSequence)
        );
    }

    #[test]
    fn rewrite_examples() {
        let m = min_nonvanishing(&table(), Gf2::ZERO).unwrap();
        assert_eq!(
            m,
            PairedPoly::new(g2(&[1, 1, 0, 0, 0, 1]), g2(&[0, 0, 1, 1]))
        );
        let m = min_nonvanishing(&seq2(&[0, 1, 0, 0]), Gf2::ZERO).unwrap();
        assert_eq!(m, PairedPoly::new(g2(&[1, 0, 0, 1]), g2(&[0, 1])));
        let m = min_nonvanishing(&seq2(&[1]), Gf2::ZERO).unwrap();
        assert_eq!(m, PairedPoly::new(g2(&[1, 1]), g2(&[1])));
    }

    #[test]
    fn family_examples() {
        let one = Gf2::ONE;
        let m = mr_bullet_family(&table(), &g2(&[0, 1]), &one, Gf2::ZERO).unwrap();
        assert_eq!(
            m,
            PairedPoly::new(g2(&[1, 1, 0, 0, 0, 1]), g2(&[0, 0, 1, 1]))
        );
        let m = mr_bullet_family(&table(), &g2(&[1, 1]), &one, Gf2::ZERO).unwrap();
        assert_eq!(
            m,
            PairedPoly::new(g2(&[1, 0, 1, 0, 1, 1]), g2(&[1, 1, 0, 1]))
        );
        let m = mr_bullet_family(&seq2(&[1]), &g2(&[1]), &one, Gf2::ZERO).unwrap();
        assert_eq!(m.f.degree(), Some(1));
    }

    #[test]
    fn family_errors() {
        let one = Gf2::ONE;
        assert!(matches!(
            mr_bullet_family(&table(), &g2(&[0, 0, 1]), &one, Gf2::ZERO),
            Err(Error::DegreeViolation(_))
        ));
        assert!(mr_bullet_family(&table(), &g2(&[0, 1]), &Gf2::ZERO, Gf2::ZERO).is_err());
        assert!(mr_bullet_family(&seq2(&[1, 1]), &g2(&[1]), &one, Gf2::ZERO).is_err());
    }

    #[test]
    fn jump_extension_examples() {
        let ext = extend_by_jump(&table(), Gf2::ZERO).unwrap();
        assert_eq!(ext.s_next, Gf2::ZERO);
        assert_eq!(ext.delta, Gf2::ONE);
        assert_eq!(
            ext.mu_ext,
            PairedPoly::new(g2(&[1, 1, 0, 0, 0, 1]), g2(&[0, 0, 1, 1]))
        );
        assert!(ext.identity_holds);
        let ext = extend_by_jump_with(&table(), Gf2::ZERO, &g2(&[1])).unwrap();
        assert_eq!(
            ext.mu_ext,
            PairedPoly::new(g2(&[1, 0, 1, 0, 1, 1]), g2(&[1, 1, 0, 1]))
        );
        assert!(ext.identity_holds);
        assert!(extend_by_jump_with(&table(), Gf2::ZERO, &g2(&[0, 1])).is_err());
    }

    #[test]
    fn jump_extension_over_gfp_and_int() {
        let p = Modulus::new(5).unwrap();
        let s = Sequence::<Zp>::from_i64s(p, &[0, 3, 0, 0, 0]);
        let ext = extend_by_jump(&s, Zp::new(0, p)).unwrap();
        assert_eq!(ext.delta, Zp::new(1, p));
        assert!(ext.identity_holds);
        let s = Sequence::<BigInt>::from_i64s((), &[0, 2, 0, 0]);
        let ext = extend_by_jump(&s, BigInt::from(0)).unwrap();
        assert!(!ext.delta.is_zero());
        assert!(ext.identity_holds);
    }

    #[test]
    fn char_examples() {
        let d = char_decompose(&g2(&[1, 1, 0, 0, 0, 1]), &table(), Gf2::ZERO).unwrap();
        assert!(d.verdict && d.composition_holds);
        assert_eq!(d.q, g2(&[0, 1]));
        assert_eq!(d.r, g2(&[1, 1, 1, 1]));
        assert_eq!(d.n_prime, Some(6));
        assert!(matches!(
            char_decompose(&g2(&[0, 1, 1, 0, 1]), &table(), Gf2::ZERO),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn char_impulse_has_empty_prejump_prefix() {
        let s = seq2(&[1, 0, 0]);
        let d = char_decompose(&g2(&[1, 0, 0, 1]), &s, Gf2::ZERO).unwrap();
        assert_eq!(d.n_prime, Some(0));
        assert_eq!(d.r, g2(&[1]));
        assert!(d.verdict);
    }

    #[test]
    fn char_rejects_non_minimal_degree() {
        let s = table();
        let found = (0u32..1 << 5)
            .map(|bits| {
                let mut c: Vec<i64> = vec![1];
                c.extend((0..5).map(|i| (bits >> i & 1) as i64));
                c.push(1);
                g2(&c)
            })
            .find(|f| is_annihilator(f, &s))
            .expect("some degree-6 annihilator with f_0 = 1 exists");
        let d = char_decompose(&found, &s, Gf2::ZERO).unwrap();
        assert!(!d.verdict);
    }
}
