//! Perfect-profile realisations over GF(2) for `j <= 4`, with the free
//! discrepancies `Delta_2` and `Delta_4` ranging over both values.

use seqmin::plcp::{is_plcp, is_stable, plcp_mr_specialized, sequence_with_discrepancies};
use seqmin::{Gf2, MrState, PairedPoly, Poly};

fn g2(c: &[u8]) -> Poly<Gf2> {
    Poly::from_i64s((), &c.iter().map(|&b| i64::from(b)).collect::<Vec<_>>())
}

/// `nu^2 + (x + 1) nu mu + mu^2` for `(mu, nu)`.
fn sigma(m: &PairedPoly<Gf2>) -> Poly<Gf2> {
    let x1 = g2(&[1, 1]);
    let cross = Poly::mul(&x1, &Poly::mul(&m.f2, &m.f));
    &(&Poly::mul(&m.f2, &m.f2) + &cross) + &Poly::mul(&m.f, &m.f)
}

#[test]
fn realisations_and_sigma_for_short_prefixes() {
    for d2 in 0u8..2 {
        for d4 in 0u8..2 {
            let deltas = [1, d2, 1, d4].map(|b| Gf2::from(b == 1));
            let s = sequence_with_discrepancies((), &deltas).unwrap();
            assert!(is_plcp(&s).unwrap().is_plcp);
            assert!(is_stable(&s).unwrap());
            let expected = [
                (g2(&[0, 1]), g2(&[1]), g2(&[1, 1])),
                (g2(&[d2, 1]), g2(&[1]), g2(&[1, d2 ^ 1])),
                (g2(&[1, d2, 1]), g2(&[0, 1]), g2(&[1, 1, 0, d2 ^ 1])),
                (
                    g2(&[1 ^ (d2 & d4), d2 ^ d4, 1]),
                    g2(&[d4, 1]),
                    g2(&[1, (d2 & d4) ^ 1, 0, d2 ^ 1]),
                ),
            ];
            let mut st = MrState::new(());
            for (j, (mu, mu2, sig)) in expected.iter().enumerate() {
                st.step(s.terms()[j]).unwrap();
                let want = PairedPoly::new(mu.clone(), mu2.clone());
                assert_eq!(st.mu(), &want, "j = {}, deltas = {deltas:?}", j + 1);
                assert_eq!(&sigma(st.mu()), sig, "j = {}, deltas = {deltas:?}", j + 1);
                let prefix = s.prefix(j + 1);
                assert_eq!(plcp_mr_specialized(&prefix, Gf2::ZERO).unwrap(), want);
            }
        }
    }
}
