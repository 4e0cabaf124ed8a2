//! End-to-end acceptance criteria. Each criterion prints one PASS/FAIL line;
//! the test fails if any criterion fails.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use seqmin::annihilator::{min_nonvanishing, mr_bullet_family};
use seqmin::bench;
use seqmin::bezout::bezout_pair;
use seqmin::oracle::{brute_min_annihilator, brute_mr_set, ext_euclid};
use seqmin::plcp::{check_plcp_stable_equivalence, count_plcp};
use seqmin::reverse::iy_classify;
use seqmin::{Domain, Field, Gf2, Modulus, MrState, PairedPoly, Poly, Sequence, Zp};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn g2(c: &[i64]) -> Poly<Gf2> {
    Poly::from_i64s((), c)
}

fn seq2(c: &[i64]) -> Sequence<Gf2> {
    Sequence::from_i64s((), c)
}

fn pp(f: &[i64], f2: &[i64]) -> PairedPoly<Gf2> {
    PairedPoly::new(g2(f), g2(f2))
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn binary(bits: u32, n: usize) -> Sequence<Gf2> {
    let terms = (0..n).map(|i| Gf2::from(bits >> i & 1 == 1)).collect();
    Sequence::new((), terms).unwrap()
}

/// Runs step by step and returns the state after every prefix `j = 0..=n`.
fn states<T: Domain>(s: &Sequence<T>) -> Vec<MrState<T>> {
    let mut st = MrState::new(s.ctx().clone());
    let mut out = vec![st.clone()];
    for t in s.terms() {
        st.step(t.clone()).unwrap();
        out.push(st.clone());
    }
    out
}

fn binary_trace_replay() -> Outcome {
    // (Delta_j, e_(j-1), mu, mu', mu2, mu2') for j = 1..=8
    type Row<'a> = (i64, i64, &'a [i64], &'a [i64], &'a [i64], &'a [i64]);
    let rows: [Row; 8] = [
        (0, 1, &[1], &[], &[], &[1]),
        (1, 2, &[0, 0, 1], &[1], &[1], &[]),
        (1, -1, &[0, 1, 1], &[1], &[1], &[]),
        (1, 0, &[1, 1, 1], &[1], &[1], &[]),
        (1, 1, &[1, 1, 1, 1], &[1, 1, 1], &[0, 1], &[1]),
        (0, 0, &[1, 1, 1, 1], &[1, 1, 1], &[0, 1], &[1]),
        (1, 1, &[1, 0, 0, 1, 1], &[1, 1, 1, 1], &[1, 0, 1], &[0, 1]),
        (1, 0, &[0, 1, 1, 0, 1], &[1, 1, 1, 1], &[1, 1, 1], &[0, 1]),
    ];
    let s = seq2(&[0, 1, 1, 0, 0, 1, 0, 1]);
    let start = Instant::now();
    let full = MrState::run(&s, Gf2::ZERO).unwrap();
    let elapsed = start.elapsed();
    let all = states(&s);
    let st0 = &all[0];
    ensure(
        *st0.delta_prime() == Gf2::ONE
            && st0.mu() == &pp(&[1], &[])
            && st0.mu_prime() == &pp(&[], &[1]),
        || "row 0 differs".into(),
    )?;
    for (j, (delta, e, mu, mup, mu2, mu2p)) in rows.iter().enumerate() {
        let st = &all[j + 1];
        let rec = &st.step_log()[j];
        let ok = rec.delta == Gf2::from(*delta == 1)
            && rec.e_before == *e
            && st.mu() == &pp(mu, mu2)
            && st.mu_prime() == &pp(mup, mu2p);
        ensure(ok, || format!("row {} differs", j + 1))?;
    }
    ensure(full.mu() == all[8].mu(), || {
        "full run differs from replay".into()
    })?;
    ensure(elapsed < Duration::from_millis(1), || {
        format!("took {elapsed:?}")
    })
}

fn paired_trace_replay() -> Outcome {
    // (e_(j-1), Delta_j, mu bar, mu' bar, tilde mu') for j = 1..=6
    type Row<'a> = (i64, i64, [&'a [i64]; 2], [&'a [i64]; 2], [&'a [i64]; 2]);
    let rows: [Row; 6] = [
        (1, 1, [&[0, 1], &[1]], [&[1], &[]], [&[], &[1]]),
        (0, 0, [&[0, 1], &[1]], [&[1], &[]], [&[], &[1]]),
        (
            1,
            1,
            [&[1, 0, 1], &[0, 1]],
            [&[0, 1], &[1]],
            [&[1], &[0, 1]],
        ),
        (
            0,
            1,
            [&[1, 1, 1], &[1, 1]],
            [&[0, 1], &[1]],
            [&[1], &[0, 1]],
        ),
        (
            1,
            0,
            [&[1, 1, 1], &[1, 1]],
            [&[0, 1], &[1]],
            [&[1], &[0, 1]],
        ),
        (
            2,
            0,
            [&[1, 1, 1], &[1, 1]],
            [&[0, 1], &[1]],
            [&[1], &[0, 1]],
        ),
    ];
    let s = seq2(&[1, 0, 1, 1, 0, 1]);
    let all = states(&s);
    for (j, (e, delta, mu, mup, tilde)) in rows.iter().enumerate() {
        let st = &all[j + 1];
        let rec = &st.step_log()[j];
        let ok = rec.e_before == *e
            && rec.delta == Gf2::from(*delta == 1)
            && st.mu() == &pp(mu[0], mu[1])
            && st.mu_prime() == &pp(mup[0], mup[1])
            && st.mu_prime().tilde() == pp(tilde[0], tilde[1]);
        ensure(ok, || format!("row {} differs", j + 1))?;
        if j + 1 >= 3 {
            let value = st.mu_prime().tilde().dot(st.mu());
            ensure(value == g2(&[1]), || {
                format!("identity at j = {} gives {value}", j + 1)
            })?;
        }
    }
    Ok(())
}

fn euclid_example() -> Outcome {
    let b = bezout_pair(&g2(&[1, 0, 0, 1]), &g2(&[1, 0, 1])).map_err(|e| e.to_string())?;
    ensure(
        b.g == g2(&[1, 1]) && b.f == pp(&[1], &[0, 1]) && b.nabla == Gf2::ONE,
        || format!("got f = {}, nabla = {}, g = {}", b.f, b.nabla, b.g),
    )
}

fn every_prefix_identities<T: Domain>(s: &Sequence<T>) -> Outcome {
    let mut st = MrState::new(s.ctx().clone());
    for (j, t) in s.terms().iter().enumerate() {
        st.step(t.clone()).unwrap();
        ensure(st.fg_identity_holds() && st.numu_identity_holds(), || {
            format!("identity fails on {s} at j = {}", j + 1)
        })?;
    }
    Ok(())
}

fn identity_suites() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let p7 = Modulus::new(7).unwrap();
    for i in 0..10_000 {
        match i % 3 {
            0 => {
                let n = rng.gen_range(1..=64);
                let v: Vec<i64> = (0..n).map(|_| rng.gen_range(0..2)).collect();
                every_prefix_identities(&seq2(&v))?;
            }
            1 => {
                let n = rng.gen_range(1..=32);
                let v: Vec<i64> = (0..n).map(|_| rng.gen_range(0..7)).collect();
                every_prefix_identities(&Sequence::<Zp>::from_i64s(p7, &v))?;
            }
            _ => {
                let n = rng.gen_range(1..=16);
                let v: Vec<i64> = (0..n).map(|_| rng.gen_range(-5..=5)).collect();
                every_prefix_identities(&Sequence::<BigInt>::from_i64s((), &v))?;
            }
        }
    }
    Ok(())
}

fn scalar_multiple<T: Domain>(a: &Poly<T>, b: &Poly<T>) -> bool {
    match (a.lead(), b.lead()) {
        (Some(la), Some(lb)) => a.scale(lb) == b.scale(la),
        _ => false,
    }
}

fn oracle_agrees<T: seqmin::FiniteField>(s: &Sequence<T>) -> Outcome {
    let eps = T::zero_in(s.ctx());
    let st = MrState::run(s, eps.clone()).unwrap();
    let (d, witnesses) = brute_min_annihilator(s, false).unwrap();
    ensure(d == st.lc(), || {
        format!("{s}: LC {} vs oracle {d}", st.lc())
    })?;
    ensure(
        witnesses.iter().any(|w| scalar_multiple(w, &st.mu().f)),
        || format!("{s}: mu = {} not among oracle witnesses", st.mu().f),
    )?;
    if !s.is_all_zero() {
        let (db, _) = brute_min_annihilator(s, true).unwrap();
        let m = min_nonvanishing(s, eps).unwrap();
        ensure(m.f.degree() == Some(db), || {
            format!("{s}: nonvanishing degree {:?} vs oracle {db}", m.f.degree())
        })?;
    }
    Ok(())
}

fn oracle_equivalence() -> Outcome {
    for n in 1..=12 {
        for bits in 0u32..1 << n {
            oracle_agrees(&binary(bits, n))?;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let p3 = Modulus::new(3).unwrap();
    for _ in 0..500 {
        let n = rng.gen_range(1..=8);
        let v: Vec<i64> = (0..n).map(|_| rng.gen_range(0..3)).collect();
        oracle_agrees(&Sequence::<Zp>::from_i64s(p3, &v))?;
    }
    Ok(())
}

fn euclid_agreement() -> Outcome {
    for d in 1..=6usize {
        for low in 0u32..1 << d {
            let mut uc: Vec<i64> = (0..d).map(|i| (low >> i & 1) as i64).collect();
            uc.push(1);
            let u = g2(&uc);
            for bits in 0u32..1 << d {
                let u2 = g2(&(0..d).map(|i| (bits >> i & 1) as i64).collect::<Vec<_>>());
                let b = bezout_pair(&u, &u2).map_err(|e| e.to_string())?;
                let (g, a, a2) = ext_euclid(&u, &u2).map_err(|e| e.to_string())?;
                let inv = b.nabla.inverse();
                let ok = b.f.f.scale(&inv) == a && b.f.f2.scale(&inv) == a2 && b.g.scale(&inv) == g;
                ensure(ok, || {
                    format!("u = {u}, u2 = {u2}: f = {} vs ({a}, {a2})", b.f)
                })?;
            }
        }
    }
    Ok(())
}

fn perfect_equals_stable() -> Outcome {
    let start = Instant::now();
    for n in 1..=16 {
        let scan = check_plcp_stable_equivalence(n).map_err(|e| e.to_string())?;
        let expected = count_plcp(2, n as u32).unwrap();
        ensure(scan.equivalence_holds, || {
            format!("n = {n}: PLCP and stable differ")
        })?;
        ensure(scan.holds(), || format!("n = {n}: {scan:?}"))?;
        ensure(expected == scan.plcp_count.into(), || {
            format!(
                "n = {n}: {} PLCP sequences, formula gives {expected}",
                scan.plcp_count
            )
        })?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(60), || {
        format!("took {elapsed:?}")
    })
}

fn nonvanishing_examples() -> Outcome {
    let s = seq2(&[0, 1, 1, 0, 0, 1, 0, 1]);
    let m = min_nonvanishing(&s, Gf2::ZERO).unwrap();
    let first = pp(&[1, 1, 0, 0, 0, 1], &[0, 0, 1, 1]);
    let second = pp(&[1, 0, 1, 0, 1, 1], &[1, 1, 0, 1]);
    ensure(m == first, || format!("min_nonvanishing gave {m}"))?;
    let family: Vec<PairedPoly<Gf2>> = [g2(&[0, 1]), g2(&[1, 1])]
        .iter()
        .map(|q| mr_bullet_family(&s, q, &Gf2::ONE, Gf2::ZERO).unwrap())
        .collect();
    ensure(family == vec![first.clone(), second.clone()], || {
        "family differs".into()
    })?;
    let mut oracle = brute_mr_set(&s, true).unwrap();
    oracle.sort_by_key(|p| p.to_text());
    let mut expected = vec![first, second];
    expected.sort_by_key(|p| p.to_text());
    ensure(oracle == expected, || {
        format!("oracle set has {} members", oracle.len())
    })
}

fn reversal_dichotomy() -> Outcome {
    let r = iy_classify(&seq2(&[1, 1, 0, 0]), Gf2::ZERO).map_err(|e| e.to_string())?;
    ensure(r.rev_lc == 3 && r.verdict, || format!("example gave {r:?}"))?;
    let mut checked = 0;
    for n in (2..=10).step_by(2) {
        for bits in 0u32..1 << n {
            let s = binary(bits, n);
            if MrState::run(&s, Gf2::ZERO).unwrap().lc() * 2 != n {
                continue;
            }
            let r = iy_classify(&s, Gf2::ZERO).unwrap();
            ensure(r.verdict, || format!("{s}: {r:?}"))?;
            checked += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let p3 = Modulus::new(3).unwrap();
    for _ in 0..4000 {
        let n = 2 * rng.gen_range(1..=5);
        let v: Vec<i64> = (0..n).map(|_| rng.gen_range(0..3)).collect();
        let s = Sequence::<Zp>::from_i64s(p3, &v);
        if MrState::run(&s, Zp::new(0, p3)).unwrap().lc() * 2 == n {
            let r = iy_classify(&s, Zp::new(0, p3)).unwrap();
            ensure(r.verdict, || format!("{s}: {r:?}"))?;
            checked += 1;
        }
        let v: Vec<i64> = (0..n).map(|_| rng.gen_range(-3..=3)).collect();
        let s = Sequence::<BigInt>::from_i64s((), &v);
        if MrState::run(&s, BigInt::from(0)).unwrap().lc() * 2 == n {
            let r = iy_classify(&s, BigInt::from(0)).unwrap();
            ensure(r.verdict, || format!("{s}: {r:?}"))?;
            checked += 1;
        }
    }
    ensure(checked > 1000, || format!("only {checked} instances"))
}

fn quadratic_complexity() -> Outcome {
    let report = bench::run(13..=17, 1);
    for p in &report.points {
        println!(
            "    n = {:>6}: {:.4} s, {:.2} multiplications per LC^2",
            p.n,
            p.seconds,
            p.multiplications_per_lc_squared()
        );
    }
    println!("    alpha = {:.3}", report.alpha);
    ensure((1.7..=2.3).contains(&report.alpha), || {
        format!("alpha = {:.3}", report.alpha)
    })?;
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let p = bench::time_one(100_000, &mut rng);
    ensure(p.seconds < 10.0, || {
        format!("n = 100000 took {:.2} s", p.seconds)
    })
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("binary trace replay", binary_trace_replay),
        ("paired trace replay", paired_trace_replay),
        ("bezout worked example", euclid_example),
        ("identity suites", identity_suites),
        ("oracle equivalence", oracle_equivalence),
        ("extended euclid agreement", euclid_agreement),
        ("perfect profile equals stable", perfect_equals_stable),
        ("nonvanishing annihilator examples", nonvanishing_examples),
        ("reversal dichotomy", reversal_dichotomy),
        ("quadratic complexity", quadratic_complexity),
    ];
    let mut failures = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(()) => println!("PASS {} {name}", i + 1),
            Err(why) => {
                println!("FAIL {} {name}: {why}", i + 1);
                failures.push(i + 1);
            }
        }
    }
    if !failures.is_empty() {
        eprintln!("failed criteria: {failures:?}");
        std::process::exit(1);
    }
}
