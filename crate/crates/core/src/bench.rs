//! Timing of the realisation engine on random binary sequences.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::lfsr::MrState;
use crate::ring::Gf2;
use crate::sequence::Sequence;

pub fn random_gf2(n: usize, rng: &mut impl Rng) -> Sequence<Gf2> {
    let terms = (0..n).map(|_| Gf2::new(rng.gen())).collect();
    Sequence::new((), terms).expect("one context")
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchPoint {
    pub n: usize,
    pub seconds: f64,
    pub lc: usize,
    pub multiplications: u64,
}

impl BenchPoint {
    /// Multiplications divided by `LC^2`.
    pub fn multiplications_per_lc_squared(&self) -> f64 {
        self.multiplications as f64 / (self.lc.max(1) as f64).powi(2)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchReport {
    pub points: Vec<BenchPoint>,
    /// Least-squares slope of `log t` against `log n`.
    pub alpha: f64,
}

pub fn time_one(n: usize, rng: &mut impl Rng) -> BenchPoint {
    let s = random_gf2(n, rng);
    let start = Instant::now();
    let st = MrState::run(&s, Gf2::ZERO).expect("one context");
    let seconds = start.elapsed().as_secs_f64();
    BenchPoint {
        n,
        seconds,
        lc: st.lc(),
        multiplications: st.multiplications(),
    }
}

/// Times the engine at `n = 2^k` for each `k` in `exponents`.
pub fn run(exponents: impl IntoIterator<Item = u32>, seed: u64) -> BenchReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let points: Vec<BenchPoint> = exponents
        .into_iter()
        .map(|k| time_one(1usize << k, &mut rng))
        .collect();
    let xy: Vec<(f64, f64)> = points
        .iter()
        .map(|p| ((p.n as f64).ln(), p.seconds.max(1e-9).ln()))
        .collect();
    BenchReport {
        alpha: fit_slope(&xy),
        points,
    }
}

/// Ordinary least-squares slope; `NaN` for fewer than two distinct `x`.
pub fn fit_slope(xy: &[(f64, f64)]) -> f64 {
    let m = xy.len() as f64;
    let mx = xy.iter().map(|p| p.0).sum::<f64>() / m;
    let my = xy.iter().map(|p| p.1).sum::<f64>() / m;
    let sxy: f64 = xy.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = xy.iter().map(|p| (p.0 - mx).powi(2)).sum();
    sxy / sxx
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slope_of_a_power_law() {
        let xy: Vec<(f64, f64)> = (1..6)
            .map(|k| {
                let n = f64::from(k) * 10.0;
                (n.ln(), (3.0 * n * n).ln())
            })
            .collect();
        assert!((fit_slope(&xy) - 2.0).abs() < 1e-12);
    }

    #[test]
    fn random_lc_is_about_half() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let p = time_one(512, &mut rng);
        assert!(p.lc.abs_diff(256) <= 8);
        assert!(p.multiplications > 0);
    }
}
