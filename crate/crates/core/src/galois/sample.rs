use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::modp::pow_mod;
use super::{cycle_type_mod, specialize_integer, CycleType, IntPoly, Reduction, PRIME_LIMIT};
use crate::algebra::Rational;
use crate::error::{Error, Result};
use crate::exec::{self, Strategy};

/// Smallest start of a sampled prime range.
pub const MIN_START: u64 = 10_000;
/// Width of the window the seeded start offset is drawn from.
pub const START_WINDOW: u64 = 1_000_000;

/// Deterministic Miller-Rabin; the bases 2, 3, 5, 7 are exact below 3.2e9.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for small in [2u64, 3, 5, 7] {
        if n.is_multiple_of(small) {
            return n == small;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'bases: for a in [2u64, 3, 5, 7] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = ((x as u128 * x as u128) % n as u128) as u64;
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// First integer examined for a given seed, in `[10^4, 10^4 + 10^6)`.
pub fn start_offset(seed: u64) -> u64 {
    MIN_START + ChaCha8Rng::seed_from_u64(seed).random_range(0..START_WINDOW)
}

/// `count` consecutive primes starting at [`start_offset`]`(seed)`.
pub fn prime_sequence(seed: u64, count: usize) -> Vec<u64> {
    (start_offset(seed)..PRIME_LIMIT)
        .filter(|&n| is_prime(n))
        .take(count)
        .collect()
}

/// Counts of cycle types over a set of primes, plus the number of skipped primes.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CycleTypeHistogram {
    pub counts: BTreeMap<CycleType, usize>,
    pub skipped: usize,
}

impl CycleTypeHistogram {
    pub fn record(&mut self, reduction: Reduction) {
        match reduction {
            Reduction::Cycle(c) => *self.counts.entry(c).or_insert(0) += 1,
            Reduction::Skip(_) => self.skipped += 1,
        }
    }

    pub fn merge(&mut self, other: &CycleTypeHistogram) {
        for (c, n) in &other.counts {
            *self.counts.entry(c.clone()).or_insert(0) += n;
        }
        self.skipped += other.skipped;
    }

    /// Primes that produced a cycle type.
    pub fn good(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn examined(&self) -> usize {
        self.good() + self.skipped
    }

    pub fn is_empty(&self) -> bool {
        self.examined() == 0
    }

    /// Fraction of good primes whose cycle type satisfies `pred`.
    pub fn frequency(&self, pred: impl Fn(&CycleType) -> bool) -> f64 {
        let good = self.good();
        if good == 0 {
            return 0.0;
        }
        let hits: usize = self
            .counts
            .iter()
            .filter(|(c, _)| pred(c))
            .map(|(_, n)| n)
            .sum();
        hits as f64 / good as f64
    }

    pub fn skip_rate(&self) -> f64 {
        if self.examined() == 0 {
            0.0
        } else {
            self.skipped as f64 / self.examined() as f64
        }
    }
}

pub fn histogram_for_primes(f: &IntPoly, primes: &[u64]) -> CycleTypeHistogram {
    histogram_for_primes_with(f, primes, Strategy::default())
}

/// Reduces `f` at every prime under `strategy` and tallies the results.
/// Per-prime results are collected in input order and merged afterwards.
pub fn histogram_for_primes_with(f: &IntPoly, primes: &[u64], strategy: Strategy) -> CycleTypeHistogram {
    let reductions = exec::map(strategy, primes, |&p| cycle_type_mod(f, p));
    let mut hist = CycleTypeHistogram::default();
    for r in reductions {
        hist.record(r);
    }
    hist
}

pub fn sample_cycle_types(k0: &Rational, prime_count: usize, seed: u64) -> Result<CycleTypeHistogram> {
    sample_cycle_types_with(k0, prime_count, seed, Strategy::default())
}

/// Cycle types of `p(k0, x)` over `prime_count` consecutive primes from the seeded offset.
pub fn sample_cycle_types_with(
    k0: &Rational,
    prime_count: usize,
    seed: u64,
    strategy: Strategy,
) -> Result<CycleTypeHistogram> {
    if prime_count == 0 {
        return Err(Error::domain("prime_count must be at least 1"));
    }
    let f = specialize_integer(k0)?;
    let primes = prime_sequence(seed, prime_count);
    Ok(histogram_for_primes_with(&f, &primes, strategy))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_matches_trial_division() {
        let naive = |n: u64| n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d));
        for n in 0..5000u64 {
            assert_eq!(is_prime(n), naive(n), "n={n}");
        }
        for n in [1_000_003u64, 2_147_483_647, 3_215_031_751 - 2] {
            assert_eq!(is_prime(n), naive(n), "n={n}");
        }
    }

    #[test]
    fn prime_sequence_is_seeded_and_consecutive() {
        let a = prime_sequence(7, 20);
        assert_eq!(a, prime_sequence(7, 20));
        assert!(a[0] >= MIN_START);
        assert!(a.windows(2).all(|w| w[0] < w[1]));
        for w in a.windows(2) {
            assert!((w[0] + 1..w[1]).all(|n| !is_prime(n)));
        }
        assert!((start_offset(7)..a[0]).all(|n| !is_prime(n)));
    }

    #[test]
    fn single_prime_bookkeeping() {
        let k0 = Rational::from_integer(2.into());
        let h = sample_cycle_types(&k0, 1, 3).unwrap();
        assert_eq!(h.examined(), 1);
        assert!(sample_cycle_types(&k0, 0, 3).is_err());
    }
}
