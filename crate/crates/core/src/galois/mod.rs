//! Cycle-type evidence for the Galois group of `p(k0, x)`.
//!
//! `p` is specialized at a rational `k0`, scaled to a primitive integer
//! polynomial and reduced modulo many primes. At primes not dividing the
//! leading coefficient or the discriminant, the degrees of the irreducible
//! factors mod the prime give the cycle type of a Frobenius element
//! (Dedekind); their frequencies approach the cycle-type densities of the
//! Galois group (Chebotarev). The resulting report is statistical evidence,
//! not a proof.

mod evidence;
mod modp;
mod sample;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::algebra::{build_p, Rational, UniPoly};
use crate::error::{Error, Result};

pub use evidence::{s10_evidence, s_n_evidence, EvidenceReport, GaloisReport, Witnesses};
pub use sample::{
    histogram_for_primes, histogram_for_primes_with, is_prime, prime_sequence, sample_cycle_types,
    sample_cycle_types_with, start_offset, CycleTypeHistogram,
};

/// Primes used for reduction are kept below this bound.
pub const PRIME_LIMIT: u64 = 1 << 31;

/// Primitive integer polynomial, lowest degree first, positive leading coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    /// Scales a rational polynomial to a primitive integer one.
    pub fn primitive_part(poly: &UniPoly) -> Result<Self> {
        if poly.is_zero() {
            return Err(Error::DegenerateInput("zero polynomial has no primitive part".into()));
        }
        let lcm = poly
            .coeffs()
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = poly
            .coeffs()
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        Ok(Self::from_integers(ints))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn from_integers(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        let content = coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if !content.is_zero() {
            let content = if coeffs.last().is_some_and(|c| c.is_negative()) {
                -content
            } else {
                content
            };
            for c in &mut coeffs {
                *c = &*c / &content;
            }
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_integers(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Coefficients reduced into `[0, prime)`.
    pub fn reduce(&self, prime: u64) -> Vec<u64> {
        let m = BigInt::from(prime);
        let mut out: Vec<u64> = self
            .coeffs
            .iter()
            .map(|c| c.mod_floor(&m).to_u64().expect("residue fits in u64"))
            .collect();
        while out.last() == Some(&0) {
            out.pop();
        }
        out
    }
}

/// `p(k0, x)` as a primitive integer polynomial of degree 10.
pub fn specialize_integer(k0: &Rational) -> Result<IntPoly> {
    if *k0 < Rational::one() {
        return Err(Error::domain(format!("k0 must be >= 1, got {k0}")));
    }
    let spec = build_p().specialize(k0);
    if spec.degree() != Some(10) {
        return Err(Error::DegreeDrop(k0.to_string()));
    }
    IntPoly::primitive_part(&spec)
}

/// Multiset of factor degrees, stored in nonincreasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType(Vec<u32>);

impl CycleType {
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        CycleType(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    /// A permutation is odd iff it has an odd number of even-length cycles.
    pub fn is_odd(&self) -> bool {
        self.0.iter().filter(|&&c| c % 2 == 0).count() % 2 == 1
    }

    pub fn contains_part(&self, n: u32) -> bool {
        self.0.contains(&n)
    }

    /// Parses keys such as `"7+2+1"`.
    pub fn parse(key: &str) -> Result<Self> {
        key.split('+')
            .map(|s| {
                s.trim()
                    .parse::<u32>()
                    .ok()
                    .filter(|&v| v > 0)
                    .ok_or_else(|| Error::Format(format!("bad cycle type {key:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(CycleType::new)
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join("+"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SkipReason {
    /// The prime divides the leading coefficient.
    LeadingCoefficient,
    /// The reduction is not squarefree (the prime divides the discriminant).
    Ramified,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Reduction {
    Cycle(CycleType),
    Skip(SkipReason),
}

/// Frobenius cycle type of `f` at `prime`, or a skip for bad primes.
pub fn cycle_type_mod(f: &IntPoly, prime: u64) -> Reduction {
    debug_assert!((2..PRIME_LIMIT).contains(&prime));
    let reduced = f.reduce(prime);
    if modp::degree(&reduced) != f.degree() {
        return Reduction::Skip(SkipReason::LeadingCoefficient);
    }
    let g = modp::gcd(&reduced, &modp::derivative(&reduced, prime), prime);
    if modp::degree(&g) != Some(0) {
        return Reduction::Skip(SkipReason::Ramified);
    }
    Reduction::Cycle(CycleType::new(modp::distinct_degree_pattern(&reduced, prime)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn small_reductions() {
        let f = IntPoly::from_i64(&[1, 0, 1]);
        assert_eq!(cycle_type_mod(&f, 3), Reduction::Cycle(CycleType::new(vec![2])));
        let g = IntPoly::from_i64(&[-1, 0, 1]);
        assert_eq!(cycle_type_mod(&g, 7), Reduction::Cycle(CycleType::new(vec![1, 1])));
        assert_eq!(cycle_type_mod(&g, 2), Reduction::Skip(SkipReason::Ramified));
        let h = IntPoly::from_i64(&[1, 1, 5]);
        assert_eq!(cycle_type_mod(&h, 5), Reduction::Skip(SkipReason::LeadingCoefficient));
    }

    #[test]
    fn specialization_is_primitive_degree_ten() {
        for k in [1, 2, 3] {
            let f = specialize_integer(&q(k)).unwrap();
            assert_eq!(f.degree(), Some(10));
            assert_eq!(f.content(), BigInt::one());
            assert!(f.coeffs()[10].is_positive());
        }
        assert!(specialize_integer(&q(0)).is_err());
    }

    #[test]
    fn cycle_type_keys() {
        let c = CycleType::new(vec![1, 7, 2]);
        assert_eq!(c.to_string(), "7+2+1");
        assert_eq!(CycleType::parse("7+2+1").unwrap(), c);
        assert!(c.is_odd());
        assert!(CycleType::new(vec![10]).is_odd());
        assert!(!CycleType::new(vec![1; 10]).is_odd());
        assert!(CycleType::parse("7+0").is_err());
    }
}
