use std::collections::BTreeMap;

use serde::Serialize;

use super::{CycleType, CycleTypeHistogram};
use crate::error::{Error, Result};

fn is_small_prime(n: u32) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Primes `l` with `n/2 < l <= n - 3`; a transitive group of degree `n`
/// containing an `l`-cycle is primitive, and then contains `A_n` (Jordan).
fn jordan_primes(n: u32) -> Vec<u32> {
    (n / 2 + 1..=n.saturating_sub(3)).filter(|&l| is_small_prime(l)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Witnesses {
    /// Some prime gave a single factor of full degree, so the specialization
    /// is irreducible over the rationals and the group is transitive.
    pub irreducible: bool,
    /// Some cycle type has a part equal to a prime in `(n/2, n - 3]`; a power
    /// of that Frobenius element is a cycle of that prime length.
    pub large_prime_cycle: bool,
    /// Some cycle type has an odd number of even parts, so the group is not
    /// contained in `A_n`.
    pub odd_permutation: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EvidenceReport {
    pub degree: u32,
    pub witnesses: Witnesses,
    /// All three witnesses present: consistent with the full symmetric group.
    pub verdict: bool,
}

/// Evidence that the Galois group of a degree-`n` polynomial is `S_n`.
pub fn s_n_evidence(hist: &CycleTypeHistogram, n: u32) -> Result<EvidenceReport> {
    if hist.is_empty() {
        return Err(Error::EmptyHistogram);
    }
    if let Some(bad) = hist.counts.keys().find(|c| c.total() != n) {
        return Err(Error::DegenerateInput(format!(
            "cycle type {bad} does not partition {n}"
        )));
    }
    let primes = jordan_primes(n);
    let types: Vec<&CycleType> = hist.counts.keys().collect();
    let witnesses = Witnesses {
        irreducible: types.iter().any(|c| c.parts() == [n]),
        large_prime_cycle: types
            .iter()
            .any(|c| primes.iter().any(|&l| c.contains_part(l))),
        odd_permutation: types.iter().any(|c| c.is_odd()),
    };
    Ok(EvidenceReport {
        degree: n,
        witnesses,
        verdict: witnesses.irreducible && witnesses.large_prime_cycle && witnesses.odd_permutation,
    })
}

/// [`s_n_evidence`] for the degree-10 polynomial `p`.
pub fn s10_evidence(hist: &CycleTypeHistogram) -> Result<EvidenceReport> {
    s_n_evidence(hist, 10)
}

/// Serializable summary of a sampling run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GaloisReport {
    pub k0: String,
    pub seed: u64,
    pub primes: usize,
    pub skipped: usize,
    pub patterns: BTreeMap<String, usize>,
    pub witnesses: Witnesses,
    pub verdict: bool,
    pub note: &'static str,
}

impl GaloisReport {
    pub fn new(k0: String, seed: u64, hist: &CycleTypeHistogram, evidence: &EvidenceReport) -> Self {
        GaloisReport {
            k0,
            seed,
            primes: hist.examined(),
            skipped: hist.skipped,
            patterns: hist
                .counts
                .iter()
                .map(|(c, n)| (c.to_string(), *n))
                .collect(),
            witnesses: evidence.witnesses,
            verdict: evidence.verdict,
            note: "Frobenius cycle-type statistics (Dedekind/Chebotarev); evidence, not a proof",
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report always serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hist(entries: &[(&[u32], usize)]) -> CycleTypeHistogram {
        let mut h = CycleTypeHistogram::default();
        for (parts, n) in entries {
            h.counts.insert(CycleType::new(parts.to_vec()), *n);
        }
        h
    }

    #[test]
    fn jordan_range_for_ten_is_seven() {
        assert_eq!(jordan_primes(10), vec![7]);
        assert!(jordan_primes(4).is_empty());
    }

    #[test]
    fn full_witness_set() {
        let h = hist(&[(&[10], 1), (&[7, 2, 1], 1)]);
        let rep = s10_evidence(&h).unwrap();
        assert!(rep.witnesses.irreducible);
        assert!(rep.witnesses.large_prime_cycle);
        assert!(rep.witnesses.odd_permutation);
        assert!(rep.verdict);
    }

    #[test]
    fn identity_only() {
        let h = hist(&[(&[1; 10], 5)]);
        let rep = s10_evidence(&h).unwrap();
        assert_eq!(
            rep.witnesses,
            Witnesses { irreducible: false, large_prime_cycle: false, odd_permutation: false }
        );
        assert!(!rep.verdict);
    }

    #[test]
    fn empty_and_inconsistent_histograms() {
        assert_eq!(s10_evidence(&CycleTypeHistogram::default()), Err(Error::EmptyHistogram));
        let h = hist(&[(&[3, 3], 1)]);
        assert!(matches!(s10_evidence(&h), Err(Error::DegenerateInput(_))));
    }

    #[test]
    fn report_json_shape() {
        let mut h = hist(&[(&[10], 2), (&[7, 2, 1], 1)]);
        h.skipped = 1;
        let rep = s10_evidence(&h).unwrap();
        let doc = GaloisReport::new("2".into(), 0, &h, &rep);
        let v: serde_json::Value = serde_json::from_str(&doc.to_json()).unwrap();
        assert_eq!(v["k0"], "2");
        assert_eq!(v["primes"], 4);
        assert_eq!(v["skipped"], 1);
        assert_eq!(v["patterns"]["10"], 2);
        assert_eq!(v["patterns"]["7+2+1"], 1);
        assert_eq!(v["verdict"], true);
        assert_eq!(v["witnesses"]["odd_permutation"], true);
    }
}
