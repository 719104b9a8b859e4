//! Independent brute-force generators and checkers for validating the
//! enumerator.
//!
//! Two oracles with different mechanisms are kept on purpose: an
//! exhaustive scan of the whole significant region, and a
//! same-popcount-successor walk. A bug in one cannot mask a bug in the
//! enumerator. Both are intentionally naive and never sit in a hot path.

use crate::enumerator::{enumerate, enumerate_values};
use crate::error::Error;
use crate::mask::Bitmask;
use crate::spec::{low_ones, ShuffleSpec};
use std::collections::BTreeMap;

/// Widest instance the exhaustive scan accepts (cost 2^width).
pub const SCAN_WIDTH_LIMIT: u32 = 30;

/// Widest instance the successor walk accepts.
pub const LEX_WIDTH_LIMIT: u32 = 40;

/// Every valid permutation in ascending order, found by scanning every
/// integer of the significant region and keeping those with the right
/// popcount.
pub fn scan_enumerate(spec: ShuffleSpec) -> Result<Vec<Bitmask>, Error> {
    if spec.width() > SCAN_WIDTH_LIMIT {
        return Err(Error::OracleTooLarge {
            width: spec.width(),
            limit: SCAN_WIDTH_LIMIT,
        });
    }
    let first = low_ones(spec.ones());
    let mut out = Vec::new();
    for candidate in first..=spec.full_mask() {
        if candidate.count_ones() == spec.ones() {
            out.push(Bitmask::new(candidate));
        }
    }
    Ok(out)
}

/// Every valid permutation in ascending order, via the next-larger
/// integer with the same popcount. Same output contract as
/// [`scan_enumerate`], much cheaper per element.
pub fn lex_enumerate(spec: ShuffleSpec) -> Result<Vec<Bitmask>, Error> {
    if spec.width() > LEX_WIDTH_LIMIT {
        return Err(Error::OracleTooLarge {
            width: spec.width(),
            limit: LEX_WIDTH_LIMIT,
        });
    }
    let first = low_ones(spec.ones());
    let last = first << spec.zeros();
    let mut out = Vec::new();
    let mut current = first;
    loop {
        out.push(Bitmask::new(current));
        if current == last {
            break;
        }
        current = next_same_popcount(current);
    }
    Ok(out)
}

/// Smallest integer greater than `v` with the same number of set bits
/// (Gosper's hack). `v` must be nonzero.
fn next_same_popcount(v: u64) -> u64 {
    debug_assert!(v != 0);
    let lowest = v & v.wrapping_neg();
    let carry = v + lowest;
    carry | (((v ^ carry) >> 2) / lowest)
}

/// All-ones mask over the significant region: the XOR mask under which
/// the swapped-input enumeration mirrors the original.
pub fn complement_mask(spec: ShuffleSpec) -> Bitmask {
    Bitmask::new(spec.full_mask())
}

/// Checks that enumerating with the set roles swapped yields, as a set,
/// the complement image of the original output.
pub fn verify_swap_isomorphism(spec: ShuffleSpec) -> bool {
    let mask = complement_mask(spec).value();
    let mut complemented: Vec<u64> = enumerate_values(spec)
        .iter()
        .map(|m| m.value() ^ mask)
        .collect();
    let mut swapped: Vec<u64> = enumerate_values(spec.swapped())
        .iter()
        .map(|m| m.value())
        .collect();
    complemented.sort_unstable();
    swapped.sort_unstable();
    complemented == swapped
}

/// Outcome of comparing the enumerator's output against an oracle.
///
/// The offending values are listed explicitly rather than collapsed to a
/// bare boolean so a failure is diagnosable from the report alone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub spec: ShuffleSpec,
    pub algorithm_count: u64,
    pub oracle_count: u64,
    /// Oracle values the enumerator never produced.
    pub missing: Vec<Bitmask>,
    /// Enumerator values outside the oracle set.
    pub extra: Vec<Bitmask>,
    /// Values the enumerator produced more than once.
    pub duplicates: Vec<Bitmask>,
    pub passed: bool,
}

/// Compares the enumerator's output, as a multiset, against
/// [`scan_enumerate`].
pub fn verify_against_oracle(spec: ShuffleSpec) -> Result<VerificationReport, Error> {
    let oracle = scan_enumerate(spec)?;
    Ok(compare_with(spec, &oracle))
}

/// Compares the enumerator's output, as a multiset, against an oracle's
/// sorted value list.
pub fn compare_with(spec: ShuffleSpec, oracle: &[Bitmask]) -> VerificationReport {
    let mut occurrences: BTreeMap<Bitmask, u64> = BTreeMap::new();
    let algorithm_count = enumerate(spec, |event| {
        *occurrences.entry(event.value).or_insert(0) += 1;
    });

    let missing: Vec<Bitmask> = oracle
        .iter()
        .copied()
        .filter(|m| !occurrences.contains_key(m))
        .collect();
    let extra: Vec<Bitmask> = occurrences
        .keys()
        .copied()
        .filter(|m| oracle.binary_search(m).is_err())
        .collect();
    let duplicates: Vec<Bitmask> = occurrences
        .iter()
        .filter(|(_, &n)| n > 1)
        .map(|(&m, _)| m)
        .collect();

    let oracle_count = oracle.len() as u64;
    let passed = missing.is_empty()
        && extra.is_empty()
        && duplicates.is_empty()
        && algorithm_count == oracle_count;
    VerificationReport {
        spec,
        algorithm_count,
        oracle_count,
        missing,
        extra,
        duplicates,
        passed,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(zeros: u32, ones: u32) -> ShuffleSpec {
        ShuffleSpec::new(zeros, ones).unwrap()
    }

    fn values(masks: &[Bitmask]) -> Vec<u64> {
        masks.iter().map(|m| m.value()).collect()
    }

    #[test]
    fn scan_covers_the_tictactoe_instance() {
        let out = scan_enumerate(spec(4, 5)).unwrap();
        assert_eq!(out.len(), 126);
        assert_eq!(out.first().unwrap().value(), 31);
        assert_eq!(out.last().unwrap().value(), 496);
    }

    #[test]
    fn scan_small_instances() {
        assert_eq!(
            values(&scan_enumerate(spec(3, 2)).unwrap()),
            [3, 5, 6, 9, 10, 12, 17, 18, 20, 24]
        );
        assert_eq!(values(&scan_enumerate(spec(0, 0)).unwrap()), [0]);
    }

    #[test]
    fn scan_rejects_wide_instances() {
        let err = scan_enumerate(spec(16, 15)).unwrap_err();
        assert_eq!(
            err,
            Error::OracleTooLarge {
                width: 31,
                limit: SCAN_WIDTH_LIMIT
            }
        );
    }

    #[test]
    fn lex_matches_scan() {
        for (zeros, ones) in [(3, 2), (4, 5), (1, 1), (0, 3), (3, 0), (0, 0), (6, 6)] {
            let s = spec(zeros, ones);
            assert_eq!(
                lex_enumerate(s).unwrap(),
                scan_enumerate(s).unwrap(),
                "oracles disagree on ({zeros},{ones})"
            );
        }
    }

    #[test]
    fn lex_rejects_wide_instances() {
        let err = lex_enumerate(spec(21, 20)).unwrap_err();
        assert_eq!(
            err,
            Error::OracleTooLarge {
                width: 41,
                limit: LEX_WIDTH_LIMIT
            }
        );
    }

    #[test]
    fn complement_mask_covers_region() {
        assert_eq!(complement_mask(spec(3, 2)).value(), 31);
        assert_eq!(complement_mask(spec(4, 5)).value(), 511);
        assert_eq!(complement_mask(spec(0, 0)).value(), 0);
    }

    #[test]
    fn swap_isomorphism_on_known_instances() {
        assert!(verify_swap_isomorphism(spec(3, 2)));
        assert!(verify_swap_isomorphism(spec(4, 5)));
        assert!(verify_swap_isomorphism(spec(1, 1)));
    }

    #[test]
    fn swapped_output_is_the_complement_image() {
        // Both directions of the (3,2) instance, complements sorted.
        let mask = complement_mask(spec(3, 2)).value();
        let mut complemented: Vec<u64> = enumerate_values(spec(3, 2))
            .iter()
            .map(|m| m.value() ^ mask)
            .collect();
        complemented.sort_unstable();
        assert_eq!(complemented, [7, 11, 13, 14, 19, 21, 22, 25, 26, 28]);

        let mut swapped: Vec<u64> = values(&enumerate_values(spec(2, 3)));
        swapped.sort_unstable();
        assert_eq!(swapped, complemented);
    }

    #[test]
    fn verification_reports_pass_on_known_instances() {
        for (zeros, ones, expected) in [(3, 2, 10), (4, 5, 126), (6, 6, 924)] {
            let report = verify_against_oracle(spec(zeros, ones)).unwrap();
            assert!(report.passed);
            assert_eq!(report.algorithm_count, expected);
            assert_eq!(report.oracle_count, expected);
            assert!(report.missing.is_empty());
            assert!(report.extra.is_empty());
            assert!(report.duplicates.is_empty());
        }
    }

    #[test]
    fn comparison_flags_missing_and_extra() {
        // Feed a deliberately wrong oracle list to prove the report
        // machinery can fail.
        let s = spec(1, 1);
        let wrong = [Bitmask::new(1), Bitmask::new(3)];
        let report = compare_with(s, &wrong);
        assert!(!report.passed);
        assert_eq!(values(&report.missing), [3]);
        assert_eq!(values(&report.extra), [2]);
    }
}
