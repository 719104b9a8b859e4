//! Exact evaluation of the result-set cardinality and storage formulas
//! on arbitrary-precision integers.
//!
//! Counts overflow 64 bits quickly (two sets of 40 already need 77
//! bits), so everything here stays in exact big-integer arithmetic; no
//! floating point is involved anywhere, including the log2 ceiling.

use crate::error::Error;
use num_bigint::BigUint;

/// Exact non-negative integer used by the formulas.
pub type BigCount = BigUint;

/// Number of permutations in the shuffle product of two sets of sizes
/// `x` and `y`: the binomial coefficient C(x + y, x).
///
/// Computed in the multiplicative form, one exact division per step,
/// rather than through full factorials.
pub fn shuffle_count(x: u64, y: u64) -> BigCount {
    let n = x.checked_add(y).expect("set sizes overflow u64");
    let k = x.min(y);
    let mut result = BigUint::from(1u32);
    for step in 1..=k {
        result *= n - k + step;
        // The running product of `step` consecutive integers divides
        // evenly by step!.
        result /= step;
    }
    result
}

/// Bytes needed to store the complete shuffle product of two sets of
/// sizes `x` and `y`, with each permutation held in the power-of-two
/// *bit* width that covers `x + y` bits, rounded up to whole bytes.
///
/// Note the per-element cost is a rounded bit width, not a byte count:
/// two sets of 10 need 32-bit values, so 184756 permutations take
/// 739024 bytes.
pub fn storage_bytes(x: u64, y: u64) -> Result<BigCount, Error> {
    let width = x.checked_add(y).expect("set sizes overflow u64");
    if width == 0 {
        return Err(Error::StorageUndefinedForEmptySets);
    }
    Ok(shuffle_count(x, y) * bytes_per_permutation(width))
}

/// ceil(2^ceil(log2(width)) / 8) for `width >= 1`.
pub fn bytes_per_permutation(width: u64) -> u64 {
    let exponent = ceil_log2(width);
    if exponent >= 3 {
        1u64 << (exponent - 3)
    } else {
        1
    }
}

/// Integer ceil(log2(n)) for `n >= 1`, via bit length so exact powers of
/// two land on the boundary.
fn ceil_log2(n: u64) -> u32 {
    debug_assert!(n >= 1);
    64 - (n - 1).leading_zeros()
}
