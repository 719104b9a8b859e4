//! Exact enumeration of two-set shuffle products as fixed-popcount
//! binary integers.
//!
//! Elements of one homogeneous set are encoded as 0 bits and elements of
//! the other as 1 bits, so every interleaving of the two sets is one
//! unsigned integer whose significant region spans `zeros + ones` bits.
//! Starting from the smallest valid integer (all 1s grouped on the
//! right), two mutually recursive operations — doubling, and subtracting
//! a sliding run of 1s — visit every valid integer exactly once.
//!
//! [`enumerate`] drives the traversal through a visitor so callers
//! decide whether to stream, collect, or just count. [`oracle`] holds
//! independent brute-force checkers, [`treegraph`] materializes the
//! traversal tree with path metrics and DOT/JSON exports, and
//! [`formulas`] evaluates the exact count and storage-cost formulas in
//! big-integer arithmetic.

mod enumerator;
mod error;
mod event;
mod mask;
mod spec;

pub mod formulas;
pub mod oracle;
pub mod treegraph;

pub use enumerator::{
    enumerate, enumerate_values, initial_permutation, is_valid_permutation, shift_step,
    subtract_step,
};
pub use error::Error;
pub use event::{EdgeKind, EnumerationEvent};
pub use mask::{Bitmask, Subtrahend};
pub use spec::{ShuffleSpec, MAX_WIDTH};
