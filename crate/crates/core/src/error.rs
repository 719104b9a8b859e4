use crate::mask::{Bitmask, Subtrahend};

/// Errors shared by every module in this crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// The combined set sizes exceed what the carrier integer (or an
    /// in-memory tree) can hold.
    #[error("instance too large: width {width} exceeds the {limit}-bit limit")]
    InstanceTooLarge { width: u64, limit: u32 },

    /// The requested brute-force oracle would walk too many candidates.
    #[error("oracle too large: width {width} exceeds the {limit}-bit oracle limit")]
    OracleTooLarge { width: u32, limit: u32 },

    /// A subtraction would underflow. Traversal-correct subtrahends never
    /// exceed the permutation they are subtracted from, so hitting this
    /// means the caller stepped outside the traversal.
    #[error("subtrahend {subtrahend} exceeds permutation {value}")]
    SubtrahendUnderflow {
        value: Bitmask,
        subtrahend: Subtrahend,
    },

    /// `storage_bytes` is undefined when both sets are empty (log2 of 0).
    #[error("storage is undefined when both sets are empty")]
    StorageUndefinedForEmptySets,
}
