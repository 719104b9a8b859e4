use crate::mask::{Bitmask, Subtrahend};
use serde::{Deserialize, Serialize};

/// How an emitted permutation was derived from its parent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeKind {
    /// The initial permutation; has no parent.
    Root,
    /// The parent doubled (one left shift).
    Shift,
    /// The parent minus the current subtrahend; popcount preserved.
    Subtract,
}

/// One emitted permutation together with its traversal provenance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationEvent {
    /// 0-based emission ordinal; the root is 0.
    pub index: u64,
    pub value: Bitmask,
    /// Emission ordinal of the event this one was derived from; `None`
    /// only for the root.
    pub parent_index: Option<u64>,
    pub edge: EdgeKind,
    /// The subtrahend applied; present exactly on `Subtract` edges.
    pub subtrahend_used: Option<Subtrahend>,
    /// Shifts taken so far on this branch.
    pub shift_count: u32,
    /// Subtractions taken so far on this branch.
    pub subtract_count: u32,
}
