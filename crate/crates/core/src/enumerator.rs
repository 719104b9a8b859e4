//! The shift/subtract traversal that visits every element of the
//! shuffle product exactly once.
//!
//! Starting from the smallest valid permutation (all 1s grouped on the
//! right), shifting doubles the value until the 1s reach the left edge
//! of the significant region, and each shift result is fed to a run of
//! subtractions that cascade the right-hand 0s through the contiguous
//! 1s. The two operations recurse into each other; base cases cap a
//! branch at `zeros` shifts and `ones - 1` subtractions.

use crate::error::Error;
use crate::event::{EdgeKind, EnumerationEvent};
use crate::mask::{Bitmask, Subtrahend};
use crate::spec::{low_ones, ShuffleSpec};

/// Smallest valid permutation: every 1 grouped at the right of the
/// significant region.
pub fn initial_permutation(spec: ShuffleSpec) -> Bitmask {
    Bitmask::new(low_ones(spec.ones()))
}

/// One shift step: doubles the permutation.
pub fn shift_step(p: Bitmask) -> Bitmask {
    Bitmask::new(p.value() << 1)
}

/// One subtraction step. With a traversal-correct subtrahend the result
/// keeps the popcount of `p`; a subtrahend larger than `p` is an error.
pub fn subtract_step(p: Bitmask, v: Subtrahend) -> Result<Bitmask, Error> {
    p.value()
        .checked_sub(v.value())
        .map(Bitmask::new)
        .ok_or(Error::SubtrahendUnderflow {
            value: p,
            subtrahend: v,
        })
}

/// True iff `p` has exactly `ones` set bits, none outside the
/// significant region.
pub fn is_valid_permutation(p: Bitmask, spec: ShuffleSpec) -> bool {
    p.popcount() == spec.ones() && p.value() & !spec.full_mask() == 0
}

/// Walks the complete shuffle product of `spec`, handing every
/// permutation to `visitor` exactly once in traversal order, root first.
/// Returns the number of events emitted.
///
/// If either set is empty the traversal degenerates to the root alone
/// and the count is 1.
pub fn enumerate<F>(spec: ShuffleSpec, mut visitor: F) -> u64
where
    F: FnMut(&EnumerationEvent),
{
    let mut walk = Walk {
        spec,
        visitor: &mut visitor,
        emitted: 0,
    };
    let root = initial_permutation(spec);
    walk.emit(EnumerationEvent {
        index: 0,
        value: root,
        parent_index: None,
        edge: EdgeKind::Root,
        subtrahend_used: None,
        shift_count: 0,
        subtract_count: 0,
    });
    if spec.zeros() > 0 && spec.ones() > 0 {
        walk.shift(root, Subtrahend::ZERO, 0, 0, 0);
    }
    walk.emitted
}

/// Convenience wrapper that buffers every emitted value in emission
/// order. Prefer [`enumerate`] when the output is large.
pub fn enumerate_values(spec: ShuffleSpec) -> Vec<Bitmask> {
    let mut values = Vec::new();
    enumerate(spec, |event| values.push(event.value));
    values
}

struct Walk<'a, F> {
    spec: ShuffleSpec,
    visitor: &'a mut F,
    emitted: u64,
}

impl<F: FnMut(&EnumerationEvent)> Walk<'_, F> {
    fn emit(&mut self, event: EnumerationEvent) {
        (self.visitor)(&event);
        self.emitted += 1;
    }

    /// Shift phase: keep doubling until `zeros` shifts have been taken
    /// on this branch, handing each shift result to a subtraction run.
    fn shift(&mut self, mut p: Bitmask, mut v: Subtrahend, mut i: u32, j: u32, mut parent: u64) {
        while i < self.spec.zeros() {
            p = shift_step(p);
            i += 1;
            v = v.advance_on_shift();
            let index = self.emitted;
            self.emit(EnumerationEvent {
                index,
                value: p,
                parent_index: Some(parent),
                edge: EdgeKind::Shift,
                subtrahend_used: None,
                shift_count: i,
                subtract_count: j,
            });
            self.subtract(p, v, i, j, index);
            parent = index;
        }
    }

    /// Subtraction phase: cascade the zero boundary through the run of
    /// 1s, doubling the subtrahend each time, and shift each result.
    /// Stops after `ones - 1` subtractions on this branch so a single 1
    /// always separates the cascading 0s from the left-hand 0s.
    fn subtract(&mut self, mut p: Bitmask, mut v: Subtrahend, i: u32, mut j: u32, mut parent: u64) {
        while j < self.spec.ones() - 1 {
            let used = v;
            p = subtract_step(p, used).expect("traversal subtrahend exceeds permutation");
            j += 1;
            let index = self.emitted;
            self.emit(EnumerationEvent {
                index,
                value: p,
                parent_index: Some(parent),
                edge: EdgeKind::Subtract,
                subtrahend_used: Some(used),
                shift_count: i,
                subtract_count: j,
            });
            v = used.advance_on_subtract();
            self.shift(p, v, i, j, index);
            parent = index;
        }
    }
}
