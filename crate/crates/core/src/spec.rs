use crate::error::Error;

/// Widest instance a single unsigned 64-bit carrier can hold.
pub const MAX_WIDTH: u32 = 64;

/// One problem instance: how many elements are encoded as 0 bits and how
/// many as 1 bits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ShuffleSpec {
    zeros: u32,
    ones: u32,
}

impl ShuffleSpec {
    /// Builds a spec, rejecting instances wider than [`MAX_WIDTH`] bits.
    pub fn new(zeros: u32, ones: u32) -> Result<Self, Error> {
        let width = u64::from(zeros) + u64::from(ones);
        if width > u64::from(MAX_WIDTH) {
            return Err(Error::InstanceTooLarge {
                width,
                limit: MAX_WIDTH,
            });
        }
        Ok(Self { zeros, ones })
    }

    /// Elements encoded as 0 bits.
    pub fn zeros(self) -> u32 {
        self.zeros
    }

    /// Elements encoded as 1 bits.
    pub fn ones(self) -> u32 {
        self.ones
    }

    /// Width of the significant region in bits.
    pub fn width(self) -> u32 {
        self.zeros + self.ones
    }

    /// All-ones mask covering the significant region.
    pub fn full_mask(self) -> u64 {
        low_ones(self.width())
    }

    /// The same instance with the set roles exchanged.
    pub fn swapped(self) -> Self {
        Self {
            zeros: self.ones,
            ones: self.zeros,
        }
    }
}

/// The lowest `n` bits set, for `n <= 64`.
pub(crate) fn low_ones(n: u32) -> u64 {
    if n == 0 {
        0
    } else {
        u64::MAX >> (64 - n)
    }
}
