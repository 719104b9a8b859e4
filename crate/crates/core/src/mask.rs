use std::fmt;

/// One permutation of the shuffle product, packed into the low
/// `zeros + ones` bits of a `u64`. Every valid permutation carries
/// exactly `ones` set bits inside that significant region.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Bitmask(u64);

impl Bitmask {
    pub const fn new(value: u64) -> Self {
        Self(value)
    }

    pub const fn value(self) -> u64 {
        self.0
    }

    /// Number of set bits.
    pub const fn popcount(self) -> u32 {
        self.0.count_ones()
    }

    /// Binary rendering zero-padded to `width` digits; a zero-width
    /// region renders as the empty string.
    pub fn to_binary(self, width: u32) -> String {
        binary_string(self.0, width)
    }
}

impl fmt::Display for Bitmask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl From<u64> for Bitmask {
    fn from(value: u64) -> Self {
        Self(value)
    }
}

/// The value subtracted from a permutation to walk its right-hand zero
/// boundary through a run of ones. Always a (possibly empty) run of 1s
/// followed by a (possibly empty) run of 0s.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subtrahend(u64);

impl Subtrahend {
    pub const ZERO: Self = Self(0);

    pub const fn new(value: u64) -> Self {
        Self(value)
    }

    pub const fn value(self) -> u64 {
        self.0
    }

    /// The subtrahend that starts the subtraction run after one more
    /// shift: doubled plus one (0 becomes 1, 1 becomes 11, ...).
    pub const fn advance_on_shift(self) -> Self {
        Self(self.0 * 2 + 1)
    }

    /// The subtrahend for the next subtraction in the same run: doubled,
    /// sliding the run of 1s one bit left.
    pub const fn advance_on_subtract(self) -> Self {
        Self(self.0 * 2)
    }

    /// Unpadded binary rendering (used for edge labels).
    pub fn to_binary(self) -> String {
        format!("{:b}", self.0)
    }
}

impl fmt::Display for Subtrahend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub(crate) fn binary_string(value: u64, width: u32) -> String {
    if width == 0 {
        String::new()
    } else {
        format!("{value:0width$b}", width = width as usize)
    }
}
