//! Single-word vertex bitsets.
//!
//! Every graph in this crate keeps its vertex sets in one machine word, so the
//! word type bounds the vertex count: `u64` hosts up to 64 vertices, `u128`
//! up to 128.

use std::fmt::Debug;
use std::hash::Hash;

use num_traits::PrimInt;

/// An unsigned integer used as a fixed-width vertex bitset.
pub trait BitWord: PrimInt + Hash + Debug + Default + Send + Sync + 'static {
    /// Number of vertices one word can address.
    const BITS: usize;

    #[inline]
    fn bit(i: usize) -> Self {
        debug_assert!(i < Self::BITS);
        Self::one() << i
    }

    /// The lowest `n` bits set.
    #[inline]
    fn low_mask(n: usize) -> Self {
        if n >= Self::BITS {
            Self::max_value()
        } else {
            (Self::one() << n) - Self::one()
        }
    }

    #[inline]
    fn has(self, i: usize) -> bool {
        (self >> i) & Self::one() == Self::one()
    }

    #[inline]
    fn with(self, i: usize) -> Self {
        self | Self::bit(i)
    }

    #[inline]
    fn without(self, i: usize) -> Self {
        self & !Self::bit(i)
    }

    #[inline]
    fn len(self) -> usize {
        self.count_ones() as usize
    }

    #[inline]
    fn is_empty(self) -> bool {
        self == Self::zero()
    }

    #[inline]
    fn lowest(self) -> Option<usize> {
        if self.is_zero() {
            None
        } else {
            Some(self.trailing_zeros() as usize)
        }
    }

    /// Bits strictly above position `i`.
    #[inline]
    fn above(i: usize) -> Self {
        !Self::low_mask(i + 1)
    }

    fn ones(self) -> Ones<Self> {
        Ones(self)
    }
}

impl BitWord for u32 {
    const BITS: usize = 32;
}

impl BitWord for u64 {
    const BITS: usize = 64;
}

impl BitWord for u128 {
    const BITS: usize = 128;
}

/// Iterator over set bit positions, lowest first.
#[derive(Clone, Copy, Debug)]
pub struct Ones<W>(W);

impl<W: BitWord> Iterator for Ones<W> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        let i = self.0.lowest()?;
        self.0 = self.0 & (self.0 - W::one());
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.len();
        (n, Some(n))
    }
}

impl<W: BitWord> ExactSizeIterator for Ones<W> {}

pub fn from_iter<W: BitWord>(it: impl IntoIterator<Item = usize>) -> W {
    it.into_iter().fold(W::zero(), |acc, v| acc.with(v))
}
