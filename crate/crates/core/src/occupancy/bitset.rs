use super::word::{bit_index_map, slot_index, Word};
use crate::{Error, Result};

/// Flat array of `W`-bit blocks marking which of `p` slots are occupied.
///
/// Slots are 1-based. Bits past `p` in the last block stay zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockedBitset<W: Word = u64> {
    blocks: Vec<W>,
    len: usize,
}

impl<W: Word> BlockedBitset<W> {
    pub fn new(p: usize) -> Self {
        BlockedBitset {
            blocks: vec![W::ZERO; p.div_ceil(W::BITS as usize)],
            len: p,
        }
    }

    /// Logical slot count `p`.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn blocks(&self) -> &[W] {
        &self.blocks
    }

    pub fn insert(&mut self, i: usize) -> Result<()> {
        if i == 0 || i > self.len {
            return Err(Error::SlotOutOfRange { index: i, len: self.len });
        }
        self.insert_unchecked(i);
        Ok(())
    }

    #[inline(always)]
    pub(crate) fn insert_unchecked(&mut self, i: usize) {
        let (b, pb) = bit_index_map::<W>(i);
        self.blocks[b] |= W::ONE << pb;
    }

    pub fn contains(&self, i: usize) -> bool {
        if i == 0 || i > self.len {
            return false;
        }
        let (b, pb) = bit_index_map::<W>(i);
        !(self.blocks[b] & (W::ONE << pb)).is_zero()
    }

    pub fn count(&self) -> usize {
        self.blocks.iter().map(|w| w.popcount() as usize).sum()
    }

    /// Set slots in increasing order. Empty blocks cost one test each.
    pub fn iter(&self) -> BitsetIter<'_, W> {
        BitsetIter {
            blocks: &self.blocks,
            block: 0,
            current: self.blocks.first().copied().unwrap_or(W::ZERO),
        }
    }
}

pub struct BitsetIter<'a, W: Word> {
    blocks: &'a [W],
    block: usize,
    current: W,
}

impl<W: Word> Iterator for BitsetIter<'_, W> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        while self.current.is_zero() {
            self.block += 1;
            if self.block >= self.blocks.len() {
                return None;
            }
            self.current = self.blocks[self.block];
        }
        let pos = self.current.ctz();
        self.current = self.current ^ (W::ONE << pos);
        Some(slot_index::<W>(self.block, pos))
    }
}
