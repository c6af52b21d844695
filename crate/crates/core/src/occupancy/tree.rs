use super::word::{bit_index_map, Word};
use crate::{Error, Result};

/// A `w`-ary summary tree over a blocked bitset.
///
/// The leaves are the bitset blocks. Every level above stores one bit per
/// child word, set iff that child is non-zero, so iteration can skip whole
/// empty subtrees. Only insert and ordered iteration are supported.
///
/// Levels are flat word arrays, root first. Each level holds
/// `ceil(child_words / w)` words, so a `p` that is not a power of `w` gives a
/// ragged right edge rather than a fully padded tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WAryOccupancyTree<W: Word = u64> {
    levels: Vec<Vec<W>>,
    len: usize,
}

impl<W: Word> WAryOccupancyTree<W> {
    pub fn new(p: usize) -> Self {
        let mut sizes = vec![p.div_ceil(W::BITS as usize).max(1)];
        while *sizes.last().unwrap() > 1 {
            let next = sizes.last().unwrap().div_ceil(W::BITS as usize);
            sizes.push(next);
        }
        sizes.reverse();
        WAryOccupancyTree {
            levels: sizes.into_iter().map(|n| vec![W::ZERO; n]).collect(),
            len: p,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Number of levels above the leaves.
    pub fn height(&self) -> usize {
        self.levels.len() - 1
    }

    /// Total words over all levels.
    pub fn word_count(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }

    /// Words per level, root first.
    pub fn level_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }

    pub fn leaves(&self) -> &[W] {
        self.levels.last().unwrap()
    }

    pub fn insert(&mut self, i: usize) -> Result<()> {
        if i == 0 || i > self.len {
            return Err(Error::SlotOutOfRange { index: i, len: self.len });
        }
        self.insert_unchecked(i);
        Ok(())
    }

    /// Sets the leaf bit and walks up, stopping at the first ancestor bit that
    /// was already set.
    #[inline]
    pub(crate) fn insert_unchecked(&mut self, i: usize) {
        let mut slot = i;
        for level in self.levels.iter_mut().rev() {
            let (word, pos) = bit_index_map::<W>(slot);
            let mask = W::ONE << pos;
            let was_set = !(level[word] & mask).is_zero();
            level[word] |= mask;
            if was_set {
                break;
            }
            slot = word + 1;
        }
    }

    pub fn contains(&self, i: usize) -> bool {
        if i == 0 || i > self.len {
            return false;
        }
        let (word, pos) = bit_index_map::<W>(i);
        !(self.leaves()[word] & (W::ONE << pos)).is_zero()
    }

    /// Set slots in increasing order, descending only into non-empty children.
    pub fn iter(&self) -> TreeIter<'_, W> {
        let mut stack = Vec::with_capacity(self.levels.len());
        stack.push(Frame {
            level: 0,
            node: 0,
            remaining: self.levels[0][0],
        });
        TreeIter { tree: self, stack }
    }
}

struct Frame<W> {
    level: usize,
    node: usize,
    remaining: W,
}

pub struct TreeIter<'a, W: Word> {
    tree: &'a WAryOccupancyTree<W>,
    stack: Vec<Frame<W>>,
}

impl<W: Word> Iterator for TreeIter<'_, W> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        let leaf_level = self.tree.levels.len() - 1;
        loop {
            let top = self.stack.last_mut()?;
            if top.remaining.is_zero() {
                self.stack.pop();
                continue;
            }
            let pos = top.remaining.ctz();
            top.remaining = top.remaining ^ (W::ONE << pos);
            let child = top.node * W::BITS as usize + pos as usize;
            if top.level == leaf_level {
                return Some(child + 1);
            }
            let level = top.level + 1;
            self.stack.push(Frame {
                level,
                node: child,
                remaining: self.tree.levels[level][child],
            });
        }
    }
}

/// Height from the closed form `log_w((w - 1) p + w) - 2`, rounded up.
///
/// Agrees with [`WAryOccupancyTree::height`] when `p` is a power of `w`.
pub fn closed_form_height(p: u64, w: u64) -> u32 {
    let target = (w as u128 - 1) * p as u128 + w as u128;
    let mut k = 0u32;
    let mut pow = 1u128;
    while pow < target {
        pow *= w as u128;
        k += 1;
    }
    k.saturating_sub(2)
}

/// Word count of a complete `w`-ary tree of height `h`:
/// `(w^(h+1) - 1) / (w - 1)`.
pub fn closed_form_word_count(h: u32, w: u64) -> u128 {
    ((w as u128).pow(h + 1) - 1) / (w as u128 - 1)
}
