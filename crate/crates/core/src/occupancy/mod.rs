//! Occupancy indexes for pulling the valid slots out of an extremal array
//! that has gaps.
//!
//! Two structures share one contract (insert a 1-based slot, iterate the set
//! slots in order):
//!
//! * [`BlockedBitset`]: a flat array of machine words scanned with `ctz`.
//! * [`WAryOccupancyTree`]: the same leaf words plus summary levels that let
//!   iteration skip runs of empty words.

mod bitset;
mod tree;
mod word;

pub use bitset::{BitsetIter, BlockedBitset};
pub use tree::{closed_form_height, closed_form_word_count, TreeIter, WAryOccupancyTree};
pub use word::{
    bit_index_map, extract_with, extract_word_positions, extraction_trace, highest_set_position,
    leading_zeros_in, practical_linearity_check, slot_index, ClearStep, ExtractStep, Word,
};

use std::str::FromStr;

use crate::Error;

/// Which occupancy structure the reducer maintains.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum OccupancyKind {
    #[default]
    Array,
    Tree,
}

impl FromStr for OccupancyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "array" => Ok(OccupancyKind::Array),
            "tree" => Ok(OccupancyKind::Tree),
            other => Err(Error::UnknownName {
                kind: "occupancy",
                name: other.to_string(),
            }),
        }
    }
}

impl std::fmt::Display for OccupancyKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            OccupancyKind::Array => "array",
            OccupancyKind::Tree => "tree",
        })
    }
}

/// Runtime choice between the two 64-bit occupancy structures.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Occupancy {
    Array(BlockedBitset<u64>),
    Tree(WAryOccupancyTree<u64>),
}

impl Occupancy {
    pub fn new(kind: OccupancyKind, p: usize) -> Self {
        match kind {
            OccupancyKind::Array => Occupancy::Array(BlockedBitset::new(p)),
            OccupancyKind::Tree => Occupancy::Tree(WAryOccupancyTree::new(p)),
        }
    }

    pub fn kind(&self) -> OccupancyKind {
        match self {
            Occupancy::Array(_) => OccupancyKind::Array,
            Occupancy::Tree(_) => OccupancyKind::Tree,
        }
    }

    pub fn len(&self) -> usize {
        match self {
            Occupancy::Array(b) => b.len(),
            Occupancy::Tree(t) => t.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn insert(&mut self, i: usize) -> crate::Result<()> {
        match self {
            Occupancy::Array(b) => b.insert(i),
            Occupancy::Tree(t) => t.insert(i),
        }
    }

    #[inline]
    pub(crate) fn insert_unchecked(&mut self, i: usize) {
        match self {
            Occupancy::Array(b) => b.insert_unchecked(i),
            Occupancy::Tree(t) => t.insert_unchecked(i),
        }
    }

    pub fn contains(&self, i: usize) -> bool {
        match self {
            Occupancy::Array(b) => b.contains(i),
            Occupancy::Tree(t) => t.contains(i),
        }
    }

    /// Calls `f` on every set slot in increasing order.
    #[inline]
    pub fn for_each(&self, mut f: impl FnMut(usize)) {
        match self {
            Occupancy::Array(b) => b.iter().for_each(&mut f),
            Occupancy::Tree(t) => t.iter().for_each(&mut f),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.for_each(|i| out.push(i));
        out
    }
}
