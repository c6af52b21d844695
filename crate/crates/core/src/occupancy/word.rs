use std::fmt::Debug;
use std::ops::{BitAnd, BitOr, BitOrAssign, BitXor, Not, Shl};

/// Unsigned machine word used as a block of occupancy bits.
pub trait Word:
    Copy
    + Eq
    + Debug
    + Default
    + Send
    + Sync
    + 'static
    + BitAnd<Output = Self>
    + BitOr<Output = Self>
    + BitOrAssign
    + BitXor<Output = Self>
    + Not<Output = Self>
    + Shl<u32, Output = Self>
{
    const BITS: u32;
    /// log2 of `BITS`.
    const SHIFT: u32;
    const ZERO: Self;
    const ONE: Self;
    const ALL: Self;

    fn ctz(self) -> u32;
    fn clz(self) -> u32;
    fn popcount(self) -> u32;
    fn is_zero(self) -> bool {
        self == Self::ZERO
    }
}

macro_rules! impl_word {
    ($t:ty, $shift:expr) => {
        impl Word for $t {
            const BITS: u32 = <$t>::BITS;
            const SHIFT: u32 = $shift;
            const ZERO: Self = 0;
            const ONE: Self = 1;
            const ALL: Self = <$t>::MAX;

            #[inline(always)]
            fn ctz(self) -> u32 {
                self.trailing_zeros()
            }
            #[inline(always)]
            fn clz(self) -> u32 {
                self.leading_zeros()
            }
            #[inline(always)]
            fn popcount(self) -> u32 {
                self.count_ones()
            }
        }
    };
}

impl_word!(u8, 3);
impl_word!(u16, 4);
impl_word!(u32, 5);
impl_word!(u64, 6);

/// How a found bit is cleared from the working word.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ClearStep {
    /// `x = x ^ (1 << pos)`
    #[default]
    Xor,
    /// `x = x & !(1 << pos)`
    AndNot,
}

/// One pass of the extraction loop: the word before, the position found and
/// the word after clearing it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExtractStep<W> {
    pub before: W,
    pub pos: u32,
    pub after: W,
}

/// Positions of the set bits of `x`, lowest first.
///
/// Runs one iteration per set bit using count-trailing-zeros. The loop tests
/// for zero before each `ctz` call.
pub fn extract_word_positions<W: Word>(x: W) -> Vec<u32> {
    extract_with(x, ClearStep::Xor)
}

pub fn extract_with<W: Word>(mut x: W, step: ClearStep) -> Vec<u32> {
    let mut out = Vec::with_capacity(x.popcount() as usize);
    while !x.is_zero() {
        let pos = x.ctz();
        out.push(pos);
        x = clear(x, pos, step);
    }
    out
}

/// Same loop as [`extract_word_positions`], recording every iteration.
pub fn extraction_trace<W: Word>(mut x: W, step: ClearStep) -> Vec<ExtractStep<W>> {
    let mut steps = Vec::new();
    while !x.is_zero() {
        let pos = x.ctz();
        let after = clear(x, pos, step);
        steps.push(ExtractStep { before: x, pos, after });
        x = after;
    }
    steps
}

#[inline(always)]
fn clear<W: Word>(x: W, pos: u32, step: ClearStep) -> W {
    match step {
        ClearStep::Xor => x ^ (W::ONE << pos),
        ClearStep::AndNot => x & !(W::ONE << pos),
    }
}

/// Position of the highest set bit, counted from bit 0 on the right.
///
/// This is hardware `clz` corrected for the word width, so it does not depend
/// on how wide the word is: `0b10101` gives 4 in any word type.
pub fn highest_set_position<W: Word>(x: W) -> Option<u32> {
    if x.is_zero() {
        None
    } else {
        Some(W::BITS - 1 - x.clz())
    }
}

/// Leading zeros of `x` read as a `width`-bit word.
pub fn leading_zeros_in<W: Word>(x: W, width: u32) -> u32 {
    debug_assert!(width <= W::BITS);
    x.clz() - (W::BITS - width)
}

/// Block and in-block position of 1-based slot `i` for `W`-bit blocks.
#[inline(always)]
pub fn bit_index_map<W: Word>(i: usize) -> (usize, u32) {
    debug_assert!(i >= 1);
    let j = i - 1;
    (j >> W::SHIFT, (j & (W::BITS as usize - 1)) as u32)
}

/// Inverse of [`bit_index_map`].
#[inline(always)]
pub fn slot_index<W: Word>(block: usize, pos: u32) -> usize {
    block * W::BITS as usize + pos as usize + 1
}

/// True when skipping empty words cannot dominate extraction: `p < n(w + 1)`.
pub fn practical_linearity_check(n: u64, p: u64, w: u32) -> bool {
    (p as u128) < n as u128 * (w as u128 + 1)
}
