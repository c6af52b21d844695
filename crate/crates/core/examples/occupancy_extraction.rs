//! Word-level set-bit extraction, the slot <-> (block, bit) mapping, and the
//! flat bitset against the w-ary tree.

use std::time::Instant;

use hullprep::harness::random_slots;
use hullprep::occupancy::{
    bit_index_map, extraction_trace, practical_linearity_check, slot_index, BlockedBitset,
    ClearStep, WAryOccupancyTree,
};

fn main() {
    println!("extracting 0b10101:");
    for step in extraction_trace(0b10101u8, ClearStep::Xor) {
        println!("  x={:05b} pos={} -> {:05b}", step.before, step.pos, step.after);
    }

    let (block, pos) = bit_index_map::<u32>(103_223);
    println!("slot 103223 with 32-bit words: block {block}, bit {pos} (back to {})", slot_index::<u32>(block, pos));

    let p = 1 << 24;
    let tree = WAryOccupancyTree::<u64>::new(p);
    println!(
        "p=2^24: tree height {}, {} words (levels {:?})",
        tree.height(),
        tree.word_count(),
        tree.level_sizes()
    );

    for density in [0.05, 0.45, 0.85] {
        let slots = random_slots(p, (density * p as f64) as usize, 1);
        let mut bits = BlockedBitset::<u64>::new(p);
        let mut tree = WAryOccupancyTree::<u64>::new(p);
        for &i in &slots {
            bits.insert(i).unwrap();
            tree.insert(i).unwrap();
        }
        let t = Instant::now();
        let a: usize = bits.iter().count();
        let t_a = t.elapsed();
        let t = Instant::now();
        let b: usize = tree.iter().count();
        let t_t = t.elapsed();
        assert_eq!(a, b);
        println!("density {density:.2}: {a} slots, array {t_a:?}, tree {t_t:?}");
    }

    for (n, p) in [(1_000_000u64, 1000u64), (100, 100_000)] {
        println!("n={n} p={p}: linear extraction {}", practical_linearity_check(n, p, 64));
    }
}
