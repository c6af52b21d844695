//! Array-vs-tree extraction benchmark: set a random fraction of `p` slots and
//! time listing them back in order.

use std::io::Write;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::harness::report::format_seconds;
use crate::occupancy::{BlockedBitset, WAryOccupancyTree};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct ExtractRecord {
    pub p: usize,
    pub s: usize,
    /// Requested `s / p`.
    pub density: f64,
    pub t_array: Duration,
    pub t_tree: Duration,
    pub t_naive: Duration,
    pub repetitions: u32,
}

/// Distinct 1-based slots, ascending.
pub fn random_slots(p: usize, s: usize, seed: u64) -> Vec<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut v: Vec<usize> = rand::seq::index::sample(&mut rng, p, s)
        .into_iter()
        .map(|i| i + 1)
        .collect();
    v.sort_unstable();
    v
}

/// Slot-by-slot scan of a flag vector indexed from 1.
pub fn naive_scan(flags: &[bool]) -> Vec<usize> {
    flags
        .iter()
        .enumerate()
        .filter(|(_, &f)| f)
        .map(|(i, _)| i + 1)
        .collect()
}

fn time_mean<T>(reps: u32, mut f: impl FnMut() -> T) -> (Duration, T) {
    let mut total = Duration::ZERO;
    let mut last = None;
    for _ in 0..reps {
        let t = Instant::now();
        let out = f();
        total += t.elapsed();
        last = Some(out);
    }
    (total / reps, last.unwrap())
}

/// Times in-order extraction from a bitset, a tree and a flag vector holding
/// the same slots, and fails if the three lists differ.
pub fn extract_bench(p: usize, density: f64, seed: u64, repetitions: u32) -> Result<ExtractRecord> {
    if repetitions == 0 {
        return Err(Error::Config("repetitions must be >= 1".into()));
    }
    if p == 0 || !(0.0..=1.0).contains(&density) {
        return Err(Error::Config(format!("need p >= 1 and density in [0, 1], got p={p} density={density}")));
    }
    let s = (density * p as f64).round() as usize;
    let slots = random_slots(p, s, seed);

    let mut bitset = BlockedBitset::<u64>::new(p);
    let mut tree = WAryOccupancyTree::<u64>::new(p);
    let mut flags = vec![false; p];
    for &i in &slots {
        bitset.insert(i)?;
        tree.insert(i)?;
        flags[i - 1] = true;
    }

    let (t_array, from_array) = time_mean(repetitions, || bitset.iter().collect::<Vec<_>>());
    let (t_tree, from_tree) = time_mean(repetitions, || tree.iter().collect::<Vec<_>>());
    let (t_naive, from_naive) = time_mean(repetitions, || naive_scan(&flags));
    if from_array != slots || from_tree != slots || from_naive != slots {
        return Err(Error::Config(format!(
            "extraction disagreement at p={p} density={density}"
        )));
    }
    Ok(ExtractRecord {
        p,
        s,
        density,
        t_array,
        t_tree,
        t_naive,
        repetitions,
    })
}

pub fn emit_extract_csv<W: Write>(records: &[ExtractRecord], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["p", "s", "density", "t_array", "t_tree", "t_naive", "repetitions"])?;
    for r in records {
        w.write_record([
            r.p.to_string(),
            r.s.to_string(),
            r.density.to_string(),
            format_seconds(r.t_array),
            format_seconds(r.t_tree),
            format_seconds(r.t_naive),
            r.repetitions.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}
