//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any fail. Runs sequentially so the timed criteria are not
//! disturbed by other work in the same process.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use hullprep::baselines::{at_reduce, tztm_reduce};
use hullprep::geometry::Point;
use hullprep::harness::{
    apply_method, generate, linear_fit, random_slots, run_pipeline, Generator, GeneratorKind,
    Method, PipelineConfig,
};
use hullprep::hulls::{brute_force_hull, graham_scan, jarvis_march, melkman, quickhull, HullAlgorithm};
use hullprep::occupancy::{
    bit_index_map, closed_form_height, closed_form_word_count, extraction_trace, slot_index,
    BlockedBitset, ClearStep, OccupancyKind, WAryOccupancyTree,
};
use hullprep::reducer::{precondition, AxisChoice, PreconditionOptions};
use rand::Rng;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn density_set(n: usize, density: f64, seed: u64) -> Vec<Point> {
    generate(
        &Generator {
            kind: GeneratorKind::UniformDensity,
            n,
            p: 0,
            density,
        },
        seed,
    )
    .expect("generator")
}

fn options_for(i: usize) -> PreconditionOptions {
    PreconditionOptions {
        axis: [AxisChoice::X, AxisChoice::Y, AxisChoice::Auto][i % 3],
        second_scan: i % 4 == 1,
        occupancy: if i.is_multiple_of(2) {
            OccupancyKind::Array
        } else {
            OccupancyKind::Tree
        },
    }
}

fn c1_hull_preservation() -> Check {
    let mut r = common::rng(0xA1);
    let sets = 10_000;
    for i in 0..sets {
        let pts = common::random_case(&mut r, 1, 500);
        let red = precondition(&pts, options_for(i)).map_err(|e| e.to_string())?;
        let valid = red.array.valid_points();
        let expected = brute_force_hull(&pts).map_err(|e| e.to_string())?;
        let got = brute_force_hull(&valid).map_err(|e| e.to_string())?;
        ensure(got == expected, || format!("set {i} (n={}): hull differs", pts.len()))?;
        ensure(expected.vertices() == common::monotone_chain(&pts).as_slice(), || {
            format!("set {i}: oracle disagrees with monotone chain")
        })?;
    }
    Ok(format!("{sets} sets, 0 mismatches"))
}

fn c2_four_way_agreement() -> Check {
    let mut r = common::rng(0xA2);
    let sets = 1_000;
    let mut max_n = 0;
    for i in 0..sets {
        let n = (r.random_range(0.0..(1e5f64).ln())).exp().round().max(1.0) as usize;
        let pts = common::random_case(&mut r, n, n);
        max_n = max_n.max(n);
        let chain = precondition(&pts, options_for(i)).map_err(|e| e.to_string())?.chain;
        let g = graham_scan(&pts).map_err(|e| e.to_string())?;
        let q = quickhull(&pts).map_err(|e| e.to_string())?;
        let j = jarvis_march(&pts).map_err(|e| e.to_string())?;
        let m = melkman(&chain).map_err(|e| e.to_string())?;
        ensure(g == q && q == j && j == m, || format!("set {i} (n={n}): algorithms disagree"))?;
        ensure(g.vertices() == common::monotone_chain(&pts).as_slice(), || {
            format!("set {i} (n={n}): disagrees with monotone chain")
        })?;
    }
    Ok(format!("{sets} sets up to n={max_n}, 0 disagreements"))
}

fn c3_reduction_bound() -> Check {
    let p = 1000usize;
    let g = Generator {
        kind: GeneratorKind::UniformBox,
        n: 1_000_000,
        p: p as u64,
        density: 1.0,
    };
    let pts = generate(&g, 3).map_err(|e| e.to_string())?;
    let s = precondition(&pts, PreconditionOptions::default())
        .map_err(|e| e.to_string())?
        .valid_count();
    let pct = 1.0 - s as f64 / pts.len() as f64;
    ensure(s <= 2 * p, || format!("s={s} > 2p={}", 2 * p))?;
    ensure(pct >= 0.998, || format!("reduction {pct:.5} < 0.998"))?;

    let mut failures = Vec::new();
    let mut cells = 0;
    for side in [100usize, 316, 1000] {
        for d in [0.1, 0.25, 0.5, 1.0] {
            let n = (d * (side * side) as f64).round() as usize;
            let pts = density_set(n, d, 30 + side as u64);
            let red = precondition(&pts, PreconditionOptions::default()).map_err(|e| e.to_string())?;
            let w = red.bbox.width() as usize;
            let s = red.valid_count();
            ensure(s <= 2 * w, || format!("p={w} d={d}: s={s} > 2p"))?;
            let pct = 1.0 - s as f64 / n as f64;
            cells += 1;
            if pct < 0.98 {
                failures.push(format!("p={w} d={d}: {:.2}%", 100.0 * pct));
            }
        }
    }

    // Same question with n held at 1e6 and the box stretched to p x q.
    let mut worst_fixed_n = 1.0f64;
    let mut r = common::rng(0xC3);
    for p in [100usize, 316, 1000, 3162] {
        for d in [0.1, 0.25, 0.5, 1.0] {
            let n = 1_000_000usize;
            let q = (n as f64 / (d * p as f64)).ceil() as usize;
            let pts: Vec<Point> = rand::seq::index::sample(&mut r, p * q, n)
                .into_iter()
                .map(|c| Point::new((c % p) as i64, (c / p) as i64))
                .collect();
            let red = precondition(&pts, PreconditionOptions::default()).map_err(|e| e.to_string())?;
            let s = red.valid_count();
            ensure(s <= 2 * p, || format!("n=1e6 p={p} d={d}: s={s} > 2p"))?;
            worst_fixed_n = worst_fixed_n.min(1.0 - s as f64 / n as f64);
        }
    }
    let head = format!(
        "n=1e6 p=1000: s={s} ({:.3}%); n=1e6 sweep p<=3162, d>=0.1: min {:.2}%",
        100.0 * pct,
        100.0 * worst_fixed_n
    );
    if worst_fixed_n < 0.98 {
        failures.push(format!("n=1e6 sweep min {:.2}%", 100.0 * worst_fixed_n));
    }
    if failures.is_empty() {
        Ok(format!("{head}; >=98% in all {cells} square-box cells"))
    } else {
        Err(format!(
            "{head}; s<=2p holds everywhere, but square boxes with d*p < 100 reduce < 98% in {}/{cells} cells: {}",
            failures.len(),
            failures.join(", ")
        ))
    }
}

fn c4_table_one() -> Check {
    for step in [ClearStep::Xor, ClearStep::AndNot] {
        let trace = extraction_trace(0b10101u8, step);
        let pos: Vec<u32> = trace.iter().map(|s| s.pos).collect();
        let after: Vec<u8> = trace.iter().map(|s| s.after).collect();
        ensure(pos == [0, 2, 4], || format!("{step:?}: positions {pos:?}"))?;
        ensure(after == [0b10100, 0b10000, 0b00000], || format!("{step:?}: words {after:?}"))?;
    }
    Ok("positions [0,2,4], words 10100 10000 00000".into())
}

fn c5_block_mapping() -> Check {
    ensure(bit_index_map::<u32>(103_223) == (3225, 22), || {
        format!("bit_index_map(103223, 32) = {:?}", bit_index_map::<u32>(103_223))
    })?;
    ensure(slot_index::<u32>(3225, 22) == 103_223, || "inverse failed".into())?;
    for i in 1..=(1usize << 16) {
        let (b32, p32) = bit_index_map::<u32>(i);
        let (b64, p64) = bit_index_map::<u64>(i);
        ensure((b32, p32 as usize) == ((i - 1) / 32, (i - 1) % 32), || format!("w=32 i={i}"))?;
        ensure((b64, p64 as usize) == ((i - 1) / 64, (i - 1) % 64), || format!("w=64 i={i}"))?;
        ensure(slot_index::<u32>(b32, p32) == i && slot_index::<u64>(b64, p64) == i, || {
            format!("round trip i={i}")
        })?;
    }
    Ok("(3225, 22); 2^16 round trips at w=32 and w=64".into())
}

fn c6_tree_sizing() -> Check {
    let p = 1usize << 24;
    let t = WAryOccupancyTree::<u64>::new(p);
    let flat = BlockedBitset::<u64>::new(p).blocks().len();
    let overhead = t.word_count() - flat;
    ensure(t.height() == 3, || format!("height {}", t.height()))?;
    ensure(t.word_count() == 266_305, || format!("words {}", t.word_count()))?;
    ensure(flat == 262_144 && overhead == 4161, || format!("flat {flat}, overhead {overhead}"))?;
    ensure(closed_form_height(p as u64, 64) == 3, || "closed-form height".into())?;
    ensure(closed_form_word_count(3, 64) == 266_305, || "closed-form words".into())?;
    Ok(format!(
        "h=3, 266305 words, +{overhead} over {flat} ({:.2}%)",
        100.0 * overhead as f64 / flat as f64
    ))
}

fn c7_occupancy_equivalence() -> Check {
    let p = 1usize << 24;
    let mut ratios = Vec::new();
    for k in 0..9 {
        let d = 0.05 + 0.1 * k as f64;
        let s = (d * p as f64).round() as usize;
        let slots = random_slots(p, s, 70 + k);
        let mut bits = BlockedBitset::<u64>::new(p);
        let mut tree = WAryOccupancyTree::<u64>::new(p);
        let mut flags = vec![false; p + 1];
        for &i in &slots {
            bits.insert(i).map_err(|e| e.to_string())?;
            tree.insert(i).map_err(|e| e.to_string())?;
            flags[i] = true;
        }
        let t = Instant::now();
        let from_bits: Vec<usize> = bits.iter().collect();
        let t_array = t.elapsed();
        let t = Instant::now();
        let from_tree: Vec<usize> = tree.iter().collect();
        let t_tree = t.elapsed();
        let naive: Vec<usize> = (1..=p).filter(|&i| flags[i]).collect();
        ensure(naive == slots, || format!("d={d:.2}: naive scan differs from inserted set"))?;
        ensure(from_bits == naive, || format!("d={d:.2}: array iteration differs"))?;
        ensure(from_tree == naive, || format!("d={d:.2}: tree iteration differs"))?;
        ratios.push(t_tree.as_secs_f64() / t_array.as_secs_f64().max(1e-9));
    }
    let mean = ratios.iter().sum::<f64>() / ratios.len() as f64;
    Ok(format!("p=2^24, 9 densities 5%..85% identical; tree/array time {mean:.2}x"))
}

fn c8_linearity() -> Check {
    let reps = 10;
    let ns: Vec<usize> = (1..=10).map(|k| k * 100_000).collect();
    let sets: Vec<Vec<Point>> = ns.iter().map(|&n| density_set(n, 0.4, 80 + n as u64)).collect();
    for pts in &sets {
        apply_method(pts, Method::PROPOSED, OccupancyKind::Array).map_err(|e| e.to_string())?;
    }
    let mut ys = Vec::new();
    for pts in &sets {
        let mut total = Duration::ZERO;
        for _ in 0..reps {
            let t = Instant::now();
            let red = apply_method(pts, Method::PROPOSED, OccupancyKind::Array).map_err(|e| e.to_string())?;
            total += t.elapsed();
            std::hint::black_box(red.len());
        }
        ys.push((total / reps).as_secs_f64());
    }
    let xs: Vec<f64> = ns.iter().map(|&n| n as f64).collect();
    let fit = linear_fit(&xs, &ys).map_err(|e| e.to_string())?;
    ensure(fit.r2 >= 0.95, || format!("R2={:.4} slope={:.3e}", fit.r2, fit.slope))?;
    Ok(format!("R2={:.4}, slope {:.3e} s/point", fit.r2, fit.slope))
}

fn c9_speedup_direction() -> Check {
    let pts = density_set(1_000_000, 0.4, 9);
    let mut parts = Vec::new();
    for algo in [HullAlgorithm::QuickHull, HullAlgorithm::Graham, HullAlgorithm::Jarvis] {
        let cfg = PipelineConfig::new(Method::PROPOSED, algo).with_repetitions(3);
        let r = run_pipeline(&pts, "d0.4", &cfg).map_err(|e| e.to_string())?;
        ensure(r.speedup > 1.0, || format!("{algo}: speedup {:.3}", r.speedup))?;
        parts.push(format!("{algo} {:.2}x", r.speedup));
    }
    let counts: Vec<usize> = [2, 3, 4].iter().map(|&k| tztm_reduce(&pts, k).len()).collect();
    ensure(counts[0] >= counts[1] && counts[1] >= counts[2], || format!("tztm counts {counts:?}"))?;
    // On the lattice square every survivor sits on the box edges; a disc
    // shows the counts actually falling.
    let disc = generate(
        &Generator {
            kind: GeneratorKind::Disc,
            n: 1_000_000,
            p: 2000,
            density: 0.0,
        },
        9,
    )
    .map_err(|e| e.to_string())?;
    let disc_counts: Vec<usize> = [2, 3, 4].iter().map(|&k| tztm_reduce(&disc, k).len()).collect();
    ensure(disc_counts[0] >= disc_counts[1] && disc_counts[1] >= disc_counts[2], || {
        format!("tztm disc counts {disc_counts:?}")
    })?;
    Ok(format!("{}; tztm s {counts:?}, disc {disc_counts:?}", parts.join(", ")))
}

fn c10_baseline_safety() -> Check {
    let mut r = common::rng(0xB10);
    let sets = 5_000;
    for i in 0..sets {
        let pts = common::random_case(&mut r, 1, 150);
        let hull = common::monotone_chain(&pts);
        let oracle = brute_force_hull(&pts).map_err(|e| e.to_string())?;
        ensure(oracle.vertices() == hull.as_slice(), || format!("set {i}: oracles disagree"))?;
        let mut kept_sets = vec![("at".to_string(), at_reduce(&pts))];
        for k in 1..=5 {
            kept_sets.push((format!("tztm-{k}"), tztm_reduce(&pts, k)));
        }
        for (name, kept) in kept_sets {
            ensure(hull.iter().all(|v| kept.contains(v)), || format!("set {i}: {name} dropped a hull vertex"))?;
            let after = brute_force_hull(&kept).map_err(|e| e.to_string())?;
            ensure(after == oracle, || format!("set {i}: {name} changed the hull"))?;
        }
    }
    Ok(format!("{sets} sets, AT and TZTM 1..5 keep every hull vertex"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("hull preservation", c1_hull_preservation),
        ("four-way agreement", c2_four_way_agreement),
        ("reduction bound", c3_reduction_bound),
        ("extraction trace", c4_table_one),
        ("block mapping", c5_block_mapping),
        ("tree sizing", c6_tree_sizing),
        ("occupancy equivalence", c7_occupancy_equivalence),
        ("reduction linearity", c8_linearity),
        ("speedup direction", c9_speedup_direction),
        ("baseline hull safety", c10_baseline_safety),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = check();
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} [{secs:.1}s]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail} [{secs:.1}s]", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
