//! The reduced points form a simple polygonal chain, so Melkman's deque
//! algorithm finishes the hull in linear time.

use std::time::Instant;

use hullprep::harness::{generate, Generator, GeneratorKind};
use hullprep::hulls::{graham_scan, melkman};
use hullprep::reducer::{build_polyline, precondition, reduce, PreconditionOptions};
use hullprep::Point;

fn main() -> hullprep::Result<()> {
    let pts: Vec<Point> = [(1, 1), (1, 4), (2, 2), (2, 4), (3, 2), (3, 5), (4, 3), (5, 2), (5, 3), (2, 3)]
        .into_iter()
        .map(Point::from)
        .collect();
    let chain = build_polyline(&reduce(&pts, 5)?)?;
    println!("chain: {}", show(chain.vertices()));
    println!("simple: {}", chain.is_simple());
    println!("hull:  {}", show(melkman(&chain)?.vertices()));

    let g = Generator {
        kind: GeneratorKind::Disc,
        n: 2_000_000,
        p: 4000,
        density: 0.0,
    };
    let cloud = generate(&g, 7)?;
    let t = Instant::now();
    let red = precondition(&cloud, PreconditionOptions::default())?;
    let t_r = t.elapsed();
    let t = Instant::now();
    let fast = melkman(&red.chain)?;
    let t_s = t.elapsed();
    let t = Instant::now();
    let slow = graham_scan(&cloud)?;
    let t_n = t.elapsed();
    assert_eq!(fast, slow);
    println!(
        "disc n={} -> chain of {}; reduce {t_r:?} + melkman {t_s:?} vs graham {t_n:?}; {} hull vertices",
        cloud.len(),
        red.chain.len(),
        fast.len()
    );
    Ok(())
}

fn show(pts: &[Point]) -> String {
    pts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" ")
}
