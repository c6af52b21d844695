//! Column min/max reduction on a small hand-made set and a large random one.

use hullprep::harness::{generate, Generator, GeneratorKind};
use hullprep::reducer::{precondition, reduce, AxisChoice, PreconditionOptions};
use hullprep::Point;

fn main() -> hullprep::Result<()> {
    let small: Vec<Point> = [
        (1, 1), (1, 2), (1, 3), (1, 4), (2, 2), (2, 3), (2, 4), (3, 2),
        (3, 3), (3, 4), (3, 5), (4, 3), (5, 2), (5, 3),
    ]
    .into_iter()
    .map(Point::from)
    .collect();

    let arr = reduce(&small, 5)?;
    println!("extremal array, one slot per line (slot lo hi):");
    print!("{}", arr.to_text());
    println!("valid points in chain order: {}", show(&arr.valid_points()));

    let g = Generator {
        kind: GeneratorKind::UniformBox,
        n: 1_000_000,
        p: 1000,
        density: 1.0,
    };
    let pts = generate(&g, 1)?;
    for (label, opts) in [
        ("x scan", PreconditionOptions::default()),
        (
            "x then y",
            PreconditionOptions {
                second_scan: true,
                ..Default::default()
            },
        ),
        (
            "auto axis",
            PreconditionOptions {
                axis: AxisChoice::Auto,
                ..Default::default()
            },
        ),
    ] {
        let r = precondition(&pts, opts)?;
        let t = r.timings;
        println!(
            "{label:>9}: n={} s={} ({:.3}% removed)  bounds {:?} reduce {:?} second {:?} polyline {:?}",
            pts.len(),
            r.valid_count(),
            100.0 * (1.0 - r.valid_count() as f64 / pts.len() as f64),
            t.bounds,
            t.reduce,
            t.second_scan,
            t.polyline,
        );
    }
    Ok(())
}

fn show(pts: &[Point]) -> String {
    pts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" ")
}
