//! The four hull algorithms on raw and reduced input.

use std::time::Instant;

use hullprep::harness::{generate, Generator, GeneratorKind};
use hullprep::hulls::HullAlgorithm;
use hullprep::reducer::{precondition, PreconditionOptions};

fn main() -> hullprep::Result<()> {
    let g = Generator {
        kind: GeneratorKind::UniformDensity,
        n: 1_000_000,
        p: 0,
        density: 0.4,
    };
    let pts = generate(&g, 5)?;
    let t = Instant::now();
    let red = precondition(&pts, PreconditionOptions::default())?;
    let t_r = t.elapsed();
    println!("n={} reduced to s={} in {t_r:?}", pts.len(), red.valid_count());

    for algo in HullAlgorithm::ALL {
        let raw = if algo.needs_chain() {
            None
        } else {
            let t = Instant::now();
            let h = algo.run_on_points(&pts)?;
            Some((h, t.elapsed()))
        };
        let t = Instant::now();
        let h = algo.run_on_chain(&red.chain)?;
        let t_s = t.elapsed();
        match raw {
            Some((raw_hull, t_n)) => {
                assert_eq!(raw_hull, h);
                let speedup = t_n.as_secs_f64() / (t_r + t_s).as_secs_f64();
                println!("{algo:>9}: raw {t_n:?}, reduced {t_s:?}, speedup {speedup:.1}x, {} vertices", h.len());
            }
            None => println!("{algo:>9}: chain only, {t_s:?}, {} vertices", h.len()),
        }
    }
    Ok(())
}
