//! How many points each preconditioner leaves for the hull step.

use hullprep::baselines::{at_reduce, tztm_pseudo_hull};
use hullprep::harness::{generate, Generator, GeneratorKind};
use hullprep::hulls::quickhull;
use hullprep::reducer::{precondition, PreconditionOptions};

fn main() -> hullprep::Result<()> {
    for kind in [GeneratorKind::UniformDensity, GeneratorKind::Disc, GeneratorKind::Annulus] {
        let g = Generator {
            kind,
            n: 500_000,
            p: 1500,
            density: 0.4,
        };
        let pts = generate(&g, 3)?;
        let hull = quickhull(&pts)?;
        println!("{} (n={}, {} hull vertices)", kind.name(), pts.len(), hull.len());

        let proposed = precondition(&pts, PreconditionOptions::default())?;
        println!("  proposed     s={}", proposed.valid_count());
        let at = at_reduce(&pts);
        println!("  at           s={}", at.len());
        for k in 2..=4 {
            let ph = tztm_pseudo_hull(&pts, k);
            println!("  tztm-{k}       s={} ({} polygon vertices)", ph.survivors.len(), ph.vertices.len());
            assert_eq!(quickhull(&ph.survivors)?, hull);
        }
    }
    Ok(())
}
