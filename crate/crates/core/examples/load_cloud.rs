//! Loading a 3D point file: project onto a plane, scale, round to integers.

use std::io::Write;

use hullprep::harness::{load_points, DatasetSpec, Projection};
use hullprep::hulls::quickhull;

fn main() -> hullprep::Result<()> {
    let mut file = tempfile_path();
    writeln!(file.1, "# x y z")?;
    for i in 0..200 {
        let t = i as f64 * 0.0314;
        writeln!(file.1, "{:.3} {:.3} {:.3}", t.cos() * 2.5, t.sin() * 1.5, t)?;
    }
    drop(file.1);

    for projection in [Projection::Xy, Projection::Xz, Projection::Yz] {
        let mut spec = DatasetSpec::file(&file.0);
        spec.projection = projection;
        spec.scale = 100.0;
        let pts = load_points(&spec)?;
        let hull = quickhull(&pts)?;
        println!("{projection:?}: {} points, {} hull vertices, first {:?}", pts.len(), hull.len(), hull.vertices()[0]);
    }
    std::fs::remove_file(&file.0)?;
    Ok(())
}

fn tempfile_path() -> (std::path::PathBuf, std::fs::File) {
    let path = std::env::temp_dir().join(format!("hullprep-cloud-{}.txt", std::process::id()));
    let f = std::fs::File::create(&path).expect("temp file");
    (path, f)
}
