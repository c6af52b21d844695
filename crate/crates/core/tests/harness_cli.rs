use std::process::Command;
use std::time::Duration;

use hullprep::harness::{
    csv_string, generate, load_points, parse_csv, run_pipeline, stats_report, DatasetSpec,
    Generator, GeneratorKind, Method, PipelineConfig, Projection,
};
use hullprep::hulls::HullAlgorithm;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hullprep"))
}

fn uniform(n: usize, p: u64, seed: u64) -> Vec<hullprep::Point> {
    let g = Generator {
        kind: GeneratorKind::UniformBox,
        n,
        p,
        density: 1.0,
    };
    generate(&g, seed).unwrap()
}

#[test]
fn pipeline_records_round_trip_through_csv() {
    let pts = uniform(20_000, 150, 1);
    let mut recs = Vec::new();
    for (m, a) in hullprep::harness::full_matrix(&[2, 3], true) {
        let cfg = PipelineConfig::new(m, a).with_repetitions(2);
        let r = run_pipeline(&pts, "u150", &cfg).unwrap();
        assert!(r.repetitions >= 1);
        assert_eq!(r.speedup, t_ratio(r.t_n, r.t_r, r.t_s));
        assert_eq!(r.reduction_pct, 1.0 - r.s as f64 / r.n as f64);
        recs.push(r);
    }
    let text = csv_string(&recs).unwrap();
    assert_eq!(text.lines().count(), recs.len() + 1);
    let mut back = parse_csv(&text).unwrap();
    let key = |r: &hullprep::harness::BenchRecord| (r.dataset.clone(), r.method, r.hull_algo);
    recs.sort_by_key(key);
    back.sort_by_key(key);
    assert_eq!(back, recs);
}

fn t_ratio(t_n: Duration, t_r: Duration, t_s: Duration) -> f64 {
    hullprep::harness::BenchRecord::compute_speedup(t_n, t_r, t_s)
}

#[test]
fn fixed_seed_gives_identical_sets_and_counts() {
    for kind in [
        GeneratorKind::UniformBox,
        GeneratorKind::UniformDensity,
        GeneratorKind::Disc,
        GeneratorKind::Annulus,
        GeneratorKind::Circle,
    ] {
        let g = Generator {
            kind,
            n: 5000,
            p: 400,
            density: 0.3,
        };
        let a = generate(&g, 77).unwrap();
        assert_eq!(a, generate(&g, 77).unwrap(), "{}", kind.name());
        let cfg = PipelineConfig::new(Method::PROPOSED, HullAlgorithm::QuickHull).with_repetitions(1);
        let s1 = run_pipeline(&a, "x", &cfg).unwrap().s;
        let s2 = run_pipeline(&generate(&g, 77).unwrap(), "x", &cfg).unwrap().s;
        assert_eq!(s1, s2);
    }
}

#[test]
fn proposed_reduces_at_least_as_much_as_at() {
    for (i, p) in [100u64, 250, 1000].into_iter().enumerate() {
        let pts = uniform((p * p) as usize, p, 5 + i as u64);
        let run = |m| {
            run_pipeline(&pts, "u", &PipelineConfig::new(m, HullAlgorithm::QuickHull).with_repetitions(1))
                .unwrap()
                .reduction_pct
        };
        assert!(run(Method::PROPOSED) >= run(Method::At), "p={p}");
    }
}

#[test]
fn stats_report_over_a_sweep() {
    let mut recs = Vec::new();
    for n in [20_000usize, 40_000, 80_000] {
        let pts = uniform(n, 300, n as u64);
        for m in [Method::PROPOSED, Method::At] {
            let cfg = PipelineConfig::new(m, HullAlgorithm::Graham).with_repetitions(2);
            recs.push(run_pipeline(&pts, &format!("n{n}"), &cfg).unwrap());
        }
    }
    let text = stats_report(&recs).unwrap();
    assert!(text.contains("proposed"));
    assert!(text.contains("slope ratio at / proposed"));
}

#[test]
fn load_points_from_3d_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cloud.txt");
    std::fs::write(&path, "# x y z\n1.26 4.50 9.99\n-0.05, 2.0, 3.25\n\n").unwrap();
    let mut spec = DatasetSpec::file(&path);
    spec.scale = 10.0;
    assert_eq!(
        load_points(&spec).unwrap(),
        vec![hullprep::Point::new(13, 45), hullprep::Point::new(-1, 20)]
    );
    spec.projection = Projection::Yz;
    assert_eq!(
        load_points(&spec).unwrap(),
        vec![hullprep::Point::new(45, 100), hullprep::Point::new(20, 33)]
    );
    assert_eq!(spec.id(), "cloud");
}

#[test]
fn cli_reduce_and_hull() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("pts.txt");
    std::fs::write(&input, "0 0\n4 0\n4 4\n0 4\n2 2\n1 3\n").unwrap();
    let out = bin().args(["reduce", "--input"]).arg(&input).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("n=6 s="));

    let out = bin()
        .args(["hull", "--algo", "melkman", "--input"])
        .arg(&input)
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "0 0\n4 0\n4 4\n0 4\n");

    let out = bin()
        .args(["hull", "--algo", "melkman", "--method", "at", "--input"])
        .arg(&input)
        .output()
        .unwrap();
    assert!(!out.status.success());
}

#[test]
fn cli_bench_and_extract_bench() {
    let dir = tempfile::tempdir().unwrap();
    let csv_path = dir.path().join("bench.csv");
    let out = bin()
        .args([
            "bench", "--generator", "uniform-density", "--n", "4000,8000", "--density", "0.4",
            "--seed", "3", "--reps", "1", "--tztm-iters", "2,3", "--second-scan", "--report",
            "--output",
        ])
        .arg(&csv_path)
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let recs = parse_csv(&std::fs::read_to_string(&csv_path).unwrap()).unwrap();
    // Per dataset: none, at, tztm-2, tztm-3 with 3 algos; proposed and
    // proposed-xy with 4.
    assert_eq!(recs.len(), 2 * (4 * 3 + 2 * 4));
    assert!(String::from_utf8_lossy(&out.stderr).contains("mean speedup"));

    let out = bin()
        .args(["bench", "--generator", "disc", "--n", "3000", "--p", "200", "--reps", "1"])
        .args(["--method", "proposed", "--algo", "graham,melkman", "--occupancy", "tree"])
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let recs = parse_csv(&String::from_utf8_lossy(&out.stdout)).unwrap();
    assert_eq!(recs.len(), 2);

    let out = bin()
        .args(["extract-bench", "--p", "100000", "--density", "0.05,0.5,0.85", "--reps", "1"])
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8_lossy(&out.stdout);
    assert_eq!(text.lines().count(), 4);
    assert!(text.lines().nth(2).unwrap().starts_with("100000,50000,0.5,"));
}

#[test]
fn cli_rejects_bad_input() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("bad.txt");
    std::fs::write(&input, "1 2\n3 x\n").unwrap();
    let out = bin().args(["reduce", "--input"]).arg(&input).output().unwrap();
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    let out = bin().args(["reduce"]).output().unwrap();
    assert!(!out.status.success());
}
