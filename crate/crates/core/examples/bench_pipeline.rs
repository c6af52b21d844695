//! A small benchmark matrix written as CSV, plus the text summary.

use hullprep::harness::{
    emit_csv, full_matrix, generate, run_pipeline, stats_report, Generator, GeneratorKind,
    PipelineConfig,
};

fn main() -> hullprep::Result<()> {
    let mut records = Vec::new();
    for n in [100_000, 200_000, 400_000] {
        let g = Generator {
            kind: GeneratorKind::UniformDensity,
            n,
            p: 0,
            density: 0.44,
        };
        let pts = generate(&g, 11)?;
        for (method, algo) in full_matrix(&[2, 3, 4], false) {
            let cfg = PipelineConfig::new(method, algo).with_repetitions(5);
            records.push(run_pipeline(&pts, &format!("d0.44-n{n}"), &cfg)?);
        }
    }
    emit_csv(&records, std::io::stdout().lock())?;
    eprint!("{}", stats_report(&records)?);
    Ok(())
}
