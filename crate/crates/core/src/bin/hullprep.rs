use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use hullprep::harness::{
    apply_method, emit_csv, emit_extract_csv, extract_bench, full_matrix, load_points, run_pipeline,
    stats_report, DatasetSpec, Generator, GeneratorKind, Method, PipelineConfig, Projection,
};
use hullprep::hulls::HullAlgorithm;
use hullprep::occupancy::OccupancyKind;

#[derive(Parser)]
#[command(version, about = "Column min/max preconditioning for 2D convex hulls")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a preconditioner and print n, s and the fraction removed.
    Reduce {
        #[command(flatten)]
        data: DataArgs,
        #[command(flatten)]
        method: MethodArgs,
        /// Write the surviving points here, one per line.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run preconditioner and hull algorithm, print the hull vertices.
    Hull {
        #[command(flatten)]
        data: DataArgs,
        #[command(flatten)]
        method: MethodArgs,
        #[arg(long, default_value = "quickhull")]
        algo: HullAlgorithm,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Time every method x algorithm pair and write CSV records.
    Bench {
        #[command(flatten)]
        data: DataArgs,
        /// Restrict to these methods (default: all).
        #[arg(long, value_delimiter = ',')]
        method: Vec<String>,
        /// TZTM iteration counts included in the matrix.
        #[arg(long, value_delimiter = ',', default_value = "2,3,4")]
        tztm_iters: Vec<u32>,
        /// Restrict to these hull algorithms (default: all).
        #[arg(long, value_delimiter = ',')]
        algo: Vec<HullAlgorithm>,
        /// Also run the proposed method with the row scan.
        #[arg(long)]
        second_scan: bool,
        #[arg(long, default_value = "array")]
        occupancy: OccupancyKind,
        #[arg(long, default_value_t = 100)]
        reps: u32,
        #[arg(long)]
        output: Option<PathBuf>,
        /// Print the fit and speedup summary to stderr.
        #[arg(long)]
        report: bool,
    },
    /// Time array, tree and naive extraction of random slot sets.
    ExtractBench {
        #[arg(long, default_value_t = 1 << 20)]
        p: usize,
        #[arg(
            long,
            value_delimiter = ',',
            default_value = "0.05,0.15,0.25,0.35,0.45,0.55,0.65,0.75,0.85"
        )]
        density: Vec<f64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        reps: u32,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
struct DataArgs {
    /// Point file (2 or 3 numbers per line).
    #[arg(long, conflicts_with = "generator")]
    input: Option<PathBuf>,
    /// Synthetic generator: uniform-box, uniform-density, disc, annulus, circle.
    #[arg(long)]
    generator: Option<GeneratorKind>,
    /// Point counts; `bench` runs one dataset per value.
    #[arg(long, value_delimiter = ',', default_value = "1000000")]
    n: Vec<usize>,
    #[arg(long, default_value_t = 1000)]
    p: u64,
    #[arg(long, default_value_t = 0.4)]
    density: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1.0)]
    scale: f64,
    #[arg(long, default_value = "xy")]
    projection: Projection,
}

impl DataArgs {
    fn specs(&self) -> Result<Vec<DatasetSpec>, String> {
        if let Some(path) = &self.input {
            let mut spec = DatasetSpec::file(path);
            spec.scale = self.scale;
            spec.projection = self.projection;
            return Ok(vec![spec]);
        }
        let kind = self
            .generator
            .ok_or("one of --input or --generator is required")?;
        Ok(self
            .n
            .iter()
            .map(|&n| {
                let g = Generator {
                    kind,
                    n,
                    p: self.p,
                    density: self.density,
                };
                DatasetSpec::synthetic(g, self.seed)
            })
            .collect())
    }

    fn single(&self) -> Result<DatasetSpec, String> {
        let mut specs = self.specs()?;
        if specs.len() != 1 {
            return Err("this command takes a single --n".into());
        }
        Ok(specs.remove(0))
    }
}

#[derive(Args)]
struct MethodArgs {
    /// none, proposed, at or tztm.
    #[arg(long, default_value = "proposed")]
    method: String,
    #[arg(long, default_value_t = 2)]
    tztm_iters: u32,
    #[arg(long)]
    second_scan: bool,
    #[arg(long, default_value = "array")]
    occupancy: OccupancyKind,
}

fn parse_method(name: &str, tztm_iters: u32, second_scan: bool) -> Result<Method, String> {
    match name {
        "tztm" => Ok(Method::Tztm {
            iterations: tztm_iters,
        }),
        "proposed" if second_scan => Ok(Method::Proposed { second_scan: true }),
        other => other.parse().map_err(|e: hullprep::Error| e.to_string()),
    }
}

impl MethodArgs {
    fn method(&self) -> Result<Method, String> {
        parse_method(&self.method, self.tztm_iters, self.second_scan)
    }
}

fn sink(path: &Option<PathBuf>) -> io::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn run(cli: Cli) -> Result<(), Box<dyn std::error::Error>> {
    match cli.command {
        Command::Reduce {
            data,
            method,
            output,
        } => {
            let points = load_points(&data.single()?)?;
            let reduced = apply_method(&points, method.method()?, method.occupancy)?;
            let (n, s) = (points.len(), reduced.len());
            println!("n={n} s={s} reduction_pct={}", 1.0 - s as f64 / n as f64);
            if output.is_some() {
                let mut out = sink(&output)?;
                for p in reduced.points() {
                    writeln!(out, "{} {}", p.x, p.y)?;
                }
                out.flush()?;
            }
        }
        Command::Hull {
            data,
            method,
            algo,
            output,
        } => {
            let points = load_points(&data.single()?)?;
            let hull = apply_method(&points, method.method()?, method.occupancy)?.hull(algo)?;
            let mut out = sink(&output)?;
            for p in hull.vertices() {
                writeln!(out, "{} {}", p.x, p.y)?;
            }
            out.flush()?;
        }
        Command::Bench {
            data,
            method,
            tztm_iters,
            algo,
            second_scan,
            occupancy,
            reps,
            output,
            report,
        } => {
            let wanted: Vec<Method> = method
                .iter()
                .map(|m| parse_method(m, tztm_iters[0], false))
                .collect::<Result<_, _>>()?;
            let cells: Vec<(Method, HullAlgorithm)> = full_matrix(&tztm_iters, second_scan)
                .into_iter()
                .filter(|(m, a)| {
                    let method_ok = wanted.is_empty()
                        || wanted.iter().any(|w| match (w, m) {
                            (Method::Tztm { .. }, Method::Tztm { .. }) => true,
                            (Method::Proposed { .. }, Method::Proposed { .. }) => true,
                            _ => w == m,
                        });
                    method_ok && (algo.is_empty() || algo.contains(a))
                })
                .collect();
            let mut records = Vec::new();
            for spec in data.specs()? {
                let points = load_points(&spec)?;
                let id = spec.id();
                for &(m, a) in &cells {
                    let cfg = PipelineConfig::new(m, a)
                        .with_repetitions(reps)
                        .with_occupancy(occupancy);
                    let r = run_pipeline(&points, &id, &cfg)?;
                    eprintln!("{id} {m} {a}: s={} speedup={:.3}", r.s, r.speedup);
                    records.push(r);
                }
            }
            emit_csv(&records, sink(&output)?)?;
            if report {
                eprint!("{}", stats_report(&records)?);
            }
        }
        Command::ExtractBench {
            p,
            density,
            seed,
            reps,
            output,
        } => {
            let records = density
                .iter()
                .map(|&d| extract_bench(p, d, seed, reps))
                .collect::<Result<Vec<_>, _>>()?;
            emit_extract_csv(&records, sink(&output)?)?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
