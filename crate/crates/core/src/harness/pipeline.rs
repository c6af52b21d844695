use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use crate::baselines::{at_reduce, tztm_reduce};
use crate::geometry::{find_bounds, Hull, Point};
use crate::hulls::HullAlgorithm;
use crate::occupancy::OccupancyKind;
use crate::reducer::{precondition, AxisChoice, PreconditionOptions};
use crate::{Error, Result};

/// Preconditioner applied before the hull algorithm.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    None,
    /// Column min/max reduction, optionally followed by a row scan.
    Proposed { second_scan: bool },
    At,
    Tztm { iterations: u32 },
}

impl Method {
    pub const PROPOSED: Method = Method::Proposed { second_scan: false };
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::None => f.write_str("none"),
            Method::Proposed { second_scan: false } => f.write_str("proposed"),
            Method::Proposed { second_scan: true } => f.write_str("proposed-xy"),
            Method::At => f.write_str("at"),
            Method::Tztm { iterations } => write!(f, "tztm-{iterations}"),
        }
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownName {
            kind: "method",
            name: s.into(),
        };
        match s {
            "none" => Ok(Method::None),
            "proposed" => Ok(Method::PROPOSED),
            "proposed-xy" => Ok(Method::Proposed { second_scan: true }),
            "at" => Ok(Method::At),
            _ => {
                let k = s.strip_prefix("tztm-").ok_or_else(unknown)?;
                let iterations: u32 = k.parse().map_err(|_| unknown())?;
                if iterations == 0 {
                    return Err(unknown());
                }
                Ok(Method::Tztm { iterations })
            }
        }
    }
}

/// One measured pipeline.
#[derive(Clone, Debug, PartialEq)]
pub struct BenchRecord {
    pub dataset: String,
    pub n: usize,
    pub p: u64,
    pub q: u64,
    /// `n / (p q)`.
    pub density: f64,
    pub method: Method,
    pub hull_algo: HullAlgorithm,
    /// Points handed to the hull algorithm.
    pub s: usize,
    /// Mean time of the hull on the raw points.
    pub t_n: Duration,
    /// Mean reduction time.
    pub t_r: Duration,
    /// Mean time of the hull on the reduced points.
    pub t_s: Duration,
    /// `t_n / (t_r + t_s)`.
    pub speedup: f64,
    /// Fraction of points removed, `1 - s / n`.
    pub reduction_pct: f64,
    pub repetitions: u32,
}

impl BenchRecord {
    pub fn compute_speedup(t_n: Duration, t_r: Duration, t_s: Duration) -> f64 {
        let denom = (t_r + t_s).as_secs_f64();
        if denom == 0.0 {
            if t_n.is_zero() {
                1.0
            } else {
                f64::INFINITY
            }
        } else {
            t_n.as_secs_f64() / denom
        }
    }

    pub fn compute_reduction(n: usize, s: usize) -> f64 {
        1.0 - s as f64 / n as f64
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PipelineConfig {
    pub method: Method,
    pub hull_algo: HullAlgorithm,
    pub repetitions: u32,
    pub occupancy: OccupancyKind,
}

impl PipelineConfig {
    pub fn new(method: Method, hull_algo: HullAlgorithm) -> Self {
        PipelineConfig {
            method,
            hull_algo,
            repetitions: 100,
            occupancy: OccupancyKind::Array,
        }
    }

    pub fn with_repetitions(mut self, repetitions: u32) -> Self {
        self.repetitions = repetitions;
        self
    }

    pub fn with_occupancy(mut self, occupancy: OccupancyKind) -> Self {
        self.occupancy = occupancy;
        self
    }

    /// Algorithm timed on the raw points. Melkman needs a chain, so its raw
    /// baseline is QuickHull.
    pub fn raw_algo(&self) -> HullAlgorithm {
        match self.hull_algo {
            HullAlgorithm::Melkman => HullAlgorithm::QuickHull,
            other => other,
        }
    }

    pub fn check(&self) -> Result<()> {
        if self.repetitions == 0 {
            return Err(Error::Config("repetitions must be >= 1".into()));
        }
        if self.hull_algo.needs_chain() && !matches!(self.method, Method::Proposed { .. }) {
            return Err(Error::Incompatible {
                method: self.method.to_string(),
                algo: self.hull_algo.to_string(),
            });
        }
        Ok(())
    }
}

/// Output of one reduction, in the form the hull algorithm expects.
pub enum Reduced {
    Chain(crate::reducer::PolygonalChain),
    Points(Vec<Point>),
}

impl Reduced {
    pub fn len(&self) -> usize {
        match self {
            Reduced::Chain(c) => c.len(),
            Reduced::Points(p) => p.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn points(&self) -> &[Point] {
        match self {
            Reduced::Chain(c) => c.vertices(),
            Reduced::Points(p) => p,
        }
    }

    pub fn hull(&self, algo: HullAlgorithm) -> Result<Hull> {
        match self {
            Reduced::Chain(c) => algo.run_on_chain(c),
            Reduced::Points(p) => algo.run_on_points(p),
        }
    }
}

/// Applies the preconditioner alone. `Method::None` copies the input.
pub fn apply_method(points: &[Point], method: Method, occupancy: OccupancyKind) -> Result<Reduced> {
    Ok(match method {
        Method::None => Reduced::Points(points.to_vec()),
        Method::Proposed { second_scan } => {
            let opts = PreconditionOptions {
                axis: AxisChoice::X,
                second_scan,
                occupancy,
            };
            Reduced::Chain(precondition(points, opts)?.chain)
        }
        Method::At => Reduced::Points(at_reduce(points)),
        Method::Tztm { iterations } => Reduced::Points(tztm_reduce(points, iterations as usize)),
    })
}

/// Times `t_n`, `t_r` and `t_s` as means over `repetitions` runs and checks
/// that the reduced pipeline gives the same hull as the raw one.
pub fn run_pipeline(points: &[Point], dataset: &str, config: &PipelineConfig) -> Result<BenchRecord> {
    config.check()?;
    let bbox = find_bounds(points)?;
    let n = points.len();
    let reps = config.repetitions;

    let raw_algo = config.raw_algo();
    let mut raw_hull = None;
    let mut t_n_total = Duration::ZERO;
    for _ in 0..reps {
        let t = Instant::now();
        let hull = raw_algo.run_on_points(points)?;
        t_n_total += t.elapsed();
        raw_hull = Some(hull);
    }
    let raw_hull = raw_hull.unwrap();
    let t_n = t_n_total / reps;

    let (s, t_r, t_s) = if config.method == Method::None {
        (n, Duration::ZERO, t_n)
    } else {
        let mut t_r_total = Duration::ZERO;
        let mut t_s_total = Duration::ZERO;
        let mut s = 0;
        for _ in 0..reps {
            let t = Instant::now();
            let reduced = apply_method(points, config.method, config.occupancy)?;
            t_r_total += t.elapsed();
            let t = Instant::now();
            let hull = reduced.hull(config.hull_algo)?;
            t_s_total += t.elapsed();
            s = reduced.len();
            if hull != raw_hull {
                return Err(Error::HullMismatch {
                    method: config.method.to_string(),
                    algo: config.hull_algo.to_string(),
                    raw: raw_hull.len(),
                    reduced: hull.len(),
                });
            }
        }
        (s, t_r_total / reps, t_s_total / reps)
    };

    Ok(BenchRecord {
        dataset: dataset.to_string(),
        n,
        p: bbox.width(),
        q: bbox.height(),
        density: n as f64 / bbox.area(),
        method: config.method,
        hull_algo: config.hull_algo,
        s,
        t_n,
        t_r,
        t_s,
        speedup: BenchRecord::compute_speedup(t_n, t_r, t_s),
        reduction_pct: BenchRecord::compute_reduction(n, s),
        repetitions: reps,
    })
}

/// Every compatible method x algorithm pair for the given TZTM iteration
/// counts, in record order.
pub fn full_matrix(tztm_iterations: &[u32], second_scan: bool) -> Vec<(Method, HullAlgorithm)> {
    let mut methods = vec![Method::None, Method::PROPOSED];
    if second_scan {
        methods.push(Method::Proposed { second_scan: true });
    }
    methods.push(Method::At);
    methods.extend(tztm_iterations.iter().map(|&k| Method::Tztm { iterations: k }));
    let mut out = Vec::new();
    for m in methods {
        for a in HullAlgorithm::ALL {
            if a.needs_chain() && !matches!(m, Method::Proposed { .. }) {
                continue;
            }
            out.push((m, a));
        }
    }
    out
}
