//! Point ingestion: text files (2D or projected 3D) and seeded synthetic
//! generators.

use std::fmt;
use std::fs;
use std::path::PathBuf;
use std::str::FromStr;

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::geometry::Point;
use crate::{Error, Result};

/// Plane a 3D point is projected onto.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Projection {
    #[default]
    Xy,
    Xz,
    Yz,
}

impl FromStr for Projection {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "xy" => Ok(Projection::Xy),
            "xz" => Ok(Projection::Xz),
            "yz" => Ok(Projection::Yz),
            other => Err(Error::UnknownName {
                kind: "projection",
                name: other.into(),
            }),
        }
    }
}

impl Projection {
    fn pick(self, v: [f64; 3]) -> (f64, f64) {
        match self {
            Projection::Xy => (v[0], v[1]),
            Projection::Xz => (v[0], v[2]),
            Projection::Yz => (v[1], v[2]),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GeneratorKind {
    /// `n` points uniform over a `p x p` box, duplicates allowed.
    UniformBox,
    /// `n` distinct cells of a square box sized so that `n / p^2` is the
    /// requested density.
    UniformDensity,
    /// Uniform over a disc of diameter `p`.
    Disc,
    /// Uniform over the outer fifth (by radius) of a disc of diameter `p`.
    Annulus,
    /// Points on a circle of diameter `p`, rounded to the grid.
    Circle,
}

impl GeneratorKind {
    pub fn name(self) -> &'static str {
        match self {
            GeneratorKind::UniformBox => "uniform-box",
            GeneratorKind::UniformDensity => "uniform-density",
            GeneratorKind::Disc => "disc",
            GeneratorKind::Annulus => "annulus",
            GeneratorKind::Circle => "circle",
        }
    }
}

impl FromStr for GeneratorKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [
            GeneratorKind::UniformBox,
            GeneratorKind::UniformDensity,
            GeneratorKind::Disc,
            GeneratorKind::Annulus,
            GeneratorKind::Circle,
        ]
        .into_iter()
        .find(|g| g.name() == s)
        .ok_or_else(|| Error::UnknownName {
            kind: "generator",
            name: s.into(),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Generator {
    pub kind: GeneratorKind,
    pub n: usize,
    /// Box side (ignored by `uniform-density`, which derives it).
    pub p: u64,
    /// Target density for `uniform-density`.
    pub density: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Source {
    File(PathBuf),
    Synthetic(Generator),
}

#[derive(Clone, Debug, PartialEq)]
pub struct DatasetSpec {
    pub source: Source,
    pub projection: Projection,
    /// Multiplier applied before rounding float coordinates.
    pub scale: f64,
    pub seed: u64,
}

impl DatasetSpec {
    pub fn file(path: impl Into<PathBuf>) -> Self {
        DatasetSpec {
            source: Source::File(path.into()),
            projection: Projection::Xy,
            scale: 1.0,
            seed: 0,
        }
    }

    pub fn synthetic(generator: Generator, seed: u64) -> Self {
        DatasetSpec {
            source: Source::Synthetic(generator),
            projection: Projection::Xy,
            scale: 1.0,
            seed,
        }
    }

    /// Short identifier used in benchmark records.
    pub fn id(&self) -> String {
        match &self.source {
            Source::File(path) => path
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| path.display().to_string()),
            Source::Synthetic(g) => match g.kind {
                GeneratorKind::UniformDensity => {
                    format!("{}-d{}-n{}-s{}", g.kind.name(), g.density, g.n, self.seed)
                }
                _ => format!("{}-p{}-n{}-s{}", g.kind.name(), g.p, g.n, self.seed),
            },
        }
    }
}

impl fmt::Display for DatasetSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.id())
    }
}

/// Loads or generates the point set described by `spec`.
pub fn load_points(spec: &DatasetSpec) -> Result<Vec<Point>> {
    if !(spec.scale > 0.0 && spec.scale.is_finite()) {
        return Err(Error::Config(format!("scale must be positive, got {}", spec.scale)));
    }
    match &spec.source {
        Source::File(path) => {
            let text = fs::read_to_string(path)?;
            parse_points(&text, spec.projection, spec.scale)
        }
        Source::Synthetic(g) => generate(g, spec.seed),
    }
}

/// Parses one point per line: two or three numbers separated by whitespace
/// or commas. Lines starting with `#` and blank lines are skipped.
///
/// Integer 2D input at scale 1 passes through unchanged. Anything else is
/// scaled and rounded half away from zero.
pub fn parse_points(text: &str, projection: Projection, scale: f64) -> Result<Vec<Point>> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|f| !f.is_empty())
            .collect();
        let bad = |message: String| Error::Parse {
            line: line_no,
            message,
        };
        match fields.len() {
            2 => {
                if scale == 1.0 {
                    if let (Ok(x), Ok(y)) = (fields[0].parse::<i64>(), fields[1].parse::<i64>()) {
                        out.push(Point::new(x, y));
                        continue;
                    }
                }
                let x = parse_float(fields[0]).map_err(&bad)?;
                let y = parse_float(fields[1]).map_err(&bad)?;
                out.push(quantize_pair(x, y, scale).ok_or_else(|| bad(overflow_msg(raw)))?);
            }
            3 => {
                let mut v = [0.0; 3];
                for (slot, f) in v.iter_mut().zip(&fields) {
                    *slot = parse_float(f).map_err(&bad)?;
                }
                let (x, y) = projection.pick(v);
                out.push(quantize_pair(x, y, scale).ok_or_else(|| bad(overflow_msg(raw)))?);
            }
            k => return Err(bad(format!("expected 2 or 3 fields, found {k}"))),
        }
    }
    Ok(out)
}

fn overflow_msg(line: &str) -> String {
    format!("coordinate overflow after scaling `{}`", line.trim())
}

fn parse_float(s: &str) -> std::result::Result<f64, String> {
    s.parse::<f64>()
        .map_err(|_| format!("not a number: `{s}`"))
        .and_then(|v| {
            if v.is_finite() {
                Ok(v)
            } else {
                Err(format!("not a finite number: `{s}`"))
            }
        })
}

/// `round(v * scale)` with ties away from zero, or `None` when the result
/// does not fit an `i64`.
pub fn quantize(v: f64, scale: f64) -> Option<i64> {
    let r = (v * scale).round();
    // 2^63 is exactly representable; anything at or beyond it overflows.
    if (-9_223_372_036_854_775_808.0..9_223_372_036_854_775_808.0).contains(&r) {
        Some(r as i64)
    } else {
        None
    }
}

fn quantize_pair(x: f64, y: f64, scale: f64) -> Option<Point> {
    Some(Point::new(quantize(x, scale)?, quantize(y, scale)?))
}

/// Deterministic synthetic point set for a fixed seed.
pub fn generate(g: &Generator, seed: u64) -> Result<Vec<Point>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = g.n;
    if n == 0 {
        return Err(Error::Config("generator needs n >= 1".into()));
    }
    let p = g.p as i64;
    if g.kind != GeneratorKind::UniformDensity && p < 1 {
        return Err(Error::Config("generator needs p >= 1".into()));
    }
    let pts = match g.kind {
        GeneratorKind::UniformBox => (0..n)
            .map(|_| Point::new(rng.random_range(1..=p), rng.random_range(1..=p)))
            .collect(),
        GeneratorKind::UniformDensity => {
            if !(g.density > 0.0 && g.density <= 1.0) {
                return Err(Error::Config(format!(
                    "density must be in (0, 1], got {}",
                    g.density
                )));
            }
            let side = ((n as f64 / g.density).sqrt().ceil() as usize).max(1);
            let cells = side * side;
            if n > cells {
                return Err(Error::Config("more points than cells".into()));
            }
            index::sample(&mut rng, cells, n)
                .into_iter()
                .map(|c| Point::new((c % side) as i64 + 1, (c / side) as i64 + 1))
                .collect()
        }
        GeneratorKind::Disc | GeneratorKind::Annulus => {
            let r = g.p as f64 / 2.0;
            let inner = if g.kind == GeneratorKind::Annulus { 0.8 * r } else { 0.0 };
            let mut out = Vec::with_capacity(n);
            while out.len() < n {
                let x: f64 = rng.random_range(-r..=r);
                let y: f64 = rng.random_range(-r..=r);
                let d = (x * x + y * y).sqrt();
                if d <= r && d >= inner {
                    out.push(Point::new(x.round() as i64, y.round() as i64));
                }
            }
            out
        }
        GeneratorKind::Circle => {
            let r = g.p as f64 / 2.0;
            (0..n)
                .map(|_| {
                    let t: f64 = rng.random_range(0.0..std::f64::consts::TAU);
                    Point::new((r * t.cos()).round() as i64, (r * t.sin()).round() as i64)
                })
                .collect()
        }
    };
    Ok(pts)
}
