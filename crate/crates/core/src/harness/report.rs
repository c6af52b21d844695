use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Write;
use std::time::Duration;

use crate::harness::pipeline::{BenchRecord, Method};
use crate::occupancy::practical_linearity_check;
use crate::{Error, Result};

pub const CSV_HEADER: [&str; 14] = [
    "dataset",
    "n",
    "p",
    "q",
    "density",
    "method",
    "hull_algo",
    "s",
    "t_n",
    "t_r",
    "t_s",
    "speedup",
    "reduction_pct",
    "repetitions",
];

/// Seconds with exactly nine fractional digits.
pub fn format_seconds(d: Duration) -> String {
    format!("{}.{:09}", d.as_secs(), d.subsec_nanos())
}

pub fn parse_seconds(s: &str) -> Option<Duration> {
    let (secs, frac) = s.split_once('.')?;
    if frac.len() != 9 || !frac.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    Some(Duration::new(secs.parse().ok()?, frac.parse().ok()?))
}

fn sorted(records: &[BenchRecord]) -> Vec<&BenchRecord> {
    let mut rows: Vec<&BenchRecord> = records.iter().collect();
    rows.sort_by(|a, b| (&a.dataset, a.method, a.hull_algo).cmp(&(&b.dataset, b.method, b.hull_algo)));
    rows
}

/// Header plus one row per record, ordered by (dataset, method, algo).
pub fn emit_csv<W: Write>(records: &[BenchRecord], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in sorted(records) {
        w.write_record([
            r.dataset.clone(),
            r.n.to_string(),
            r.p.to_string(),
            r.q.to_string(),
            r.density.to_string(),
            r.method.to_string(),
            r.hull_algo.to_string(),
            r.s.to_string(),
            format_seconds(r.t_n),
            format_seconds(r.t_r),
            format_seconds(r.t_s),
            r.speedup.to_string(),
            r.reduction_pct.to_string(),
            r.repetitions.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn csv_string(records: &[BenchRecord]) -> Result<String> {
    let mut buf = Vec::new();
    emit_csv(records, &mut buf)?;
    Ok(String::from_utf8(buf).expect("csv output is utf-8"))
}

pub fn parse_csv(text: &str) -> Result<Vec<BenchRecord>> {
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    let header = rdr.headers()?.clone();
    if header.iter().ne(CSV_HEADER) {
        return Err(Error::Parse {
            line: 1,
            message: "unexpected header".into(),
        });
    }
    let mut out = Vec::new();
    for (i, row) in rdr.records().enumerate() {
        let row = row?;
        let line = i + 2;
        let bad = |field: &str| Error::Parse {
            line,
            message: format!("invalid {field}"),
        };
        let get = |k: usize| row.get(k).ok_or_else(|| bad(CSV_HEADER[k]));
        macro_rules! num {
            ($k:expr) => {
                get($k)?.parse().map_err(|_| bad(CSV_HEADER[$k]))?
            };
        }
        let secs = |k: usize| get(k).and_then(|v| parse_seconds(v).ok_or_else(|| bad(CSV_HEADER[k])));
        out.push(BenchRecord {
            dataset: get(0)?.to_string(),
            n: num!(1),
            p: num!(2),
            q: num!(3),
            density: num!(4),
            method: get(5)?.parse()?,
            hull_algo: get(6)?.parse()?,
            s: num!(7),
            t_n: secs(8)?,
            t_r: secs(9)?,
            t_s: secs(10)?,
            speedup: num!(11),
            reduction_pct: num!(12),
            repetitions: num!(13),
        });
    }
    Ok(out)
}

/// Ordinary least squares `y = slope * x + intercept`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LinearFit {
    pub slope: f64,
    pub intercept: f64,
    pub r2: f64,
}

/// Needs at least two distinct `x` values.
pub fn linear_fit(xs: &[f64], ys: &[f64]) -> Result<LinearFit> {
    assert_eq!(xs.len(), ys.len());
    let n = xs.len() as f64;
    let insufficient = || Error::InsufficientData(format!("{} samples, need 2 distinct n", xs.len()));
    if xs.len() < 2 {
        return Err(insufficient());
    }
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let syy: f64 = ys.iter().map(|y| (y - my).powi(2)).sum();
    if sxx == 0.0 {
        return Err(insufficient());
    }
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let r2 = if syy == 0.0 { 1.0 } else { sxy * sxy / (sxx * syy) };
    Ok(LinearFit {
        slope,
        intercept,
        r2,
    })
}

/// Fit of mean `t_r` against `n` for one method, over all its records.
pub fn fit_reduction_time(records: &[BenchRecord], method: Method) -> Result<LinearFit> {
    let (xs, ys): (Vec<f64>, Vec<f64>) = records
        .iter()
        .filter(|r| r.method == method)
        .map(|r| (r.n as f64, r.t_r.as_secs_f64()))
        .unzip();
    linear_fit(&xs, &ys)
}

/// Text summary: `t_r` fits per preconditioner, slope ratios against the
/// proposed method, mean speedups per method x algorithm, and records whose
/// box is too sparse for the extraction to stay linear.
pub fn stats_report(records: &[BenchRecord]) -> Result<String> {
    let mut fits = BTreeMap::new();
    let mut fit_errors = Vec::new();
    let methods: std::collections::BTreeSet<Method> = records
        .iter()
        .map(|r| r.method)
        .filter(|m| *m != Method::None)
        .collect();
    for &m in &methods {
        match fit_reduction_time(records, m) {
            Ok(f) => {
                fits.insert(m, f);
            }
            Err(e) => fit_errors.push((m, e)),
        }
    }
    if fits.is_empty() {
        return Err(Error::InsufficientData(
            "no method has records at two or more distinct n".into(),
        ));
    }

    let mut s = String::new();
    writeln!(s, "reduction time fit (t_r = slope * n + intercept)").unwrap();
    writeln!(s, "{:<14} {:>14} {:>14} {:>8}", "method", "slope[s/pt]", "intercept[s]", "R2").unwrap();
    for (m, f) in &fits {
        writeln!(s, "{:<14} {:>14.4e} {:>14.4e} {:>8.4}", m.to_string(), f.slope, f.intercept, f.r2).unwrap();
    }
    for (m, e) in &fit_errors {
        writeln!(s, "{:<14} no fit: {e}", m.to_string()).unwrap();
    }
    let base = fits
        .iter()
        .find(|(m, _)| matches!(m, Method::Proposed { .. }))
        .map(|(m, f)| (*m, *f));
    if let Some((bm, bf)) = base {
        if bf.slope > 0.0 {
            for (m, f) in &fits {
                if *m != bm {
                    writeln!(s, "slope ratio {m} / {bm}: {:.3}", f.slope / bf.slope).unwrap();
                }
            }
        }
    }

    let mut speedups: BTreeMap<(Method, crate::hulls::HullAlgorithm), (f64, usize)> = BTreeMap::new();
    for r in records {
        let e = speedups.entry((r.method, r.hull_algo)).or_insert((0.0, 0));
        e.0 += r.speedup;
        e.1 += 1;
    }
    writeln!(s).unwrap();
    writeln!(s, "mean speedup").unwrap();
    writeln!(s, "{:<14} {:<10} {:>10} {:>6}", "method", "algo", "speedup", "runs").unwrap();
    for ((m, a), (sum, k)) in &speedups {
        writeln!(s, "{:<14} {:<10} {:>10.3} {:>6}", m.to_string(), a.to_string(), sum / *k as f64, k).unwrap();
    }

    let flagged: Vec<&BenchRecord> = records
        .iter()
        .filter(|r| !practical_linearity_check(r.n as u64, r.p, 64))
        .collect();
    if !flagged.is_empty() {
        writeln!(s).unwrap();
        writeln!(s, "sparse boxes (p >= 65 n, extraction may dominate):").unwrap();
        for r in flagged {
            writeln!(s, "  {} n={} p={} {} {}", r.dataset, r.n, r.p, r.method, r.hull_algo).unwrap();
        }
    }
    Ok(s)
}
