#![allow(dead_code)]

use hullprep::geometry::Point;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn cross(o: Point, a: Point, b: Point) -> i128 {
    (a.x as i128 - o.x as i128) * (b.y as i128 - o.y as i128)
        - (a.y as i128 - o.y as i128) * (b.x as i128 - o.x as i128)
}

/// Andrew's monotone chain with strict turns: counter-clockwise, no collinear
/// or repeated vertices, starting at the lexicographic minimum. Collinear
/// input gives its two ends, a single distinct point gives itself.
pub fn monotone_chain(points: &[Point]) -> Vec<Point> {
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let mut lower: Vec<Point> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<Point> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Mixed random point sets: dense and sparse boxes, thin strips, lines,
/// heavy duplication, circles and offset coordinates.
pub fn random_case(r: &mut ChaCha8Rng, n_min: usize, n_max: usize) -> Vec<Point> {
    let n = r.random_range(n_min..=n_max);
    let shift = Point::new(r.random_range(-1000..1000), r.random_range(-1000..1000));
    let pts: Vec<Point> = match r.random_range(0..8) {
        0 => {
            let side = (n as f64).sqrt().ceil() as i64 + 1;
            (0..n)
                .map(|_| Point::new(r.random_range(0..side), r.random_range(0..side)))
                .collect()
        }
        1 => {
            let w = r.random_range(1..10_000);
            let h = r.random_range(1..10_000);
            (0..n)
                .map(|_| Point::new(r.random_range(0..w), r.random_range(0..h)))
                .collect()
        }
        2 => {
            let w = r.random_range(1..4);
            let h = r.random_range(1..200);
            let (w, h) = if r.random_bool(0.5) { (w, h) } else { (h, w) };
            (0..n)
                .map(|_| Point::new(r.random_range(0..w), r.random_range(0..h)))
                .collect()
        }
        3 => {
            let (dx, dy) = (r.random_range(-5..=5), r.random_range(-5..=5));
            (0..n)
                .map(|_| {
                    let t = r.random_range(-50..50);
                    Point::new(t * dx, t * dy)
                })
                .collect()
        }
        4 => {
            let k = r.random_range(1..=6);
            let base: Vec<Point> = (0..k)
                .map(|_| Point::new(r.random_range(0..20), r.random_range(0..20)))
                .collect();
            (0..n).map(|_| base[r.random_range(0..k)]).collect()
        }
        5 => {
            let rad = r.random_range(5.0..2000.0);
            (0..n)
                .map(|_| {
                    let t: f64 = r.random_range(0.0..std::f64::consts::TAU);
                    Point::new((rad * t.cos()).round() as i64, (rad * t.sin()).round() as i64)
                })
                .collect()
        }
        6 => {
            // Sparse points in a wide box: many empty columns.
            let w = (n as i64) * r.random_range(2..50);
            (0..n)
                .map(|_| Point::new(r.random_range(0..w), r.random_range(0..30)))
                .collect()
        }
        _ => {
            let side = r.random_range(1..60);
            (0..n)
                .map(|_| Point::new(r.random_range(0..side), r.random_range(0..side)))
                .collect()
        }
    };
    pts.into_iter()
        .map(|p| Point::new(p.x + shift.x, p.y + shift.y))
        .collect()
}

/// Strictly convex lattice polygon with `2 * half` vertices: primitive edge
/// directions and their negations, walked in angular order.
pub fn convex_position(r: &mut ChaCha8Rng, half: usize) -> Vec<Point> {
    let mut dirs: Vec<(i64, i64)> = Vec::new();
    while dirs.len() < half {
        let d: (i64, i64) = (r.random_range(-30..=30), r.random_range(0..=30));
        let upper = d.1 > 0 || (d.1 == 0 && d.0 > 0);
        if !upper || gcd(d.0.abs(), d.1) != 1 || dirs.contains(&d) {
            continue;
        }
        dirs.push(d);
    }
    let mut all: Vec<(i64, i64)> = dirs.iter().flat_map(|&(x, y)| [(x, y), (-x, -y)]).collect();
    all.sort_by(|a, b| {
        let ha = (a.1 < 0 || (a.1 == 0 && a.0 < 0)) as u8;
        let hb = (b.1 < 0 || (b.1 == 0 && b.0 < 0)) as u8;
        ha.cmp(&hb).then_with(|| (b.0 * a.1).cmp(&(a.0 * b.1)))
    });
    let mut out = Vec::with_capacity(all.len());
    let mut p = Point::new(0, 0);
    for d in all {
        out.push(p);
        p = Point::new(p.x + d.0, p.y + d.1);
    }
    out
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
