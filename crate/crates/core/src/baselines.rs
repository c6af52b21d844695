//! Two earlier preconditioners, re-implemented from their published
//! descriptions for comparison:
//!
//! * AT: take the points extreme in x and y, and drop everything strictly
//!   inside the polygon they span.
//! * TZTM: start from the AT polygon and repeatedly push every edge out to the
//!   furthest point beyond it, dropping points that end up strictly inside.
//!
//! Both only ever drop points strictly interior to a polygon whose vertices
//! are on the hull boundary, so no hull vertex is lost.

use crate::geometry::{cross, orientation, Orientation, Point};

/// Axis-extreme points in counter-clockwise order: both ends of the bottom,
/// right, top and left extreme sides, duplicates removed. With no ties this
/// is the usual quadrilateral.
pub fn extreme_polygon(points: &[Point]) -> Vec<Point> {
    let Some(&first) = points.first() else {
        return Vec::new();
    };
    let key = |p: Point| [(p.y, p.x), (p.y, -p.x), (-p.x, p.y), (-p.x, -p.y), (-p.y, -p.x), (-p.y, p.x), (p.x, -p.y), (p.x, p.y)];
    let mut best = [first; 8];
    let mut best_key = key(first);
    for &p in &points[1..] {
        let k = key(p);
        for j in 0..8 {
            if k[j] < best_key[j] {
                best_key[j] = k[j];
                best[j] = p;
            }
        }
    }
    let mut poly: Vec<Point> = Vec::with_capacity(8);
    for p in best {
        if !poly.contains(&p) {
            poly.push(p);
        }
    }
    poly
}

/// True when `p` is strictly inside the counter-clockwise polygon `poly`.
///
/// Polygons with fewer than three vertices have no interior.
pub fn strictly_inside(poly: &[Point], p: Point) -> bool {
    if poly.len() < 3 {
        return false;
    }
    let mut prev = *poly.last().unwrap();
    for &v in poly {
        if orientation(prev, v, p) != Orientation::Positive {
            return false;
        }
        prev = v;
    }
    true
}

/// AT preconditioning: keeps every point not strictly inside the extreme
/// polygon. With fewer than three distinct extremes the input is returned
/// unchanged.
pub fn at_reduce(points: &[Point]) -> Vec<Point> {
    let poly = extreme_polygon(points);
    if poly.len() < 3 {
        return points.to_vec();
    }
    points
        .iter()
        .copied()
        .filter(|&p| !strictly_inside(&poly, p))
        .collect()
}

/// Working state of the TZTM heuristic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PseudoHull {
    /// Convex polygon, counter-clockwise, vertices on the hull boundary.
    pub vertices: Vec<Point>,
    /// Points not yet discarded.
    pub survivors: Vec<Point>,
}

impl PseudoHull {
    /// The AT step: extreme polygon plus the points outside or on it.
    pub fn initial(points: &[Point]) -> Self {
        let mut vertices = extreme_polygon(points);
        if vertices.len() >= 3 && collinear(&vertices) {
            // Collinear extremes: keep the two ends as a flat polygon.
            let lo = *vertices.iter().min().unwrap();
            let hi = *vertices.iter().max().unwrap();
            vertices = vec![lo, hi];
        }
        let survivors = if vertices.len() < 3 {
            points.to_vec()
        } else {
            points
                .iter()
                .copied()
                .filter(|&p| !strictly_inside(&vertices, p))
                .collect()
        };
        PseudoHull {
            vertices,
            survivors,
        }
    }

    /// Pushes each edge out to its furthest exterior survivor, then discards
    /// survivors strictly inside the grown polygon. Returns false when no edge
    /// had an exterior point (a fixed point).
    pub fn expand(&mut self) -> bool {
        let n = self.vertices.len();
        if n < 2 {
            return false;
        }
        let mut grown = Vec::with_capacity(2 * n);
        let mut changed = false;
        for i in 0..n {
            let a = self.vertices[i];
            let b = self.vertices[(i + 1) % n];
            grown.push(a);
            if let Some(c) = furthest_outside(a, b, &self.survivors) {
                grown.push(c);
                changed = true;
            }
        }
        if !changed {
            return false;
        }
        self.vertices = grown;
        let poly = &self.vertices;
        self.survivors.retain(|&p| !strictly_inside(poly, p));
        true
    }
}

/// TZTM preconditioning. Iteration 1 is the AT step; each later iteration is
/// one [`PseudoHull::expand`]. All survivors are re-tested after every
/// expansion.
pub fn tztm_reduce(points: &[Point], iterations: usize) -> Vec<Point> {
    tztm_pseudo_hull(points, iterations).survivors
}

pub fn tztm_pseudo_hull(points: &[Point], iterations: usize) -> PseudoHull {
    let mut state = PseudoHull::initial(points);
    for _ in 1..iterations {
        if !state.expand() {
            break;
        }
    }
    state
}

/// Survivor strictly right of `a -> b` with the largest cross product.
/// Ties go to the lexicographically smallest point.
fn furthest_outside(a: Point, b: Point, pts: &[Point]) -> Option<Point> {
    let mut best: Option<(i128, Point)> = None;
    for &p in pts {
        let d = -cross(a, b, p);
        if d <= 0 {
            continue;
        }
        match best {
            Some((bd, bp)) if d < bd || (d == bd && p >= bp) => {}
            _ => best = Some((d, p)),
        }
    }
    best.map(|(_, p)| p)
}

fn collinear(poly: &[Point]) -> bool {
    poly[2..]
        .iter()
        .all(|&p| orientation(poly[0], poly[1], p) == Orientation::Zero)
}
