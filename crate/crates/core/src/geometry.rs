//! Integer points, bounding boxes and the exact orientation predicate.

use std::cmp::Ordering;
use std::fmt;

use crate::{Error, Result};

/// A point on the integer grid.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    #[inline]
    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }
}

impl From<(i64, i64)> for Point {
    fn from((x, y): (i64, i64)) -> Self {
        Point { x, y }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Turn direction of an ordered point triple.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    /// Clockwise (right turn).
    Negative,
    /// Collinear.
    Zero,
    /// Counter-clockwise (left turn).
    Positive,
}

impl Orientation {
    fn from_ordering(ord: Ordering) -> Self {
        match ord {
            Ordering::Less => Orientation::Negative,
            Ordering::Equal => Orientation::Zero,
            Ordering::Greater => Orientation::Positive,
        }
    }

    pub fn reversed(self) -> Self {
        match self {
            Orientation::Negative => Orientation::Positive,
            Orientation::Zero => Orientation::Zero,
            Orientation::Positive => Orientation::Negative,
        }
    }
}

const FAST_LIMIT: i128 = 1 << 63;

/// Sign of the cross product `(b - a) x (c - a)`.
///
/// Coordinate differences span up to 65 bits, so the products can need 130
/// bits. Differences below 2^63 in magnitude take the plain `i128` path;
/// anything larger compares the two products as sign and `u128` magnitude.
#[inline]
pub fn orientation(a: Point, b: Point, c: Point) -> Orientation {
    let abx = b.x as i128 - a.x as i128;
    let aby = b.y as i128 - a.y as i128;
    let acx = c.x as i128 - a.x as i128;
    let acy = c.y as i128 - a.y as i128;
    if abx.abs() < FAST_LIMIT
        && aby.abs() < FAST_LIMIT
        && acx.abs() < FAST_LIMIT
        && acy.abs() < FAST_LIMIT
    {
        let det = abx * acy - aby * acx;
        return Orientation::from_ordering(det.cmp(&0));
    }
    Orientation::from_ordering(cmp_products(abx, acy, aby, acx))
}

/// Compares `p * q` against `r * s` where every factor fits in 65 signed bits.
fn cmp_products(p: i128, q: i128, r: i128, s: i128) -> Ordering {
    let lhs = signed_product(p, q);
    let rhs = signed_product(r, s);
    match (lhs, rhs) {
        ((ls, lm), (rs, rm)) if ls == rs => {
            if ls >= 0 {
                lm.cmp(&rm)
            } else {
                rm.cmp(&lm)
            }
        }
        ((ls, _), (rs, _)) => ls.cmp(&rs),
    }
}

/// (sign, magnitude) of a product of two values below 2^64 in magnitude.
fn signed_product(a: i128, b: i128) -> (i8, u128) {
    let mag = a.unsigned_abs() * b.unsigned_abs();
    if mag == 0 {
        (0, 0)
    } else if (a < 0) != (b < 0) {
        (-1, mag)
    } else {
        (1, mag)
    }
}

/// Twice the signed area of triangle `abc`, saturating on overflow.
///
/// Used as a distance proxy from point `c` to the line through `a` and `b`.
/// Exact for coordinates within 2^62 of each other.
#[inline]
pub fn cross(a: Point, b: Point, c: Point) -> i128 {
    let abx = b.x as i128 - a.x as i128;
    let aby = b.y as i128 - a.y as i128;
    let acx = c.x as i128 - a.x as i128;
    let acy = c.y as i128 - a.y as i128;
    abx.saturating_mul(acy).saturating_sub(aby.saturating_mul(acx))
}

/// True when `p` lies on the closed segment `[a, b]`.
pub fn on_segment(a: Point, b: Point, p: Point) -> bool {
    orientation(a, b, p) == Orientation::Zero
        && p.x >= a.x.min(b.x)
        && p.x <= a.x.max(b.x)
        && p.y >= a.y.min(b.y)
        && p.y <= a.y.max(b.y)
}

/// Orders two points that are collinear with `origin` and on the same side of
/// it by their distance from `origin`.
pub(crate) fn cmp_collinear_distance(origin: Point, a: Point, b: Point) -> Ordering {
    let da = (a.x.abs_diff(origin.x), a.y.abs_diff(origin.y));
    let db = (b.x.abs_diff(origin.x), b.y.abs_diff(origin.y));
    da.0.cmp(&db.0).then(da.1.cmp(&db.1))
}

/// Axis-aligned integer bounding box, inclusive on both ends.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundingBox {
    pub x_min: i64,
    pub x_max: i64,
    pub y_min: i64,
    pub y_max: i64,
}

impl BoundingBox {
    /// Number of integer columns spanned.
    pub fn width(&self) -> u64 {
        self.x_max.abs_diff(self.x_min) + 1
    }

    /// Number of integer rows spanned.
    pub fn height(&self) -> u64 {
        self.y_max.abs_diff(self.y_min) + 1
    }

    pub fn contains(&self, p: Point) -> bool {
        p.x >= self.x_min && p.x <= self.x_max && p.y >= self.y_min && p.y <= self.y_max
    }

    /// Grid cell count `p * q` as a float, for density figures.
    pub fn area(&self) -> f64 {
        self.width() as f64 * self.height() as f64
    }
}

/// Tight bounding box of a non-empty point set in one pass.
pub fn find_bounds(points: &[Point]) -> Result<BoundingBox> {
    let first = points.first().ok_or(Error::EmptyInput)?;
    let mut bbox = BoundingBox {
        x_min: first.x,
        x_max: first.x,
        y_min: first.y,
        y_max: first.y,
    };
    for p in &points[1..] {
        bbox.x_min = bbox.x_min.min(p.x);
        bbox.x_max = bbox.x_max.max(p.x);
        bbox.y_min = bbox.y_min.min(p.y);
        bbox.y_max = bbox.y_max.max(p.y);
    }
    Ok(bbox)
}

/// A strict convex hull in canonical form: counter-clockwise, no collinear or
/// repeated vertices, starting at the lexicographically smallest vertex.
///
/// Degenerate inputs give one vertex (all points equal) or two (all points
/// collinear).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hull {
    vertices: Vec<Point>,
}

impl Hull {
    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn into_vertices(self) -> Vec<Point> {
        self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// True when `p` is inside or on the boundary of the hull.
    pub fn contains(&self, p: Point) -> bool {
        match self.vertices.as_slice() {
            [] => false,
            [a] => *a == p,
            [a, b] => on_segment(*a, *b, p),
            vs => (0..vs.len()).all(|i| {
                orientation(vs[i], vs[(i + 1) % vs.len()], p) != Orientation::Negative
            }),
        }
    }
}

/// Puts a convex polygon into canonical [`Hull`] form.
///
/// Accepts either rotational order; drops repeated and collinear vertices.
pub fn canonicalize_hull(vertices: &[Point]) -> Result<Hull> {
    if vertices.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut ring: Vec<Point> = Vec::with_capacity(vertices.len());
    for &v in vertices {
        if ring.last() != Some(&v) {
            ring.push(v);
        }
    }
    while ring.len() > 1 && ring.first() == ring.last() {
        ring.pop();
    }

    // Every non-zero turn of a convex ring has the same sign.
    let n = ring.len();
    let turn = (0..n)
        .map(|i| orientation(ring[(i + n - 1) % n], ring[i], ring[(i + 1) % n]))
        .find(|&o| o != Orientation::Zero);
    match turn {
        None => {
            // All collinear (or a single point): keep the two extremes.
            let lo = *ring.iter().min().unwrap();
            let hi = *ring.iter().max().unwrap();
            let vertices = if lo == hi { vec![lo] } else { vec![lo, hi] };
            return Ok(Hull { vertices });
        }
        Some(Orientation::Negative) => ring.reverse(),
        Some(_) => {}
    }

    let mut out: Vec<Point> = Vec::with_capacity(ring.len());
    for &v in &ring {
        while out.len() >= 2
            && orientation(out[out.len() - 2], out[out.len() - 1], v) == Orientation::Zero
        {
            out.pop();
        }
        out.push(v);
    }
    // Close the ring across the seam.
    loop {
        let n = out.len();
        if n < 3 {
            break;
        }
        if orientation(out[n - 2], out[n - 1], out[0]) == Orientation::Zero {
            out.pop();
        } else if orientation(out[n - 1], out[0], out[1]) == Orientation::Zero {
            out.remove(0);
        } else {
            break;
        }
    }

    let start = out
        .iter()
        .enumerate()
        .min_by_key(|(_, p)| **p)
        .map(|(i, _)| i)
        .unwrap();
    out.rotate_left(start);
    Ok(Hull { vertices: out })
}
