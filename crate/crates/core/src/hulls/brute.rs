use crate::geometry::{canonicalize_hull, on_segment, orientation, Hull, Orientation, Point};
use crate::{Error, Result};

/// Default input bound for [`brute_force_hull`].
pub const BRUTE_FORCE_LIMIT: usize = 500;

/// Cubic-time reference hull, used as a test oracle.
///
/// A directed pair `(a, b)` is a hull edge iff every other point is strictly
/// left of it or on the closed segment `[a, b]`.
pub fn brute_force_hull(points: &[Point]) -> Result<Hull> {
    brute_force_hull_with_limit(points, BRUTE_FORCE_LIMIT)
}

pub fn brute_force_hull_with_limit(points: &[Point], limit: usize) -> Result<Hull> {
    if points.is_empty() {
        return Err(Error::EmptyInput);
    }
    if points.len() > limit {
        return Err(Error::OracleLimit {
            n: points.len(),
            limit,
        });
    }
    let pts = super::distinct_sorted(points);
    let first = pts[0];
    let last = *pts.last().unwrap();
    if pts
        .iter()
        .all(|&p| orientation(first, last, p) == Orientation::Zero)
    {
        return canonicalize_hull(&[first, last]);
    }

    let ok = |a: Point, b: Point, r: Point| match orientation(a, b, r) {
        Orientation::Positive => true,
        Orientation::Zero => on_segment(a, b, r),
        Orientation::Negative => false,
    };
    let mut next: Vec<Option<usize>> = vec![None; pts.len()];
    // The last point that ruled out a pair is tried first on the next one.
    let mut witness = 0;
    for (i, &a) in pts.iter().enumerate() {
        for (j, &b) in pts.iter().enumerate() {
            if i == j || !ok(a, b, pts[witness]) {
                continue;
            }
            let is_edge = match pts.iter().position(|&r| !ok(a, b, r)) {
                Some(k) => {
                    witness = k;
                    false
                }
                None => true,
            };
            if is_edge {
                next[i] = Some(j);
                break;
            }
        }
    }

    // Index 0 is the lexicographic minimum and always a vertex.
    let mut ring = vec![pts[0]];
    let mut at = 0;
    loop {
        at = next[at].expect("every hull vertex has an outgoing edge");
        if at == 0 {
            break;
        }
        ring.push(pts[at]);
        debug_assert!(ring.len() <= pts.len());
    }
    canonicalize_hull(&ring)
}
