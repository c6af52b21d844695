use std::cmp::Ordering;

use crate::geometry::{canonicalize_hull, cmp_collinear_distance, orientation, Hull, Orientation, Point};
use crate::{Error, Result};

/// Graham scan: sort by polar angle around the lowest point, then a stack
/// pass that pops anything that is not a strict left turn.
///
/// Points at equal angle are ordered nearest first, so the furthest one on
/// each ray survives.
pub fn graham_scan(points: &[Point]) -> Result<Hull> {
    let pivot = *points
        .iter()
        .min_by_key(|p| (p.y, p.x))
        .ok_or(Error::EmptyInput)?;
    let mut rest: Vec<Point> = points.iter().copied().filter(|&p| p != pivot).collect();
    if rest.is_empty() {
        return canonicalize_hull(&[pivot]);
    }
    // Every other point is above the pivot or to its right on the same row,
    // so angles lie in [0, pi) and the orientation comparator is a total order.
    rest.sort_unstable_by(|&a, &b| match orientation(pivot, a, b) {
        Orientation::Positive => Ordering::Less,
        Orientation::Negative => Ordering::Greater,
        Orientation::Zero => cmp_collinear_distance(pivot, a, b),
    });

    let mut stack: Vec<Point> = Vec::with_capacity(rest.len() + 1);
    stack.push(pivot);
    for p in rest {
        while stack.len() >= 2
            && orientation(stack[stack.len() - 2], stack[stack.len() - 1], p)
                != Orientation::Positive
        {
            stack.pop();
        }
        if stack.len() == 1 || *stack.last().unwrap() != p {
            stack.push(p);
        }
    }
    canonicalize_hull(&stack)
}
