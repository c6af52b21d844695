use std::cmp::Ordering;

use crate::geometry::{canonicalize_hull, cmp_collinear_distance, orientation, Hull, Orientation, Point};
use crate::{Error, Result};

/// Gift wrapping in `O(n h)`.
///
/// From the current vertex, the next one is the candidate with no point to
/// its right; collinear candidates resolve to the furthest.
pub fn jarvis_march(points: &[Point]) -> Result<Hull> {
    let start = *points.iter().min().ok_or(Error::EmptyInput)?;
    let mut ring = vec![start];
    let mut current = start;
    loop {
        let mut candidate: Option<Point> = None;
        for &r in points {
            if r == current {
                continue;
            }
            let Some(c) = candidate else {
                candidate = Some(r);
                continue;
            };
            match orientation(current, c, r) {
                Orientation::Negative => candidate = Some(r),
                Orientation::Zero
                    if cmp_collinear_distance(current, r, c) == Ordering::Greater =>
                {
                    candidate = Some(r)
                }
                _ => {}
            }
        }
        match candidate {
            None => break,
            Some(next) if next == start => break,
            Some(next) => {
                ring.push(next);
                current = next;
                if ring.len() > points.len() {
                    unreachable!("gift wrapping failed to close");
                }
            }
        }
    }
    canonicalize_hull(&ring)
}
