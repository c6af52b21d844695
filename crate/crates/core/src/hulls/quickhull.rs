use crate::geometry::{canonicalize_hull, cross, orientation, Hull, Orientation, Point};
use crate::{Error, Result};

enum Task {
    Split { a: Point, b: Point, outside: Vec<Point> },
    Emit(Point),
}

/// QuickHull: split on the chord between the lexicographic extremes, then
/// recurse on the furthest point outside each edge.
///
/// Uses an explicit work stack, so deep splits on convex-position inputs do
/// not grow the call stack.
pub fn quickhull(points: &[Point]) -> Result<Hull> {
    let (mut lo, mut hi) = match points.first() {
        Some(&p) => (p, p),
        None => return Err(Error::EmptyInput),
    };
    for &p in points {
        lo = lo.min(p);
        hi = hi.max(p);
    }
    if lo == hi {
        return canonicalize_hull(&[lo]);
    }

    let mut below = Vec::new();
    let mut above = Vec::new();
    for &p in points {
        match orientation(lo, hi, p) {
            Orientation::Negative => below.push(p),
            Orientation::Positive => above.push(p),
            Orientation::Zero => {}
        }
    }

    // Counter-clockwise: lo, lower chain, hi, upper chain.
    let mut ring = Vec::new();
    let mut stack = vec![
        Task::Split {
            a: hi,
            b: lo,
            outside: above,
        },
        Task::Emit(hi),
        Task::Split {
            a: lo,
            b: hi,
            outside: below,
        },
        Task::Emit(lo),
    ];
    while let Some(task) = stack.pop() {
        match task {
            Task::Emit(p) => ring.push(p),
            Task::Split { a, b, outside } => {
                if outside.is_empty() {
                    continue;
                }
                let c = furthest_right(a, b, &outside);
                let mut left_part = Vec::new();
                let mut right_part = Vec::new();
                for p in outside {
                    if orientation(a, c, p) == Orientation::Negative {
                        left_part.push(p);
                    } else if orientation(c, b, p) == Orientation::Negative {
                        right_part.push(p);
                    }
                }
                stack.push(Task::Split {
                    a: c,
                    b,
                    outside: right_part,
                });
                stack.push(Task::Emit(c));
                stack.push(Task::Split {
                    a,
                    b: c,
                    outside: left_part,
                });
            }
        }
    }
    canonicalize_hull(&ring)
}

/// Point furthest right of `a -> b`. Ties go to the one further along the
/// chord direction, which is always a vertex.
fn furthest_right(a: Point, b: Point, pts: &[Point]) -> Point {
    let dx = b.x as i128 - a.x as i128;
    let dy = b.y as i128 - a.y as i128;
    let along = |p: Point| dx * (p.x as i128 - a.x as i128) + dy * (p.y as i128 - a.y as i128);
    let mut best = pts[0];
    let mut best_dist = -cross(a, b, best);
    for &p in &pts[1..] {
        let d = -cross(a, b, p);
        if d > best_dist || (d == best_dist && along(p) > along(best)) {
            best = p;
            best_dist = d;
        }
    }
    best
}
