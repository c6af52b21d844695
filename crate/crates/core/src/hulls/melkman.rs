use std::collections::VecDeque;

use crate::geometry::{canonicalize_hull, on_segment, orientation, Hull, Orientation, Point};
use crate::reducer::PolygonalChain;
use crate::{Error, Result};

/// Melkman's online hull of a simple polygonal chain in `O(s)`.
///
/// The deque holds the current hull counter-clockwise from front to back,
/// with the most recently added vertex at both ends. A new chain vertex can
/// only leave the hull across one of the two edges at that vertex, so each
/// step tests two orientations and pops from either end.
///
/// The chain must be simple; [`build_polyline`](crate::reducer::build_polyline)
/// output always is. Other inputs give an unspecified (but non-panicking)
/// result.
pub fn melkman(chain: &PolygonalChain) -> Result<Hull> {
    let v = chain.vertices();
    let first = *v.first().ok_or(Error::EmptyInput)?;

    // Seed from the first three non-collinear vertices, absorbing any leading
    // collinear run into its two extremes.
    let Some(second_at) = v.iter().position(|&p| p != first) else {
        return canonicalize_hull(&[first]);
    };
    let second = v[second_at];
    let (mut lo, mut hi) = (first.min(second), first.max(second));
    let mut k = second_at + 1;
    while k < v.len() && orientation(first, second, v[k]) == Orientation::Zero {
        lo = lo.min(v[k]);
        hi = hi.max(v[k]);
        k += 1;
    }
    if k == v.len() {
        return canonicalize_hull(&[lo, hi]);
    }
    let c = v[k];
    let mut dq: VecDeque<Point> = if orientation(lo, hi, c) == Orientation::Positive {
        VecDeque::from([c, lo, hi, c])
    } else {
        VecDeque::from([c, hi, lo, c])
    };

    for &p in &v[k + 1..] {
        let n = dq.len();
        let (top_prev, top) = (dq[n - 2], dq[n - 1]);
        let (bot, bot_next) = (dq[0], dq[1]);
        if inside_edge(top_prev, top, p) && inside_edge(bot, bot_next, p) {
            continue;
        }
        while dq.len() > 2 {
            let n = dq.len();
            if drops_end(dq[n - 2], dq[n - 1], p) {
                dq.pop_back();
            } else {
                break;
            }
        }
        dq.push_back(p);
        while dq.len() > 2 {
            if drops_start(p, dq[0], dq[1]) {
                dq.pop_front();
            } else {
                break;
            }
        }
        dq.push_front(p);
    }

    dq.pop_back();
    canonicalize_hull(dq.make_contiguous())
}

/// `p` is on the inner side of edge `a -> b` or on the edge itself.
#[inline]
fn inside_edge(a: Point, b: Point, p: Point) -> bool {
    match orientation(a, b, p) {
        Orientation::Positive => true,
        Orientation::Zero => on_segment(a, b, p),
        Orientation::Negative => false,
    }
}

/// With `p` appended after `a -> b`, `b` is no longer a strict vertex.
#[inline]
fn drops_end(a: Point, b: Point, p: Point) -> bool {
    match orientation(a, b, p) {
        Orientation::Negative => true,
        Orientation::Zero => on_segment(a, p, b),
        Orientation::Positive => false,
    }
}

/// With `p` prepended before `b -> c`, `b` is no longer a strict vertex.
#[inline]
fn drops_start(p: Point, b: Point, c: Point) -> bool {
    match orientation(p, b, c) {
        Orientation::Negative => true,
        Orientation::Zero => on_segment(p, c, b),
        Orientation::Positive => false,
    }
}
