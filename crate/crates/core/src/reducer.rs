//! Column min/max reduction of an integer point set.
//!
//! Every point is bucketed by its column (translated x). Each bucket keeps
//! only the lowest and highest y it has seen. Any point strictly between the
//! two is collinear with them on a vertical segment, so it cannot be a strict
//! hull vertex and the hull of the kept points equals the hull of the input.
//!
//! Scanning the buckets left to right and joining low to high inside a
//! column, then high to the next column's low, gives a simple polygonal
//! chain. Melkman's algorithm accepts that chain directly.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use crate::geometry::{find_bounds, orientation, BoundingBox, Orientation, Point};
use crate::occupancy::{Occupancy, OccupancyKind};
use crate::{Error, Result};

/// Axis the slots are indexed by.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Axis {
    /// One slot per column; slots hold y extremes.
    #[default]
    X,
    /// One slot per row; slots hold x extremes.
    Y,
}

impl Axis {
    fn other(self) -> Axis {
        match self {
            Axis::X => Axis::Y,
            Axis::Y => Axis::X,
        }
    }

    #[inline(always)]
    fn split(self, p: Point) -> (i64, i64) {
        match self {
            Axis::X => (p.x, p.y),
            Axis::Y => (p.y, p.x),
        }
    }

    #[inline(always)]
    fn join(self, slot: i64, value: i64) -> Point {
        match self {
            Axis::X => Point::new(slot, value),
            Axis::Y => Point::new(value, slot),
        }
    }
}

/// Contents of one slot in translated coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ColumnExtremes {
    Empty,
    Occupied { ly: i64, hy: i64 },
}

impl ColumnExtremes {
    pub fn is_empty(&self) -> bool {
        matches!(self, ColumnExtremes::Empty)
    }

    /// Number of distinct points the slot holds (0, 1 or 2).
    pub fn point_count(&self) -> usize {
        match *self {
            ColumnExtremes::Empty => 0,
            ColumnExtremes::Occupied { ly, hy } if ly == hy => 1,
            ColumnExtremes::Occupied { .. } => 2,
        }
    }
}

/// Raw slot storage. Empty is `lo > hi`, which no real min/max pair can be.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Slot {
    lo: i64,
    hi: i64,
}

impl Slot {
    const EMPTY: Slot = Slot {
        lo: i64::MAX,
        hi: i64::MIN,
    };

    #[inline(always)]
    fn is_empty(self) -> bool {
        self.lo > self.hi
    }
}

/// Per-slot extremes produced by [`reduce`], plus an occupancy index of the
/// non-empty slots.
///
/// Values are kept in the caller's original frame; `offset` maps the
/// translated frame back (`original = translated + offset`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalArray {
    axis: Axis,
    slots: Vec<Slot>,
    offset: Point,
    occupancy: Occupancy,
}

impl ExtremalArray {
    fn empty(axis: Axis, p: usize, offset: Point, kind: OccupancyKind) -> Self {
        ExtremalArray {
            axis,
            slots: vec![Slot::EMPTY; p],
            offset,
            occupancy: Occupancy::new(kind, p),
        }
    }

    pub fn axis(&self) -> Axis {
        self.axis
    }

    /// Slot count (`p` for an x scan, `q` for a y scan).
    pub fn len(&self) -> usize {
        self.slots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slots.is_empty()
    }

    pub fn offset(&self) -> Point {
        self.offset
    }

    pub fn occupancy(&self) -> &Occupancy {
        &self.occupancy
    }

    /// Slot `i` (1-based) in translated coordinates.
    pub fn get(&self, i: usize) -> Option<ColumnExtremes> {
        let slot = *self.slots.get(i.checked_sub(1)?)?;
        if slot.is_empty() {
            return Some(ColumnExtremes::Empty);
        }
        let shift = self.value_shift();
        Some(ColumnExtremes::Occupied {
            ly: slot.lo - shift,
            hy: slot.hi - shift,
        })
    }

    /// All slots in order, translated.
    pub fn entries(&self) -> Vec<ColumnExtremes> {
        (1..=self.len()).map(|i| self.get(i).unwrap()).collect()
    }

    /// Number of valid points `s`.
    pub fn valid_count(&self) -> usize {
        let mut s = 0;
        self.occupancy.for_each(|i| {
            let slot = self.slots[i - 1];
            s += if slot.lo == slot.hi { 1 } else { 2 };
        });
        s
    }

    /// Valid points in chain order, in the original frame.
    pub fn valid_points(&self) -> Vec<Point> {
        let mut out = Vec::new();
        self.visit_valid(|p| out.push(p));
        out
    }

    /// Valid points in chain order, in the translated frame.
    pub fn translated_points(&self) -> Vec<Point> {
        let off = self.offset;
        self.valid_points()
            .into_iter()
            .map(|p| Point::new(p.x - off.x, p.y - off.y))
            .collect()
    }

    /// Walks occupied slots in increasing order, emitting low then high.
    #[inline]
    fn visit_valid(&self, mut f: impl FnMut(Point)) {
        let slot_shift = self.slot_shift();
        let axis = self.axis;
        self.occupancy.for_each(|i| {
            let slot = self.slots[i - 1];
            let at = i as i64 + slot_shift;
            f(axis.join(at, slot.lo));
            if slot.hi != slot.lo {
                f(axis.join(at, slot.hi));
            }
        });
    }

    fn slot_shift(&self) -> i64 {
        self.axis.split(self.offset).0
    }

    fn value_shift(&self) -> i64 {
        self.axis.split(self.offset).1
    }

    /// Range of the stored values over all occupied slots, original frame.
    fn value_range(&self) -> Option<(i64, i64)> {
        let mut range: Option<(i64, i64)> = None;
        self.occupancy.for_each(|i| {
            let s = self.slots[i - 1];
            range = Some(match range {
                None => (s.lo, s.hi),
                Some((lo, hi)) => (lo.min(s.lo), hi.max(s.hi)),
            });
        });
        range
    }

    /// One line per slot: `i ly hy` for occupied slots and `i <p+1> -1` for
    /// empty ones, translated coordinates.
    pub fn to_text(&self) -> String {
        let empty_marker = self.len() + 1;
        let mut out = String::new();
        for (idx, entry) in self.entries().into_iter().enumerate() {
            let i = idx + 1;
            match entry {
                ColumnExtremes::Empty => writeln!(out, "{i} {empty_marker} -1"),
                ColumnExtremes::Occupied { ly, hy } => writeln!(out, "{i} {ly} {hy}"),
            }
            .unwrap();
        }
        out
    }

    /// Parses the [`to_text`](Self::to_text) format back into an x-axis array
    /// with zero offset.
    pub fn from_text(text: &str, kind: OccupancyKind) -> Result<Self> {
        let mut rows = Vec::new();
        for (n, line) in text.lines().enumerate() {
            let line_no = n + 1;
            if line.trim().is_empty() {
                continue;
            }
            let fields: Vec<i64> = line
                .split_whitespace()
                .map(|f| f.parse::<i64>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|e| Error::Parse {
                    line: line_no,
                    message: e.to_string(),
                })?;
            let [i, ly, hy] = fields[..] else {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("expected 3 fields, found {}", fields.len()),
                });
            };
            if i != rows.len() as i64 + 1 {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("slot {i} out of sequence"),
                });
            }
            rows.push((ly, hy));
        }
        let p = rows.len();
        let mut arr = ExtremalArray::empty(Axis::X, p, Point::new(0, 0), kind);
        for (idx, (ly, hy)) in rows.into_iter().enumerate() {
            if ly == p as i64 + 1 && hy == -1 {
                continue;
            }
            if ly > hy {
                return Err(Error::Parse {
                    line: idx + 1,
                    message: format!("ly {ly} > hy {hy}"),
                });
            }
            arr.slots[idx] = Slot { lo: ly, hi: hy };
            arr.occupancy.insert_unchecked(idx + 1);
        }
        Ok(arr)
    }
}

/// Shifts points so the box minimum lands on `(1, 1)`.
pub fn translate(points: &[Point], bbox: &BoundingBox) -> Vec<Point> {
    points
        .iter()
        .map(|p| Point::new(p.x - bbox.x_min + 1, p.y - bbox.y_min + 1))
        .collect()
}

/// Buckets translated points (`1 <= x <= p`, `y >= 1`) into `p` column slots.
pub fn reduce(points: &[Point], p: usize) -> Result<ExtremalArray> {
    reduce_with(points, p, OccupancyKind::Array)
}

pub fn reduce_with(points: &[Point], p: usize, kind: OccupancyKind) -> Result<ExtremalArray> {
    for &pt in points {
        if pt.x < 1 || pt.x as u64 > p as u64 || pt.y < 1 {
            return Err(Error::CoordinateOutOfRange { point: pt, p });
        }
    }
    Ok(reduce_along(points, Axis::X, 1, p, Point::new(0, 0), kind))
}

/// Single pass over `points`, slot index `key - key_min`.
///
/// Caller guarantees every key is in `key_min..key_min + slots`.
fn reduce_along(
    points: &[Point],
    axis: Axis,
    key_min: i64,
    slots: usize,
    offset: Point,
    kind: OccupancyKind,
) -> ExtremalArray {
    let mut arr = ExtremalArray::empty(axis, slots, offset, kind);
    let table = arr.slots.as_mut_slice();
    let occupancy = &mut arr.occupancy;
    for &pt in points {
        let (key, value) = axis.split(pt);
        let j = key.wrapping_sub(key_min) as usize;
        let slot = &mut table[j];
        if slot.is_empty() {
            occupancy.insert_unchecked(j + 1);
            *slot = Slot { lo: value, hi: value };
        } else {
            slot.lo = slot.lo.min(value);
            slot.hi = slot.hi.max(value);
        }
    }
    arr
}

/// Re-buckets the valid points of `arr` along the other axis.
pub fn second_scan(arr: &ExtremalArray) -> ExtremalArray {
    let kind = arr.occupancy.kind();
    let axis = arr.axis.other();
    let Some((lo, hi)) = arr.value_range() else {
        return ExtremalArray::empty(axis, 0, arr.offset, kind);
    };
    let points = arr.valid_points();
    let shift = arr.value_shift();
    // Slots cover translated values 1..=hi - shift.
    let slots = (hi - shift) as usize;
    debug_assert!(lo - shift >= 1);
    reduce_along(&points, axis, shift + 1, slots, arr.offset, kind)
}

/// A simple polygonal chain through the valid points of an [`ExtremalArray`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolygonalChain {
    vertices: Vec<Point>,
}

impl PolygonalChain {
    /// Wraps a vertex list the caller knows to be simple.
    pub fn from_vertices(vertices: Vec<Point>) -> Self {
        PolygonalChain { vertices }
    }

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

    /// Quadratic check that no two edges cross or overlap except adjacent
    /// edges meeting at their shared vertex.
    pub fn is_simple(&self) -> bool {
        let v = &self.vertices;
        if v.windows(2).any(|w| w[0] == w[1]) {
            return false;
        }
        let edges = v.len().saturating_sub(1);
        for i in 0..edges {
            for j in i + 1..edges {
                let (a, b, c, d) = (v[i], v[i + 1], v[j], v[j + 1]);
                if j == i + 1 {
                    if folds_back(a, b, d) {
                        return false;
                    }
                } else if segments_intersect(a, b, c, d) {
                    return false;
                }
            }
        }
        true
    }
}

/// For edges `a-b` and `b-c`: true when `c` doubles back along `a-b`.
fn folds_back(a: Point, b: Point, c: Point) -> bool {
    if orientation(a, b, c) != Orientation::Zero {
        return false;
    }
    let dot = (a.x as i128 - b.x as i128) * (c.x as i128 - b.x as i128)
        + (a.y as i128 - b.y as i128) * (c.y as i128 - b.y as i128);
    dot > 0
}

fn segments_intersect(a: Point, b: Point, c: Point, d: Point) -> bool {
    use crate::geometry::on_segment;
    let o1 = orientation(a, b, c);
    let o2 = orientation(a, b, d);
    let o3 = orientation(c, d, a);
    let o4 = orientation(c, d, b);
    if o1 != o2 && o3 != o4 && o1 != Orientation::Zero && o2 != Orientation::Zero
        && o3 != Orientation::Zero && o4 != Orientation::Zero
    {
        return true;
    }
    on_segment(a, b, c) || on_segment(a, b, d) || on_segment(c, d, a) || on_segment(c, d, b)
}

/// Builds the chain: slots in increasing order, low before high in a slot,
/// empty slots skipped. Vertices are in the original frame.
pub fn build_polyline(arr: &ExtremalArray) -> Result<PolygonalChain> {
    let vertices = arr.valid_points();
    if vertices.is_empty() {
        return Err(Error::EmptyInput);
    }
    Ok(PolygonalChain { vertices })
}

/// Which axis [`precondition`] buckets along first.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum AxisChoice {
    #[default]
    X,
    Y,
    /// The axis with fewer slots, `min(p, q)`.
    Auto,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PreconditionOptions {
    pub axis: AxisChoice,
    pub second_scan: bool,
    pub occupancy: OccupancyKind,
}

/// Wall time of each preconditioning step.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct StepTimings {
    pub bounds: Duration,
    pub reduce: Duration,
    pub second_scan: Duration,
    pub polyline: Duration,
}

impl StepTimings {
    pub fn total(&self) -> Duration {
        self.bounds + self.reduce + self.second_scan + self.polyline
    }
}

#[derive(Clone, Debug)]
pub struct Reduction {
    pub bbox: BoundingBox,
    pub array: ExtremalArray,
    pub chain: PolygonalChain,
    pub timings: StepTimings,
}

impl Reduction {
    pub fn valid_count(&self) -> usize {
        self.chain.len()
    }
}

/// Bounds, translate, reduce, optional second scan, then polyline.
///
/// Translation is folded into the reduce pass as a slot offset. When only an
/// x scan is requested the bounds step computes just `x_min`/`x_max`; the y
/// range is then read off the reduced slots.
pub fn precondition(points: &[Point], options: PreconditionOptions) -> Result<Reduction> {
    if points.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut timings = StepTimings::default();

    let t = Instant::now();
    let x_only = options.axis == AxisChoice::X && !options.second_scan;
    let partial = if x_only {
        let (lo, hi) = x_range(points);
        BoundingBox {
            x_min: lo,
            x_max: hi,
            y_min: 0,
            y_max: 0,
        }
    } else {
        find_bounds(points)?
    };
    timings.bounds = t.elapsed();

    let axis = match options.axis {
        AxisChoice::X => Axis::X,
        AxisChoice::Y => Axis::Y,
        AxisChoice::Auto if partial.height() < partial.width() => Axis::Y,
        AxisChoice::Auto => Axis::X,
    };

    let t = Instant::now();
    let (key_min, slots) = match axis {
        Axis::X => (partial.x_min, partial.width()),
        Axis::Y => (partial.y_min, partial.height()),
    };
    let slots = usize::try_from(slots).map_err(|_| Error::BoxTooLarge { slots })?;
    let offset = if x_only {
        Point::new(partial.x_min - 1, 0)
    } else {
        Point::new(partial.x_min - 1, partial.y_min - 1)
    };
    let mut array = reduce_along(points, axis, key_min, slots, offset, options.occupancy);
    let bbox = if x_only {
        let (y_min, y_max) = array.value_range().expect("non-empty input");
        array.offset = Point::new(offset.x, y_min - 1);
        BoundingBox {
            y_min,
            y_max,
            ..partial
        }
    } else {
        partial
    };
    timings.reduce = t.elapsed();

    if options.second_scan {
        let t = Instant::now();
        array = second_scan(&array);
        timings.second_scan = t.elapsed();
    }

    let t = Instant::now();
    let chain = build_polyline(&array)?;
    timings.polyline = t.elapsed();

    Ok(Reduction {
        bbox,
        array,
        chain,
        timings,
    })
}

fn x_range(points: &[Point]) -> (i64, i64) {
    points
        .iter()
        .fold((i64::MAX, i64::MIN), |(lo, hi), p| (lo.min(p.x), hi.max(p.x)))
}
