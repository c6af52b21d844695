//! Column min/max preconditioning for 2D convex hulls of integer point sets.
//!
//! The reducer buckets `n` points by column and keeps only each column's
//! lowest and highest point. That leaves at most `2p` points for a box `p`
//! columns wide, with the same convex hull. The survivors come out as a
//! simple polygonal chain, so Melkman's linear-time algorithm can finish the
//! job; QuickHull, Graham scan and Jarvis march work on them as a plain set.
//!
//! ```
//! use hullprep::geometry::Point;
//! use hullprep::reducer::{precondition, PreconditionOptions};
//! use hullprep::hulls::{graham_scan, melkman};
//!
//! let points: Vec<Point> = (0..40)
//!     .flat_map(|x| (0..40).map(move |y| Point::new(x, (x * 7 + y * 13) % 53)))
//!     .collect();
//! let reduced = precondition(&points, PreconditionOptions::default()).unwrap();
//! assert!(reduced.valid_count() <= 80);
//! assert_eq!(melkman(&reduced.chain).unwrap(), graham_scan(&points).unwrap());
//! ```

pub mod baselines;
pub mod geometry;
pub mod harness;
pub mod hulls;
pub mod occupancy;
pub mod reducer;

pub use geometry::{canonicalize_hull, find_bounds, orientation, BoundingBox, Hull, Orientation, Point};
pub use reducer::{
    build_polyline, precondition, reduce, second_scan, translate, ExtremalArray, PolygonalChain,
    PreconditionOptions,
};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("empty input")]
    EmptyInput,
    #[error("slot {index} out of range 1..={len}")]
    SlotOutOfRange { index: usize, len: usize },
    #[error("point {point} outside [1, {p}] x [1, ..]")]
    CoordinateOutOfRange { point: Point, p: usize },
    #[error("bounding box needs {slots} slots, more than addressable")]
    BoxTooLarge { slots: u64 },
    #[error("brute-force hull limited to {limit} points, got {n}")]
    OracleLimit { n: usize, limit: usize },
    #[error("unknown {kind} `{name}`")]
    UnknownName { kind: &'static str, name: String },
    #[error("{algo} cannot run after {method}")]
    Incompatible { method: String, algo: String },
    #[error("hull mismatch for {method}/{algo}: raw has {raw} vertices, reduced has {reduced}")]
    HullMismatch {
        method: String,
        algo: String,
        raw: usize,
        reduced: usize,
    },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("not enough data: {0}")]
    InsufficientData(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
