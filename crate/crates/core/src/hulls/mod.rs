//! Convex hull algorithms. All return a canonical strict [`Hull`].
//!
//! [`Hull`]: crate::geometry::Hull

mod brute;
mod graham;
mod jarvis;
mod melkman;
mod quickhull;

pub use brute::{brute_force_hull, brute_force_hull_with_limit, BRUTE_FORCE_LIMIT};
pub use graham::graham_scan;
pub use jarvis::jarvis_march;
pub use melkman::melkman;
pub use quickhull::quickhull;

use std::fmt;
use std::str::FromStr;

use crate::geometry::{Hull, Point};
use crate::reducer::PolygonalChain;
use crate::{Error, Result};

/// The final hull algorithm run after (or without) preconditioning.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HullAlgorithm {
    QuickHull,
    Graham,
    Jarvis,
    Melkman,
}

impl HullAlgorithm {
    pub const ALL: [HullAlgorithm; 4] = [
        HullAlgorithm::QuickHull,
        HullAlgorithm::Graham,
        HullAlgorithm::Jarvis,
        HullAlgorithm::Melkman,
    ];

    pub fn name(self) -> &'static str {
        match self {
            HullAlgorithm::QuickHull => "quickhull",
            HullAlgorithm::Graham => "graham",
            HullAlgorithm::Jarvis => "jarvis",
            HullAlgorithm::Melkman => "melkman",
        }
    }

    /// True if the algorithm needs its input ordered as a simple chain.
    pub fn needs_chain(self) -> bool {
        self == HullAlgorithm::Melkman
    }

    /// Runs a set-based algorithm on an unordered point set.
    pub fn run_on_points(self, points: &[Point]) -> Result<Hull> {
        match self {
            HullAlgorithm::QuickHull => quickhull(points),
            HullAlgorithm::Graham => graham_scan(points),
            HullAlgorithm::Jarvis => jarvis_march(points),
            HullAlgorithm::Melkman => Err(Error::Incompatible {
                method: "unordered points".into(),
                algo: self.name().into(),
            }),
        }
    }

    /// Runs on a chain; set-based algorithms ignore the ordering.
    pub fn run_on_chain(self, chain: &PolygonalChain) -> Result<Hull> {
        match self {
            HullAlgorithm::Melkman => melkman(chain),
            other => other.run_on_points(chain.vertices()),
        }
    }
}

impl fmt::Display for HullAlgorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for HullAlgorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        HullAlgorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::UnknownName {
                kind: "hull algorithm",
                name: s.to_string(),
            })
    }
}

/// Sorted, deduplicated copy of `points`.
pub(crate) fn distinct_sorted(points: &[Point]) -> Vec<Point> {
    let mut pts = points.to_vec();
    pts.sort_unstable();
    pts.dedup();
    pts
}
