//! Grid combinatorics: vertices, cells, intervals and polyominoes on ℕ².

mod cycle;
mod isometry;
mod pattern;
mod polyomino;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use cycle::CycleReading;
pub use isometry::Isometry;
pub use pattern::{Pattern, PatternId};
pub use polyomino::{Polyomino, Transported};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("empty cell set")]
    Empty,
    #[error("cells are not edge-connected")]
    NotConnected,
    #[error("interval corners out of order: {0} is not below-left of {1}")]
    InvalidInterval(Vertex, Vertex),
    #[error("unknown pattern `{0}`")]
    UnknownPattern(String),
    #[error("coordinate out of range")]
    CoordinateOverflow,
}

/// A lattice point of ℕ².
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Vertex {
    pub x: u32,
    pub y: u32,
}

impl Vertex {
    pub const fn new(x: u32, y: u32) -> Self {
        Vertex { x, y }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// The unit square `[lower_left, lower_left + (1,1)]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Cell {
    pub lower_left: Vertex,
}

impl Cell {
    pub const fn new(x: u32, y: u32) -> Self {
        Cell {
            lower_left: Vertex::new(x, y),
        }
    }

    pub fn x(&self) -> u32 {
        self.lower_left.x
    }

    pub fn y(&self) -> u32 {
        self.lower_left.y
    }

    /// Corners in the order lower-left, lower-right, upper-left, upper-right.
    pub fn vertices(&self) -> [Vertex; 4] {
        let Vertex { x, y } = self.lower_left;
        [
            Vertex::new(x, y),
            Vertex::new(x + 1, y),
            Vertex::new(x, y + 1),
            Vertex::new(x + 1, y + 1),
        ]
    }

    pub fn interval(&self) -> Interval {
        let Vertex { x, y } = self.lower_left;
        Interval {
            lower_left: self.lower_left,
            upper_right: Vertex::new(x + 1, y + 1),
        }
    }

    /// Edge neighbours that stay inside ℕ².
    pub fn neighbors(&self) -> impl Iterator<Item = Cell> {
        let (x, y) = (self.x() as i64, self.y() as i64);
        [(x - 1, y), (x + 1, y), (x, y - 1), (x, y + 1)]
            .into_iter()
            .filter(|&(a, b)| a >= 0 && b >= 0)
            .map(|(a, b)| Cell::new(a as u32, b as u32))
    }

    /// True if the two cells have at least one vertex in common.
    pub fn touches(&self, other: &Cell) -> bool {
        self.x().abs_diff(other.x()) <= 1 && self.y().abs_diff(other.y()) <= 1
    }

    pub fn shares_edge(&self, other: &Cell) -> bool {
        self.x().abs_diff(other.x()) + self.y().abs_diff(other.y()) == 1
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.lower_left)
    }
}

/// An axis-parallel interval `[lower_left, upper_right]` of ℕ².
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Interval {
    lower_left: Vertex,
    upper_right: Vertex,
}

impl Interval {
    pub fn new(lower_left: Vertex, upper_right: Vertex) -> Result<Self, GeometryError> {
        if lower_left.x > upper_right.x || lower_left.y > upper_right.y {
            return Err(GeometryError::InvalidInterval(lower_left, upper_right));
        }
        Ok(Interval {
            lower_left,
            upper_right,
        })
    }

    /// The interval whose anti-diagonal corners are `c` and `d`, in either order.
    /// `None` unless one of them is strictly up-left of the other.
    pub fn from_anti_diagonal(c: Vertex, d: Vertex) -> Option<Self> {
        let (ul, lr) = if c.x < d.x { (c, d) } else { (d, c) };
        (ul.x < lr.x && ul.y > lr.y).then(|| Interval {
            lower_left: Vertex::new(ul.x, lr.y),
            upper_right: Vertex::new(lr.x, ul.y),
        })
    }

    pub fn lower_left(&self) -> Vertex {
        self.lower_left
    }

    pub fn upper_right(&self) -> Vertex {
        self.upper_right
    }

    pub fn upper_left(&self) -> Vertex {
        Vertex::new(self.lower_left.x, self.upper_right.y)
    }

    pub fn lower_right(&self) -> Vertex {
        Vertex::new(self.upper_right.x, self.lower_left.y)
    }

    pub fn is_proper(&self) -> bool {
        self.lower_left.x < self.upper_right.x && self.lower_left.y < self.upper_right.y
    }

    pub fn diagonal_corners(&self) -> (Vertex, Vertex) {
        (self.lower_left, self.upper_right)
    }

    /// `(upper_left, lower_right)`.
    pub fn anti_diagonal_corners(&self) -> (Vertex, Vertex) {
        (self.upper_left(), self.lower_right())
    }

    pub fn width(&self) -> u32 {
        self.upper_right.x - self.lower_left.x
    }

    pub fn height(&self) -> u32 {
        self.upper_right.y - self.lower_left.y
    }

    /// Number of cells.
    pub fn length(&self) -> u32 {
        self.width() * self.height()
    }

    pub fn contains(&self, other: &Interval) -> bool {
        self.lower_left.x <= other.lower_left.x
            && self.lower_left.y <= other.lower_left.y
            && other.upper_right.x <= self.upper_right.x
            && other.upper_right.y <= self.upper_right.y
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        (self.lower_left.y..self.upper_right.y).flat_map(move |y| {
            (self.lower_left.x..self.upper_right.x).map(move |x| Cell::new(x, y))
        })
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.lower_left, self.upper_right)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn anti_diagonal_round_trip() {
        let i = Interval::new(Vertex::new(1, 2), Vertex::new(4, 3)).unwrap();
        let (c, d) = i.anti_diagonal_corners();
        assert_eq!(c, Vertex::new(1, 3));
        assert_eq!(d, Vertex::new(4, 2));
        assert_eq!(Interval::from_anti_diagonal(d, c), Some(i));
        assert_eq!(Interval::from_anti_diagonal(Vertex::new(0, 0), Vertex::new(1, 1)), None);
    }

    #[test]
    fn interval_rejects_reversed_corners() {
        assert!(Interval::new(Vertex::new(2, 0), Vertex::new(1, 1)).is_err());
        let flat = Interval::new(Vertex::new(0, 0), Vertex::new(3, 0)).unwrap();
        assert!(!flat.is_proper());
        assert_eq!(flat.length(), 0);
    }

    #[test]
    fn cell_has_four_vertices() {
        let c = Cell::new(3, 5);
        let v = c.vertices();
        let set: std::collections::BTreeSet<_> = v.iter().collect();
        assert_eq!(set.len(), 4);
        assert_eq!(c.interval().length(), 1);
    }
}
