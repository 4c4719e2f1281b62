use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::FamilyError;
use crate::geometry::Polyomino;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Direction {
    N,
    E,
    S,
    W,
}

impl Direction {
    fn step(self) -> (i64, i64) {
        match self {
            Direction::N => (0, 1),
            Direction::E => (1, 0),
            Direction::S => (0, -1),
            Direction::W => (-1, 0),
        }
    }
}

/// A straight segment of `length` cells; consecutive runs share their corner cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Run {
    pub direction: Direction,
    pub length: u32,
}

impl Run {
    pub const fn new(direction: Direction, length: u32) -> Self {
        Run { direction, length }
    }
}

impl fmt::Display for Run {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.direction, self.length)
    }
}

impl FromStr for Run {
    type Err = String;

    /// `N3`, `e2`, ...
    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim();
        let mut chars = s.chars();
        let direction = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('N') => Direction::N,
            Some('E') => Direction::E,
            Some('S') => Direction::S,
            Some('W') => Direction::W,
            _ => return Err(format!("run `{s}` must start with N, E, S or W")),
        };
        let length = chars
            .as_str()
            .parse()
            .map_err(|_| format!("run `{s}` needs a cell count after the direction"))?;
        Ok(Run { direction, length })
    }
}

#[derive(Debug, Clone)]
pub struct ThinCycle {
    pub polyomino: Polyomino,
    /// Smallest cell count of a maximal inner interval.
    pub min_interval_length: u32,
}

/// Walks the runs from the origin cell and closes the loop.
pub fn make_thin_cycle(runs: &[Run]) -> Result<ThinCycle, FamilyError> {
    let mut pos = (0i64, 0i64);
    let mut cells = vec![pos];
    for (k, run) in runs.iter().enumerate() {
        if run.length < 2 {
            return Err(FamilyError::RunTooShort(k));
        }
        let (dx, dy) = run.direction.step();
        for _ in 1..run.length {
            pos = (pos.0 + dx, pos.1 + dy);
            cells.push(pos);
        }
    }
    if pos != (0, 0) {
        return Err(FamilyError::DoesNotClose(pos.0, pos.1));
    }
    cells.pop();
    let mut seen = HashSet::new();
    if let Some(&(x, y)) = cells.iter().find(|c| !seen.insert(**c)) {
        return Err(FamilyError::SelfOverlap(x, y));
    }
    let polyomino = Polyomino::from_coords(cells)?;
    if !polyomino.is_thin_cycle() {
        return Err(FamilyError::NotThinCycle);
    }
    let min_interval_length = polyomino
        .maximal_inner_intervals()
        .iter()
        .map(|i| i.length())
        .min()
        .expect("nonempty");
    Ok(ThinCycle {
        polyomino,
        min_interval_length,
    })
}
